#ifndef MSG_GRAPHS_HPP
#define MSG_GRAPHS_HPP

#include <chrono>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "msg/errors.hpp"

namespace msg {

// Finite multigraph; loops and parallel edges allowed.  Edges are stored as
// normalized (min,max) pairs and sorted, so equal graphs compare equal.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int n, std::vector<std::pair<int, int>> edges);

  int n_vertices() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  long long n_edges() const { return (long long)edges_.size(); }
  std::vector<int> degrees() const;  // a loop adds 2 to its vertex

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

struct InvariantSet {
  std::map<int, int> degree_hist;  // degree -> vertex count
  long long edge_count = 0;
  int diameter = 0;
  std::optional<int> girth;  // nullopt = acyclic

  friend bool operator==(const InvariantSet& a, const InvariantSet& b) {
    return a.degree_hist == b.degree_hist && a.edge_count == b.edge_count &&
           a.diameter == b.diameter && a.girth == b.girth;
  }
};

bool is_connected(const Multigraph& g);

// Degree histogram, edge count, diameter (edge hops), girth (a loop is a
// 1-cycle, a parallel pair a 2-cycle).  Throws Disconnected.
InvariantSet invariants(const Multigraph& g);

// Replace every edge by a path of length 2; the new midpoint of edge i is
// vertex n+i.
Multigraph subdivide(const Multigraph& g);

// Repeatedly suppress degree-2 vertices that carry no loop, merging their
// two incident edges, until none remain.  Inverse of subdivide on loopless
// graphs (up to isomorphism).
Multigraph smooth_degree2(const Multigraph& g);

enum class IsoVerdict { isomorphic, not_isomorphic, inconclusive };

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::inconclusive;
  std::vector<int> mapping;  // vertex of a -> vertex of b when isomorphic
};

// Backtracking search over color-refinement partitions (individualize and
// refine).  Exceeding the deadline yields an explicit inconclusive verdict,
// never a wrong answer.
IsoResult isomorphic(const Multigraph& a, const Multigraph& b,
                     std::chrono::milliseconds timeout =
                         std::chrono::milliseconds(60000));

Multigraph complete(int n);
Multigraph complete_bipartite(int m, int n);
Multigraph crown(int n);      // K_{n,n} minus a perfect matching
Multigraph dipole(int n);     // two vertices joined by n parallel edges
Multigraph hypercube(int d);
Multigraph gen_petersen(int n, int k);  // requires 1 <= k < n/2
Multigraph platonic(std::string_view name);
Multigraph wheel(int n);      // hub plus an (n-1)-cycle; wheel(4) == K4

}  // namespace msg

#endif
