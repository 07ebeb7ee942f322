#ifndef MSG_AMALGAM_HPP
#define MSG_AMALGAM_HPP

#include <string>
#include <utility>
#include <vector>

#include "msg/fraction.hpp"
#include "msg/graphs.hpp"
#include "msg/permgrp.hpp"

namespace msg {

// Group with a subgroup triple (vertex groups and edge group of a one-edge
// graph of groups).  All four act on the same points, with `group` regular.
struct ArcData {
  PermutationGroup group;
  PermutationGroup h_a;
  PermutationGroup h_b;
  PermutationGroup h_e;
  std::string label;
};

// Invariant graph rebuilt from an arc.  Vertices are right cosets of the
// vertex groups (A side first), edges right cosets of the edge group; ids
// are assigned in order of each coset's least point, which makes numbering
// deterministic.  `action[t]` is the edge permutation of group element t
// (in the group's element order).
struct MSGraph {
  Multigraph graph;
  int n_a = 0;
  int n_b = 0;
  std::vector<char> vertex_side;                 // 'A' or 'B'
  std::vector<std::pair<int, int>> edge_ends;    // edge id -> (A id, global B id)
  std::vector<int> edge_min_point;
  std::vector<std::vector<uint16_t>> action;
};

struct EulerData {
  Fraction chi_quotient;  // 1/|H_A| + 1/|H_B| - 1/|H_e|
  long long chi_graph = 0;  // V - E
  long long order = 0;
};

struct ActionReport {
  bool automorphic = false;
  bool faithful = false;
  size_t kernel_size = 0;
};

// Rebuild the invariant graph: edges are the right cosets H_e g, the edge of
// g joins the vertices H_A g and H_B g, and the group acts on everything by
// right multiplication.  Throws NotSubgroupTriple if H_e is not contained in
// H_A and H_B or the subgroups do not live inside the group.
MSGraph build_graph(const ArcData& arc);

// Exact check of the Euler identity: chi_quotient must equal
// (V - E) / |G|.  Throws EulerMismatch otherwise.
EulerData euler_check(const ArcData& arc, const MSGraph& g);

long long genus(const MSGraph& g);  // E - V + 1, requires connectivity

// Checks that every group element induces a graph automorphism (vertex maps
// well defined on both sides, incidence preserved) and reports whether the
// edge action is faithful.
ActionReport verify_action(const MSGraph& g);

}  // namespace msg

#endif
