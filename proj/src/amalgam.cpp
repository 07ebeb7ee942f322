#include "msg/amalgam.hpp"

#include <algorithm>
#include <numeric>

#include "msg/errors.hpp"

namespace msg {

namespace {

// Points covered by a subgroup (the orbit of point 0 under a group sitting
// inside the regular representation).
std::vector<int> subgroup_points(const PermutationGroup& h) {
  std::vector<int> pts;
  pts.reserve(h.order());
  for (const auto& p : h.elements()) pts.push_back(p.images()[0]);
  std::sort(pts.begin(), pts.end());
  return pts;
}

// Assigns each point its right-coset id, numbering cosets by least point.
// coset_of[q] = id of the coset H g_q; returns the number of cosets.
int partition_points(const std::vector<const Permutation*>& elem_of_point,
                     const std::vector<int>& h_points,
                     std::vector<int>& coset_of) {
  const int n = static_cast<int>(elem_of_point.size());
  coset_of.assign(n, -1);
  int next = 0;
  for (int q = 0; q < n; ++q) {
    if (coset_of[q] >= 0) continue;
    const auto& img = elem_of_point[q]->images();
    for (int s : h_points) coset_of[img[s]] = next;
    ++next;
  }
  return next;
}

bool contains_all(const PermutationGroup& big, const PermutationGroup& small) {
  for (const auto& p : small.elements())
    if (!big.contains(p)) return false;
  return true;
}

}  // namespace

MSGraph build_graph(const ArcData& arc) {
  const auto& g = arc.group;
  const int n = g.degree();
  if (static_cast<long long>(g.order()) != n)
    throw NotRegular("arc group is not in its regular representation");
  if (arc.h_a.degree() != n || arc.h_b.degree() != n || arc.h_e.degree() != n)
    throw NotSubgroupTriple("subgroup degree mismatch");
  if (!contains_all(g, arc.h_a) || !contains_all(g, arc.h_b))
    throw NotSubgroupTriple("vertex group not inside the arc group");
  if (!contains_all(arc.h_a, arc.h_e) || !contains_all(arc.h_b, arc.h_e))
    throw NotSubgroupTriple("edge group not inside both vertex groups");

  std::vector<const Permutation*> elem_of_point(n, nullptr);
  for (const auto& p : g.elements()) {
    int q = p.images()[0];
    if (elem_of_point[q] != nullptr)
      throw NotRegular("two elements through one point");
    elem_of_point[q] = &p;
  }

  std::vector<int> a_of, b_of, e_of;
  const int n_a = partition_points(elem_of_point, subgroup_points(arc.h_a), a_of);
  const int n_b = partition_points(elem_of_point, subgroup_points(arc.h_b), b_of);
  const int n_e = partition_points(elem_of_point, subgroup_points(arc.h_e), e_of);

  if (static_cast<size_t>(n_a) * arc.h_a.order() != static_cast<size_t>(n) ||
      static_cast<size_t>(n_b) * arc.h_b.order() != static_cast<size_t>(n) ||
      static_cast<size_t>(n_e) * arc.h_e.order() != static_cast<size_t>(n))
    throw NotSubgroupTriple("coset counts disagree with subgroup orders");

  MSGraph out;
  out.n_a = n_a;
  out.n_b = n_b;
  out.vertex_side.assign(static_cast<size_t>(n_a) + n_b, 'A');
  for (int v = n_a; v < n_a + n_b; ++v) out.vertex_side[v] = 'B';

  out.edge_ends.resize(n_e);
  out.edge_min_point.assign(n_e, -1);
  for (int q = 0; q < n; ++q) {
    int k = e_of[q];
    if (out.edge_min_point[k] < 0) {
      out.edge_min_point[k] = q;
      out.edge_ends[k] = {a_of[q], n_a + b_of[q]};
    }
  }

  std::vector<std::pair<int, int>> edges(out.edge_ends);
  out.graph = Multigraph(n_a + n_b, edges);

  out.action.reserve(g.order());
  for (const auto& p : g.elements()) {
    const auto& img = p.images();
    std::vector<uint16_t> row(n_e);
    for (int k = 0; k < n_e; ++k)
      row[k] = static_cast<uint16_t>(e_of[img[out.edge_min_point[k]]]);
    out.action.push_back(std::move(row));
  }

  return out;
}

EulerData euler_check(const ArcData& arc, const MSGraph& g) {
  EulerData data;
  data.order = static_cast<long long>(arc.group.order());
  const long long v = g.n_a + g.n_b;
  const long long e = static_cast<long long>(g.edge_ends.size());
  data.chi_graph = v - e;
  data.chi_quotient =
      Fraction(1, static_cast<long long>(arc.h_a.order())) +
      Fraction(1, static_cast<long long>(arc.h_b.order())) -
      Fraction(1, static_cast<long long>(arc.h_e.order()));
  Fraction lifted(data.chi_graph, data.order);
  if (lifted != data.chi_quotient)
    throw EulerMismatch("Euler characteristic identity fails: " +
                             data.chi_quotient.str() + " vs " + lifted.str());
  return data;
}

long long genus(const MSGraph& g) {
  if (!is_connected(g.graph)) throw Disconnected("graph is disconnected");
  return static_cast<long long>(g.edge_ends.size()) - (g.n_a + g.n_b) + 1;
}

ActionReport verify_action(const MSGraph& g) {
  ActionReport report;
  const int n_e = static_cast<int>(g.edge_ends.size());
  const int n_v = g.n_a + g.n_b;
  report.automorphic = true;

  for (const auto& row : g.action) {
    // Vertex images induced by the edge action must be well defined and
    // must send the ends of every edge to the ends of the image edge.
    std::vector<int> vmap(n_v, -1);
    bool ok = true;
    for (int k = 0; k < n_e && ok; ++k) {
      auto [a, b] = g.edge_ends[k];
      auto [ia, ib] = g.edge_ends[row[k]];
      if (vmap[a] == -1) vmap[a] = ia;
      else if (vmap[a] != ia) ok = false;
      if (vmap[b] == -1) vmap[b] = ib;
      else if (vmap[b] != ib) ok = false;
    }
    if (ok) {
      std::vector<char> seen(n_e, 0);
      for (int k = 0; k < n_e; ++k) {
        if (seen[row[k]]) { ok = false; break; }
        seen[row[k]] = 1;
      }
    }
    if (ok) {
      std::vector<char> seen(n_v, 0);
      for (int v = 0; v < n_v && ok; ++v) {
        if (vmap[v] == -1) continue;  // isolated vertices cannot occur
        if (seen[vmap[v]]) ok = false;
        else seen[vmap[v]] = 1;
      }
    }
    if (!ok) report.automorphic = false;

    bool trivial = true;
    for (int k = 0; k < n_e; ++k)
      if (row[k] != k) { trivial = false; break; }
    if (trivial) ++report.kernel_size;
  }

  report.faithful = (report.kernel_size == 1);
  return report;
}

}  // namespace msg
