#include "msg/graphs.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

namespace msg {

Multigraph::Multigraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw DomainError("negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw DomainError("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& [u, v] : edges_) {
    deg[u] += 1;
    deg[v] += 1;  // loops hit both branches, contributing 2
  }
  return deg;
}

namespace {

// simple adjacency (neighbors deduplicated, loops dropped)
std::vector<std::vector<int>> simple_adj(const Multigraph& g) {
  std::vector<std::vector<int>> adj(g.n_vertices());
  for (const auto& [u, v] : g.edges()) {
    if (u == v) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return adj;
}

// adjacency with multiplicities; loops kept as (v, mult)
std::vector<std::vector<std::pair<int, int>>> multi_adj(const Multigraph& g) {
  std::vector<std::map<int, int>> acc(g.n_vertices());
  for (const auto& [u, v] : g.edges()) {
    acc[u][v] += 1;
    if (u != v) acc[v][u] += 1;
  }
  std::vector<std::vector<std::pair<int, int>>> adj(g.n_vertices());
  for (int v = 0; v < g.n_vertices(); ++v)
    adj[v].assign(acc[v].begin(), acc[v].end());
  return adj;
}

std::vector<int> bfs_dist(const std::vector<std::vector<int>>& adj, int src) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
  }
  return dist;
}

}  // namespace

bool is_connected(const Multigraph& g) {
  if (g.n_vertices() == 0) return false;
  auto dist = bfs_dist(simple_adj(g), 0);
  return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

InvariantSet invariants(const Multigraph& g) {
  if (g.n_vertices() == 0) throw DomainError("invariants of the empty graph");
  InvariantSet inv;
  for (int d : g.degrees()) inv.degree_hist[d] += 1;
  inv.edge_count = g.n_edges();

  bool has_loop = false, has_parallel = false;
  for (size_t i = 0; i < g.edges().size(); ++i) {
    if (g.edges()[i].first == g.edges()[i].second) has_loop = true;
    if (i > 0 && g.edges()[i] == g.edges()[i - 1]) has_parallel = true;
  }

  auto adj = simple_adj(g);
  inv.diameter = 0;
  for (int root = 0; root < g.n_vertices(); ++root) {
    auto dist = bfs_dist(adj, root);
    int far = *std::max_element(dist.begin(), dist.end());
    if (std::count(dist.begin(), dist.end(), -1) > 0)
      throw Disconnected("graph is disconnected");
    inv.diameter = std::max(inv.diameter, far);
  }

  // shortest cycle in the simple skeleton: min over roots of the first
  // non-tree edge met by a breadth-first search from that root
  int best_cycle = -1;
  for (int root = 0; root < g.n_vertices(); ++root) {
    std::vector<int> dist(g.n_vertices(), -1), parent(g.n_vertices(), -1);
    std::deque<int> q{root};
    dist[root] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      if (best_cycle > 0 && 2 * dist[u] >= best_cycle) break;
      for (int v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push_back(v);
        } else if (v != parent[u]) {
          int c = dist[u] + dist[v] + 1;
          if (best_cycle < 0 || c < best_cycle) best_cycle = c;
        }
      }
    }
  }

  if (has_loop)
    inv.girth = 1;
  else if (has_parallel)
    inv.girth = 2;
  else if (best_cycle > 0)
    inv.girth = best_cycle;
  else
    inv.girth = std::nullopt;
  return inv;
}

Multigraph subdivide(const Multigraph& g) {
  int n = g.n_vertices();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(2 * g.edges().size());
  for (size_t i = 0; i < g.edges().size(); ++i) {
    auto [u, v] = g.edges()[i];
    int mid = n + (int)i;
    edges.push_back({u, mid});
    edges.push_back({mid, v});
  }
  return Multigraph(n + (int)g.edges().size(), std::move(edges));
}

Multigraph smooth_degree2(const Multigraph& g) {
  int n = g.n_vertices();
  std::vector<std::pair<int, int>> edges = g.edges();
  std::vector<bool> removed(n, false);
  while (true) {
    std::vector<std::vector<int>> inc(n);  // incident edge indices
    std::vector<bool> has_loop(n, false);
    for (size_t i = 0; i < edges.size(); ++i) {
      inc[edges[i].first].push_back((int)i);
      if (edges[i].first != edges[i].second)
        inc[edges[i].second].push_back((int)i);
      else
        has_loop[edges[i].first] = true;
    }
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v)
      if (!removed[v] && !has_loop[v] && inc[v].size() == 2) pick = v;
    if (pick < 0) break;
    int e1 = inc[pick][0], e2 = inc[pick][1];
    int a = edges[e1].first == pick ? edges[e1].second : edges[e1].first;
    int b = edges[e2].first == pick ? edges[e2].second : edges[e2].first;
    removed[pick] = true;
    std::vector<std::pair<int, int>> next;
    next.reserve(edges.size() - 1);
    for (size_t i = 0; i < edges.size(); ++i)
      if ((int)i != e1 && (int)i != e2) next.push_back(edges[i]);
    next.push_back({std::min(a, b), std::max(a, b)});
    edges = std::move(next);
  }
  std::vector<int> remap(n, -1);
  int m = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) remap[v] = m++;
  for (auto& [u, v] : edges) {
    u = remap[u];
    v = remap[v];
  }
  return Multigraph(m, std::move(edges));
}

// ---------------------------------------------------------------------------
// isomorphism: individualize-and-refine on the disjoint union
// ---------------------------------------------------------------------------

namespace {

struct TimeoutHit {};

class IsoSearch {
 public:
  IsoSearch(const Multigraph& a, const Multigraph& b,
            std::chrono::steady_clock::time_point deadline)
      : na_(a.n_vertices()), deadline_(deadline) {
    adj_ = multi_adj(a);
    auto adjb = multi_adj(b);
    for (auto& nb : adjb) {
      for (auto& [w, m] : nb) w += na_;
      adj_.push_back(std::move(nb));
    }
    n_ = (int)adj_.size();
  }

  IsoResult run() {
    std::vector<int> colors(n_, 0);
    std::vector<int> mapping;
    try {
      if (search(colors, mapping)) {
        IsoResult r;
        r.verdict = IsoVerdict::isomorphic;
        r.mapping = std::move(mapping);
        return r;
      }
      return {IsoVerdict::not_isomorphic, {}};
    } catch (TimeoutHit&) {
      return {IsoVerdict::inconclusive, {}};
    }
  }

 private:
  using Sig = std::pair<int, std::vector<std::pair<int, int>>>;

  // Signature-sorted refinement; returns false when the two sides disagree.
  // Each round strictly refines the partition, so an unchanged cell count
  // between consecutive rounds means stability.
  bool refine(std::vector<int>& colors) const {
    int prev = -1;
    int ncolors = 0;
    while (true) {
      std::map<Sig, int> ids;
      std::vector<Sig> sigs(n_);
      for (int v = 0; v < n_; ++v) {
        std::map<int, int> tally;
        for (const auto& [w, m] : adj_[v])
          tally[colors[w]] += (w == v ? 2 * m : m);
        sigs[v] = {colors[v], {tally.begin(), tally.end()}};
        ids.emplace(sigs[v], 0);
      }
      int next = 0;
      for (auto& [sig, id] : ids) id = next++;
      for (int v = 0; v < n_; ++v) colors[v] = ids[sigs[v]];
      ncolors = next;
      if (next == prev) break;
      prev = next;
    }
    // cells must have equal size on both sides
    std::vector<int> ca(ncolors, 0), cb(ncolors, 0);
    for (int v = 0; v < n_; ++v) (v < na_ ? ca : cb)[colors[v]] += 1;
    return ca == cb;
  }

  bool search(std::vector<int> colors, std::vector<int>& mapping) {
    if (std::chrono::steady_clock::now() > deadline_) throw TimeoutHit{};
    if (!refine(colors)) return false;

    // smallest non-singleton cell (per side); -1 if discrete
    int ncolors = 1 + *std::max_element(colors.begin(), colors.end());
    std::vector<int> count(ncolors, 0);
    for (int v = 0; v < na_; ++v) count[colors[v]] += 1;
    int cell = -1;
    for (int c = 0; c < ncolors; ++c)
      if (count[c] >= 2 && (cell < 0 || count[c] < count[cell])) cell = c;

    if (cell < 0) {
      std::vector<int> map_ab(na_, -1), owner(ncolors, -1);
      for (int v = 0; v < na_; ++v) owner[colors[v]] = v;
      for (int v = na_; v < n_; ++v) {
        if (owner[colors[v]] < 0) return false;
        map_ab[owner[colors[v]]] = v - na_;
      }
      if (!check_mapping(map_ab)) return false;
      mapping = std::move(map_ab);
      return true;
    }

    int v = -1;
    for (int u = 0; u < na_; ++u)
      if (colors[u] == cell) {
        v = u;
        break;
      }
    for (int w = na_; w < n_; ++w) {
      if (colors[w] != cell) continue;
      std::vector<int> next = colors;
      next[v] = next[w] = ncolors;
      if (search(std::move(next), mapping)) return true;
    }
    return false;
  }

  bool check_mapping(const std::vector<int>& map_ab) const {
    std::map<std::pair<int, int>, int> ea, eb;
    for (int v = 0; v < na_; ++v)
      for (const auto& [w, m] : adj_[v])
        if (w >= v) ea[{v, w}] = m;
    for (int v = na_; v < n_; ++v)
      for (const auto& [w, m] : adj_[v])
        if (w >= v) eb[{v - na_, w - na_}] = m;
    std::map<std::pair<int, int>, int> mapped;
    for (const auto& [e, m] : ea) {
      int u = map_ab[e.first], w = map_ab[e.second];
      if (u < 0 || w < 0) return false;
      mapped[{std::min(u, w), std::max(u, w)}] = m;
    }
    return mapped == eb;
  }

  int na_;
  int n_ = 0;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace

IsoResult isomorphic(const Multigraph& a, const Multigraph& b,
                     std::chrono::milliseconds timeout) {
  if (a.n_vertices() != b.n_vertices() || a.n_edges() != b.n_edges())
    return {IsoVerdict::not_isomorphic, {}};
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return {IsoVerdict::not_isomorphic, {}};
  if (a.n_vertices() == 0) return {IsoVerdict::isomorphic, {}};
  return IsoSearch(a, b, std::chrono::steady_clock::now() + timeout).run();
}

// ---------------------------------------------------------------------------
// families
// ---------------------------------------------------------------------------

Multigraph complete(int n) {
  if (n < 1) throw DomainError("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Multigraph(n, std::move(e));
}

Multigraph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("complete bipartite needs m,n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) e.push_back({i, m + j});
  return Multigraph(m + n, std::move(e));
}

Multigraph crown(int n) {
  if (n < 3) throw DomainError("crown graph needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) e.push_back({i, n + j});
  return Multigraph(2 * n, std::move(e));
}

Multigraph dipole(int n) {
  if (n < 1) throw DomainError("dipole needs n >= 1");
  std::vector<std::pair<int, int>> e(n, {0, 1});
  return Multigraph(2, std::move(e));
}

Multigraph hypercube(int d) {
  if (d < 1 || d > 16) throw DomainError("hypercube dimension out of range");
  int n = 1 << d;
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (!(v & (1 << b))) e.push_back({v, v | (1 << b)});
  return Multigraph(n, std::move(e));
}

Multigraph gen_petersen(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n)
    throw DomainError("generalized Petersen graph needs 1 <= k < n/2");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    e.push_back({i, (i + 1) % n});          // outer cycle
    e.push_back({n + i, n + (i + k) % n});  // inner star
    e.push_back({i, n + i});                // spokes
  }
  return Multigraph(2 * n, std::move(e));
}

Multigraph platonic(std::string_view name) {
  if (name == "tetrahedron") return complete(4);
  if (name == "cube") return hypercube(3);
  if (name == "octahedron") {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (j != i + 3 || i >= 3) e.push_back({i, j});
    return Multigraph(6, std::move(e));
  }
  if (name == "dodecahedron") return gen_petersen(10, 2);
  if (name == "icosahedron") {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= 5; ++i) {
      e.push_back({0, i});
      e.push_back({i, i % 5 + 1});            // upper pentagon
      e.push_back({5 + i, 5 + i % 5 + 1});    // lower pentagon
      e.push_back({11, 5 + i});
      e.push_back({i, 5 + i});                // band
      e.push_back({i, 5 + i % 5 + 1});
    }
    return Multigraph(12, std::move(e));
  }
  throw DomainError("unknown platonic solid '" + std::string(name) + "'");
}

Multigraph wheel(int n) {
  if (n < 4) throw DomainError("wheel needs n >= 4");
  std::vector<std::pair<int, int>> e;
  int hub = n - 1;
  for (int i = 0; i < n - 1; ++i) {
    e.push_back({i, (i + 1) % (n - 1)});
    e.push_back({i, hub});
  }
  return Multigraph(n, std::move(e));
}

}  // namespace msg
