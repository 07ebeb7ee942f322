#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "msg/graphs.hpp"

using namespace msg;

namespace {

// exhaustive isomorphism decision for tiny graphs
bool brute_iso(const Multigraph& a, const Multigraph& b) {
  if (a.n_vertices() != b.n_vertices() || a.n_edges() != b.n_edges())
    return false;
  std::vector<int> perm(a.n_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::pair<int, int>> mapped;
    for (auto [u, v] : a.edges())
      mapped.push_back({std::min(perm[u], perm[v]), std::max(perm[u], perm[v])});
    std::sort(mapped.begin(), mapped.end());
    if (mapped == b.edges()) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Multigraph random_multigraph(std::mt19937& rng, int n, int m,
                             bool allow_loops) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i) {
    int u = (int)(rng() % n), v = (int)(rng() % n);
    if (!allow_loops && u == v) {
      --i;
      continue;
    }
    e.push_back({u, v});
  }
  return Multigraph(n, std::move(e));
}

Multigraph relabel(const Multigraph& g, std::mt19937& rng) {
  std::vector<int> perm(g.n_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges()) e.push_back({perm[u], perm[v]});
  return Multigraph(g.n_vertices(), std::move(e));
}

int hist(const InvariantSet& inv, int k) {
  auto it = inv.degree_hist.find(k);
  return it == inv.degree_hist.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("invariants of small graphs") {
  InvariantSet k33 = invariants(complete_bipartite(3, 3));
  CHECK(hist(k33, 3) == 6);
  CHECK(k33.edge_count == 9);
  CHECK(k33.diameter == 2);
  CHECK(k33.girth == 4);

  InvariantSet d6 = invariants(dipole(6));
  CHECK(hist(d6, 6) == 2);
  CHECK(d6.edge_count == 6);
  CHECK(d6.diameter == 1);
  CHECK(d6.girth == 2);

  InvariantSet k2_30 = invariants(complete_bipartite(2, 30));
  CHECK(hist(k2_30, 2) == 30);
  CHECK(hist(k2_30, 30) == 2);
  CHECK(k2_30.edge_count == 60);
  CHECK(k2_30.diameter == 2);
  CHECK(k2_30.girth == 4);

  InvariantSet edge = invariants(complete(2));
  CHECK(edge.diameter == 1);
  CHECK_FALSE(edge.girth.has_value());  // acyclic

  Multigraph loop(1, {{0, 0}});
  CHECK(invariants(loop).girth == 1);
  CHECK(hist(invariants(loop), 2) == 1);

  CHECK_THROWS_AS(invariants(Multigraph(2, {})), Disconnected);
}

TEST_CASE("girth catches odd and even cycles") {
  // 5-cycle
  Multigraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(invariants(c5).girth == 5);
  CHECK(invariants(c5).diameter == 2);
  // two triangles sharing a vertex
  Multigraph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  CHECK(invariants(bowtie).girth == 3);
  // theta graph: girth 4
  Multigraph theta(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 4}});
  CHECK(invariants(theta).girth == 4);
}

TEST_CASE("handshake identity on all families") {
  std::vector<Multigraph> graphs = {
      complete(5),         complete_bipartite(3, 4), crown(5),
      dipole(7),           hypercube(4),             gen_petersen(8, 3),
      platonic("cube"),    platonic("tetrahedron"),  platonic("octahedron"),
      platonic("icosahedron"), platonic("dodecahedron"), wheel(7)};
  for (const auto& g : graphs) {
    auto inv = invariants(g);
    long long sum = 0;
    for (auto [k, c] : inv.degree_hist) sum += (long long)k * c;
    CHECK(sum == 2 * inv.edge_count);
  }
}

TEST_CASE("family shapes") {
  CHECK(gen_petersen(8, 3).n_vertices() == 16);
  CHECK(gen_petersen(8, 3).n_edges() == 24);
  CHECK(invariants(gen_petersen(8, 3)).girth == 6);  // Moebius-Kantor

  Multigraph c = crown(5);
  CHECK(c.n_vertices() == 10);
  CHECK(c.n_edges() == 20);
  auto ci = invariants(c);
  CHECK(hist(ci, 4) == 10);
  CHECK(ci.diameter == 3);
  CHECK(ci.girth == 4);

  CHECK(invariants(platonic("dodecahedron")).girth == 5);
  CHECK(invariants(platonic("icosahedron")).diameter == 3);
  CHECK(hist(invariants(platonic("icosahedron")), 5) == 12);
  CHECK(invariants(platonic("octahedron")).diameter == 2);
  CHECK(brute_iso(complete_bipartite(2, 2),
                  Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
  CHECK(brute_iso(wheel(4), complete(4)));
  CHECK(brute_iso(platonic("cube"), gen_petersen(4, 1)));

  CHECK_THROWS_AS(gen_petersen(8, 4), DomainError);
  CHECK_THROWS_AS(gen_petersen(8, 0), DomainError);
  CHECK_THROWS_AS(crown(2), DomainError);
  CHECK_THROWS_AS(platonic("simplex"), DomainError);
  CHECK_THROWS_AS(wheel(3), DomainError);
}

TEST_CASE("subdivision") {
  Multigraph k4s = subdivide(complete(4));
  auto inv = invariants(k4s);
  CHECK(hist(inv, 2) == 6);
  CHECK(hist(inv, 3) == 4);
  CHECK(inv.edge_count == 12);
  CHECK(inv.diameter == 4);
  CHECK(inv.girth == 6);

  Multigraph cube = subdivide(platonic("cube"));
  CHECK(cube.n_vertices() == 20);
  CHECK(cube.n_edges() == 24);

  Multigraph path = subdivide(complete(2));
  CHECK(path.n_vertices() == 3);
  CHECK(invariants(path).diameter == 2);

  // Desargues graph, subdivided: row values of the genus-11 arc
  auto des = invariants(subdivide(gen_petersen(10, 3)));
  CHECK(hist(des, 2) == 30);
  CHECK(hist(des, 3) == 20);
  CHECK(des.edge_count == 60);
  CHECK(des.diameter == 10);
  CHECK(des.girth == 12);
}

TEST_CASE("smoothing") {
  CHECK(smooth_degree2(subdivide(platonic("cube"))) == platonic("cube"));
  CHECK(smooth_degree2(complete_bipartite(2, 6)) == dipole(6));

  // 3-cycle of degree-2 vertices collapses to a single looped vertex
  Multigraph c3(3, {{0, 1}, {1, 2}, {2, 0}});
  Multigraph s = smooth_degree2(c3);
  CHECK(s.n_vertices() == 1);
  REQUIRE(s.n_edges() == 1);
  CHECK(s.edges()[0] == std::pair<int, int>{0, 0});

  // vertices carrying loops are not suppressed
  Multigraph looped(2, {{0, 0}, {0, 1}, {1, 1}});
  CHECK(smooth_degree2(looped) == looped);
}

TEST_CASE("smooth undoes subdivide when no degree-2 vertices exist") {
  std::mt19937 rng(23);
  int done = 0;
  while (done < 40) {
    Multigraph g = random_multigraph(rng, 3 + (int)(rng() % 5), 8, false);
    auto deg = g.degrees();
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d == 2; }))
      continue;
    ++done;
    CHECK(smooth_degree2(subdivide(g)) == g);
  }
}

TEST_CASE("isomorphism on structured pairs") {
  CHECK(isomorphic(platonic("cube"), gen_petersen(4, 1)).verdict ==
        IsoVerdict::isomorphic);
  CHECK(isomorphic(complete_bipartite(2, 3), complete_bipartite(3, 3)).verdict ==
        IsoVerdict::not_isomorphic);
  CHECK(isomorphic(subdivide(platonic("dodecahedron")),
                   subdivide(gen_petersen(10, 2)))
            .verdict == IsoVerdict::isomorphic);
  // same degree sequence, different girth
  Multigraph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  Multigraph cc(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(isomorphic(c6, cc).verdict == IsoVerdict::not_isomorphic);
}

TEST_CASE("isomorphism returns a verifiable mapping") {
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    Multigraph g = random_multigraph(rng, 6, 9, true);
    Multigraph h = relabel(g, rng);
    IsoResult r = isomorphic(g, h);
    REQUIRE(r.verdict == IsoVerdict::isomorphic);
    REQUIRE(r.mapping.size() == (size_t)g.n_vertices());
    std::vector<std::pair<int, int>> mapped;
    for (auto [u, v] : g.edges()) {
      int a = r.mapping[u], b = r.mapping[v];
      mapped.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == h.edges());
  }
}

TEST_CASE("isomorphism decision agrees with exhaustive search") {
  std::mt19937 rng(11);
  for (int t = 0; t < 150; ++t) {
    int n = 2 + (int)(rng() % 5);
    Multigraph a = random_multigraph(rng, n, 2 + (int)(rng() % 7), true);
    Multigraph b = random_multigraph(rng, n, 2 + (int)(rng() % 7), true);
    bool expect = brute_iso(a, b);
    IsoVerdict got = isomorphic(a, b).verdict;
    REQUIRE(got != IsoVerdict::inconclusive);
    CHECK((got == IsoVerdict::isomorphic) == expect);
  }
}

TEST_CASE("invariants are isomorphism invariant") {
  std::mt19937 rng(31);
  for (int t = 0; t < 25; ++t) {
    Multigraph g = random_multigraph(rng, 7, 12, true);
    if (!is_connected(g)) continue;
    CHECK(invariants(g) == invariants(relabel(g, rng)));
  }
}

TEST_CASE("dipole vs triangle multiplicity handling") {
  CHECK(isomorphic(dipole(3), Multigraph(3, {{0, 1}, {1, 2}, {2, 0}})).verdict ==
        IsoVerdict::not_isomorphic);
  CHECK(isomorphic(dipole(3), dipole(3)).verdict == IsoVerdict::isomorphic);
}
