#include "msg/genpairs.hpp"

#include <numeric>
#include <string>

#include "msg/errors.hpp"

namespace msg {

namespace {

int orbit_count(int degree, std::span<const Permutation> perms) {
  std::vector<int> parent(degree);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& p : perms)
    for (int i = 0; i < degree; ++i) {
      int a = find(i), b = find(p.apply(i));
      if (a != b) parent[a] = b;
    }
  int roots = 0;
  for (int i = 0; i < degree; ++i)
    if (find(i) == i) ++roots;
  return roots;
}

struct GenTester {
  const PermutationGroup& g;
  int g_orbits;
  size_t limit;  // largest proper divisor of |g|

  explicit GenTester(const PermutationGroup& grp) : g(grp) {
    g_orbits = orbit_count(g.degree(), g.generators());
    size_t n = g.order(), spf = n;
    for (size_t p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        spf = p;
        break;
      }
    limit = n == 1 ? 1 : n / spf;
  }

  bool generates(const Permutation& x, const Permutation& y) const {
    const Permutation perms[2] = {x, y};
    // the pair's orbits refine the group's, so a count mismatch already
    // rules generation out without a closure
    if (orbit_count(g.degree(), perms) != g_orbits) return false;
    // any subgroup bigger than the largest proper divisor is the whole group
    return closure_limited(g.degree(), perms, limit).exceeded;
  }
};

}  // namespace

std::vector<GenPair> enumerate_23_pairs(const PermutationGroup& g, size_t cap) {
  if (g.order() > cap)
    throw CapExceeded("group order " + std::to_string(g.order()) +
                      " exceeds the pair-search cap " + std::to_string(cap));
  std::vector<const Permutation*> xs, ys;
  for (const auto& p : g.elements()) {
    long long o = p.order();
    if (o == 2) xs.push_back(&p);
    if (o == 3) ys.push_back(&p);
  }

  GenTester tester(g);
  std::vector<GenPair> pairs;
  for (const Permutation* x : xs)
    for (const Permutation* y : ys)
      if (tester.generates(*x, *y)) pairs.push_back({*x, *y});
  return pairs;
}

bool all_pairs_equivalent(const PermutationGroup& g) {
  auto pairs = enumerate_23_pairs(g);
  if (pairs.empty())
    throw NoPairs("the group has no generating (2,3)-pair");

  // x0 -> z, y0 -> w is an automorphism exactly when the pairwise closure of
  // {(x0, z), (y0, w)} on disjoint points has order |g|: both pairs generate,
  // so the map is onto whenever it is well defined.
  const int d = g.degree();
  auto paired = [d](const Permutation& p, const Permutation& q) {
    std::vector<uint16_t> img(2 * d);
    for (int i = 0; i < d; ++i) {
      img[i] = (uint16_t)p.apply(i);
      img[d + i] = (uint16_t)(d + q.apply(i));
    }
    return Permutation(std::move(img));
  };

  const GenPair& ref = pairs[0];
  for (const GenPair& cand : pairs) {
    const Permutation perms[2] = {paired(ref.x, cand.x), paired(ref.y, cand.y)};
    auto res = closure_limited(2 * d, perms, g.order());
    if (res.exceeded || res.elems.size() != g.order()) return false;
  }
  return true;
}

int count_partners(const PermutationGroup& g, const Permutation& y) {
  GenTester tester(g);
  int count = 0;
  for (const auto& p : g.elements())
    if (p.order() == 2 && tester.generates(p, y)) ++count;
  return count;
}

PermutationGroup a5z2() {
  auto a5 = PermutationGroup::closure(
      5, {perm_from_cycles(5, "(1 2 3 4 5)"), perm_from_cycles(5, "(1 2 3)")});
  auto z2 = PermutationGroup::closure(2, {perm_from_cycles(2, "(1 2)")});
  return direct_product(a5, z2);
}

PermutationGroup a5s4() {
  auto a5 = PermutationGroup::closure(
      5, {perm_from_cycles(5, "(1 2 3 4 5)"), perm_from_cycles(5, "(1 2 3)")});
  auto s4 = PermutationGroup::closure(
      4, {perm_from_cycles(4, "(1 2)"), perm_from_cycles(4, "(1 2 3 4)")});
  return direct_product(a5, s4);
}

}  // namespace msg
