#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <optional>
#include <random>
#include <set>

#include "msg/permgrp.hpp"

using namespace msg;

namespace {

// Independent closure oracle: naive pairwise-product fixpoint over an
// ordered set (different algorithm and container from the library's BFS).
size_t naive_closure_order(int degree, const std::vector<Permutation>& gens) {
  std::set<Permutation> s;
  s.insert(Permutation::identity(degree));
  for (const auto& g : gens) s.insert(g);
  while (true) {
    std::set<Permutation> next = s;
    for (const auto& a : s)
      for (const auto& b : s) next.insert(a * b);
    if (next.size() == s.size()) return s.size();
    s = std::move(next);
  }
}

// Independent homomorphism oracle: walk the Cayley graph assigning images
// by word decomposition, checking every edge for conflicts.
struct BruteHom {
  bool defined = false;
  size_t image_size = 0;
};

BruteHom brute_hom(const PermutationGroup& g,
                   const std::vector<Permutation>& gens,
                   const std::vector<Permutation>& imgs) {
  std::map<Permutation, Permutation> phi;
  std::vector<Permutation> queue;
  Permutation e = Permutation::identity(g.degree());
  Permutation te = Permutation::identity(imgs.empty() ? 1 : imgs[0].degree());
  phi.emplace(e, te);
  queue.push_back(e);
  for (size_t i = 0; i < queue.size(); ++i) {
    Permutation cur = queue[i];
    Permutation img = phi.at(cur);
    for (size_t k = 0; k < gens.size(); ++k) {
      Permutation nxt = cur * gens[k];
      Permutation nimg = img * imgs[k];
      auto it = phi.find(nxt);
      if (it == phi.end()) {
        phi.emplace(nxt, nimg);
        queue.push_back(nxt);
      } else if (!(it->second == nimg)) {
        return {false, 0};
      }
    }
  }
  std::set<Permutation> image;
  for (const auto& [a, b] : phi) image.insert(b);
  return {true, image.size()};
}

PermutationGroup cyclic(int n) {
  std::vector<uint16_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = (uint16_t)((i + 1) % n);
  return PermutationGroup::closure(n, {Permutation(std::move(img))});
}

}  // namespace

TEST_CASE("permutation basics") {
  Permutation p = perm_from_cycles(5, "(1 2)(3 4 5)");
  CHECK(p.order() == 6);
  CHECK(p.apply(0) == 1);
  CHECK(p.apply(2) == 3);
  CHECK(p.inverse() * p == Permutation::identity(5));
  CHECK(p.cycle_string() == "(1 2)(3 4 5)");
  CHECK(Permutation::identity(4).order() == 1);
  CHECK(Permutation::identity(4).cycle_string() == "()");
  CHECK_THROWS_AS(Permutation({0, 0, 1}), DomainError);
  CHECK_THROWS_AS(perm_from_cycles(3, "(1 5)"), DomainError);
}

TEST_CASE("composition is left-to-right") {
  Permutation a = perm_from_cycles(3, "(1 2)");
  Permutation b = perm_from_cycles(3, "(2 3)");
  // apply a first: 1 -> 2, then b: 2 -> 3
  CHECK((a * b).apply(0) == 2);
}

TEST_CASE("closure order 60 with independent oracle") {
  std::vector<Permutation> gens = {perm_from_cycles(5, "(1 2)(3 4)"),
                                   perm_from_cycles(5, "(1 3 5)")};
  PermutationGroup g = PermutationGroup::closure(5, gens);
  CHECK(g.order() == 60);
  CHECK(naive_closure_order(5, gens) == 60);
  CHECK(g.contains(perm_from_cycles(5, "(1 2 3 4 5)")));
  CHECK_FALSE(g.contains(perm_from_cycles(5, "(1 2)")));
}

TEST_CASE("closure of no generators is trivial") {
  PermutationGroup g = PermutationGroup::closure(4, {});
  CHECK(g.order() == 1);
}

TEST_CASE("closure respects the explosion guard") {
  std::vector<Permutation> gens = {perm_from_cycles(8, "(1 2 3 4 5 6 7 8)"),
                                   perm_from_cycles(8, "(1 2)")};
  CHECK_THROWS_AS(PermutationGroup::closure(8, gens, 100), ExplosionGuard);
}

TEST_CASE("closure order is generator-order independent") {
  std::mt19937 rng(3);
  std::vector<Permutation> gens = {perm_from_cycles(6, "(1 2 3)"),
                                   perm_from_cycles(6, "(4 5)"),
                                   perm_from_cycles(6, "(1 4)(2 5)(3 6)")};
  size_t expect = PermutationGroup::closure(6, gens).order();
  for (int t = 0; t < 5; ++t) {
    std::shuffle(gens.begin(), gens.end(), rng);
    std::vector<Permutation> padded = gens;
    padded.push_back(gens[0] * gens[1]);  // redundant generator
    CHECK(PermutationGroup::closure(6, padded).order() == expect);
  }
}

TEST_CASE("direct product acts on disjoint points") {
  PermutationGroup c2 = cyclic(2);
  PermutationGroup c3 = cyclic(3);
  PermutationGroup p = direct_product(c2, c3);
  CHECK(p.degree() == 5);
  CHECK(p.order() == 6);
}

TEST_CASE("quotient map on cyclic groups is a hom but no isomorphism") {
  PermutationGroup c4 = cyclic(4);
  PermutationGroup c2 = cyclic(2);
  auto hom = hom_by_images(c4, c4.generators(), c2, c2.generators());
  REQUIRE(hom.has_value());
  CHECK(hom->surjective());
  CHECK_FALSE(hom->injective());
  CHECK_FALSE(is_isomorphism(*hom));
  CHECK(hom->pair_group_order == 4);
}

TEST_CASE("squaring endomorphism of C4 is defined but not injective") {
  PermutationGroup c4 = cyclic(4);
  Permutation g = c4.generators()[0];
  std::vector<Permutation> imgs = {g * g};
  auto hom = hom_by_images(c4, c4.generators(), c4, imgs);
  REQUIRE(hom.has_value());
  CHECK(hom->image_order == 2);
  CHECK_FALSE(is_isomorphism(*hom));
}

TEST_CASE("impossible image yields undefined") {
  PermutationGroup c4 = cyclic(4);
  PermutationGroup c3 = cyclic(3);
  auto hom = hom_by_images(c4, c4.generators(), c3, c3.generators());
  CHECK_FALSE(hom.has_value());
}

TEST_CASE("isomorphism between different representations of C6") {
  PermutationGroup c6 = cyclic(6);
  PermutationGroup z2z3 = direct_product(cyclic(2), cyclic(3));
  std::vector<Permutation> imgs = {perm_from_cycles(5, "(1 2)(3 4 5)")};
  auto hom = hom_by_images(c6, c6.generators(), z2z3, imgs);
  REQUIRE(hom.has_value());
  CHECK(is_isomorphism(*hom));
}

TEST_CASE("hom errors") {
  PermutationGroup c4 = cyclic(4);
  std::vector<Permutation> trivial = {Permutation::identity(4)};
  std::vector<Permutation> outside = {perm_from_cycles(4, "(1 2)")};
  CHECK_THROWS_AS(hom_by_images(c4, trivial, c4, c4.generators()),
                  NotGenerating);
  CHECK_THROWS_AS(hom_by_images(c4, outside, c4, c4.generators()),
                  DomainError);
}

TEST_CASE("hom decision agrees with the brute-force oracle") {
  std::mt19937 rng(17);
  std::vector<PermutationGroup> groups;
  groups.push_back(cyclic(6));
  groups.push_back(PermutationGroup::closure(
      3, {perm_from_cycles(3, "(1 2)"), perm_from_cycles(3, "(1 2 3)")}));
  groups.push_back(PermutationGroup::closure(
      4, {perm_from_cycles(4, "(1 2 3 4)"), perm_from_cycles(4, "(1 3)")}));
  groups.push_back(PermutationGroup::closure(
      4, {perm_from_cycles(4, "(1 2 3)"), perm_from_cycles(4, "(1 2)(3 4)")}));

  for (const auto& g : groups) {
    for (const auto& h : groups) {
      for (int trial = 0; trial < 12; ++trial) {
        std::vector<Permutation> gens(g.generators());
        std::vector<Permutation> imgs;
        for (size_t i = 0; i < gens.size(); ++i)
          imgs.push_back(h.elements()[rng() % h.order()]);
        auto fast = hom_by_images(g, gens, h, imgs);
        BruteHom slow = brute_hom(g, gens, imgs);
        REQUIRE(fast.has_value() == slow.defined);
        if (fast) CHECK(fast->image_order == slow.image_size);
      }
    }
  }
}
