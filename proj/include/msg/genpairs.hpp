#ifndef MSG_GENPAIRS_HPP
#define MSG_GENPAIRS_HPP

#include <cstddef>
#include <vector>

#include "msg/permgrp.hpp"

namespace msg {

// A generating pair (x of order 2, y of order 3) of some ambient group.
struct GenPair {
  Permutation x;
  Permutation y;
};

inline constexpr size_t kPairGroupCap = 10000;

// All pairs (x, y) with x^2 = y^3 = 1 (x, y nontrivial) and <x, y> = g, in a
// deterministic order (element order of g, x-major).  Throws CapExceeded when
// |g| > cap.
std::vector<GenPair> enumerate_23_pairs(const PermutationGroup& g,
                                        size_t cap = kPairGroupCap);

// True iff mapping the first pair onto every other pair extends to an
// automorphism of g, i.e. all generating (2,3)-pairs are equivalent.
// Throws NoPairs when the group has no such pair.
bool all_pairs_equivalent(const PermutationGroup& g);

// Number of order-2 elements z with <z, y> = g for this fixed y.
int count_partners(const PermutationGroup& g, const Permutation& y);

// The two small reference groups: A5 x Z2 on 7 points and A5 x S4 on 9.
PermutationGroup a5z2();
PermutationGroup a5s4();

}  // namespace msg

#endif
