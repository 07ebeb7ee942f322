#ifndef MSG_COSETS_HPP
#define MSG_COSETS_HPP

#include <cstddef>
#include <vector>

#include "msg/permgrp.hpp"
#include "msg/words.hpp"

namespace msg {

inline constexpr size_t kDefaultCosetBudget = 1000000;

// Closed coset table for a finite-index subgroup.  Cosets are 0-based with
// coset 0 the subgroup itself; columns come in generator/inverse pairs.
struct CosetTable {
  Presentation pres;
  SubgroupSpec subgroup;
  int n_cosets = 0;
  size_t definitions = 0;  // total cosets ever defined, coincidences included
  std::vector<int> tab;    // tab[c * 2*ngens + 2*g + d], d=1 for the inverse

  int ngens() const { return (int)pres.generators.size(); }
  int at(int coset, int gen, bool inv) const {
    return tab[(size_t)coset * 2 * ngens() + 2 * gen + (inv ? 1 : 0)];
  }
  // image of a coset under a word
  int trace(int coset, const Word& w) const;
};

// Todd-Coxeter enumeration (relator tracing with immediate coincidence
// processing).  `budget` caps the total number of coset definitions; when it
// is hit before the table closes, BudgetExceeded is thrown.  Deterministic:
// cosets are scanned in definition order and survivors keep that order.
CosetTable enumerate(const Presentation& pres, const SubgroupSpec& sub,
                     size_t budget = kDefaultCosetBudget);

// Permutation of the cosets induced by a word (right action).
Permutation coset_action(const CosetTable& t, const Word& w);

// The group acting on itself; requires a table for the trivial subgroup.
// The result's order always equals t.n_cosets.
PermutationGroup regular_representation(const CosetTable& t);

// Subgroup of the regular representation generated by the given words.
PermutationGroup subgroup_from_words(const CosetTable& t,
                                     const SubgroupSpec& words);

}  // namespace msg

#endif
