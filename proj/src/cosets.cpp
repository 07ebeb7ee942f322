#include "msg/cosets.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace msg {

int CosetTable::trace(int coset, const Word& w) const {
  int c = coset;
  for (const Letter& l : w) c = at(c, l.gen, l.sign < 0);
  return c;
}

namespace {

// Working table with union-find coincidence handling, 1-based cosets.
class Enumerator {
 public:
  Enumerator(const Presentation& pres, const SubgroupSpec& sub, size_t budget)
      : pres_(pres), sub_(sub), budget_(budget), cols_(2 * (int)pres.generators.size()) {
    for (const Word& w : sub)
      for (const Letter& l : w)
        if (l.gen < 0 || l.gen >= (int)pres.generators.size())
          throw InvalidSubgroup("subgroup word references unknown generator");
    for (const Word& w : pres_.relators) relcols_.push_back(columns(w));
    for (const Word& w : sub_) subcols_.push_back(columns(w));
  }

  CosetTable run() {
    new_coset();  // coset 1
    for (const auto& w : subcols_) {
      scan_and_fill(1, w);
      if (!alive(1)) throw DomainError("subgroup scan killed the base coset");
    }
    for (int alpha = 1; alpha <= max_; ++alpha) {
      if (!alive(alpha)) continue;
      for (const auto& r : relcols_) {
        scan_and_fill(alpha, r);
        if (!alive(alpha)) break;
      }
      if (!alive(alpha)) continue;
      for (int x = 0; x < cols_; ++x)
        if (entry(alpha, x) == 0) define(alpha, x);
    }
    return freeze();
  }

 private:
  static std::vector<int> columns(const Word& w) {
    std::vector<int> cols;
    cols.reserve(w.size());
    for (const Letter& l : w) cols.push_back(2 * l.gen + (l.sign < 0 ? 1 : 0));
    return cols;
  }
  static int inv(int col) { return col ^ 1; }

  int& entry(int c, int x) { return tab_[(size_t)c * cols_ + x]; }

  int rep(int c) {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }
  bool alive(int c) { return parent_[c] == c; }

  int new_coset() {
    if (definitions_ >= budget_)
      throw BudgetExceeded("coset budget of " + std::to_string(budget_) +
                           " definitions exhausted with " +
                           std::to_string(live_) + " cosets live");
    ++definitions_;
    ++max_;
    ++live_;
    parent_.push_back(max_);
    tab_.resize((size_t)(max_ + 1) * cols_, 0);
    return max_;
  }

  int define(int alpha, int x) {
    int beta = new_coset();
    entry(alpha, x) = beta;
    entry(beta, inv(x)) = alpha;
    return beta;
  }

  void merge(int a, int b, std::deque<int>& q) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_;
    q.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> q;
    merge(a, b, q);
    while (!q.empty()) {
      int gamma = q.front();
      q.pop_front();
      for (int x = 0; x < cols_; ++x) {
        int delta = entry(gamma, x);
        if (delta == 0) continue;
        entry(delta, inv(x)) = 0;
        int mu = rep(gamma);
        int nu = rep(delta);
        if (entry(mu, x) != 0) {
          merge(nu, entry(mu, x), q);
        } else if (entry(nu, inv(x)) != 0) {
          merge(mu, entry(nu, inv(x)), q);
        } else {
          entry(mu, x) = nu;
          entry(nu, inv(x)) = mu;
        }
      }
    }
  }

  void scan_and_fill(int alpha, const std::vector<int>& w) {
    int L = (int)w.size();
    int f = alpha, i = 0;
    int b = alpha, j = L;
    while (true) {
      while (i < j && entry(f, w[i]) != 0) f = rep(entry(f, w[i])), ++i;
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i + 1 && entry(b, inv(w[j - 1])) != 0)
        b = rep(entry(b, inv(w[j - 1]))), --j;
      if (j == i + 1 && entry(b, inv(w[j - 1])) != 0) {
        // word fully scanned from both ends
        b = rep(entry(b, inv(w[j - 1])));
        if (f != b) coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        entry(f, w[i]) = b;
        entry(b, inv(w[i])) = f;
        return;
      }
      f = define(f, w[i]);
      ++i;
    }
  }

  CosetTable freeze() {
    std::vector<int> number(max_ + 1, -1);
    int n = 0;
    for (int c = 1; c <= max_; ++c)
      if (alive(c)) number[c] = n++;
    CosetTable t;
    t.pres = pres_;
    t.subgroup = sub_;
    t.n_cosets = n;
    t.definitions = definitions_;
    t.tab.assign((size_t)n * cols_, -1);
    for (int c = 1; c <= max_; ++c) {
      if (!alive(c)) continue;
      for (int x = 0; x < cols_; ++x) {
        int d = entry(c, x);
        if (d == 0) throw DomainError("open table entry after enumeration");
        t.tab[(size_t)number[c] * cols_ + x] = number[rep(d)];
      }
    }
    validate(t);
    return t;
  }

  // Definitive closure test: every relator fixes every coset, every subgroup
  // word fixes coset 0, and every generator column is a bijection.
  void validate(const CosetTable& t) const {
    for (int g = 0; g < t.ngens(); ++g) {
      std::vector<bool> hit(t.n_cosets, false);
      for (int c = 0; c < t.n_cosets; ++c) {
        int d = t.at(c, g, false);
        if (hit[d]) throw DomainError("generator column is not a bijection");
        hit[d] = true;
        if (t.at(d, g, true) != c)
          throw DomainError("inverse column mismatch");
      }
    }
    for (int c = 0; c < t.n_cosets; ++c)
      for (const Word& r : t.pres.relators)
        if (t.trace(c, r) != c)
          throw DomainError("relator trace does not close");
    for (const Word& w : t.subgroup)
      if (t.trace(0, w) != 0)
        throw DomainError("subgroup word does not fix the base coset");
  }

  Presentation pres_;
  SubgroupSpec sub_;
  size_t budget_;
  int cols_;
  std::vector<std::vector<int>> relcols_, subcols_;
  std::vector<int> tab_{0};    // row 0 unused
  std::vector<int> parent_{0};
  int max_ = 0;
  int live_ = 0;
  size_t definitions_ = 0;
};

}  // namespace

CosetTable enumerate(const Presentation& pres, const SubgroupSpec& sub,
                     size_t budget) {
  return Enumerator(pres, sub, budget).run();
}

Permutation coset_action(const CosetTable& t, const Word& w) {
  std::vector<uint16_t> img(t.n_cosets);
  for (int c = 0; c < t.n_cosets; ++c) img[c] = (uint16_t)t.trace(c, w);
  return Permutation(std::move(img));
}

PermutationGroup regular_representation(const CosetTable& t) {
  if (!t.subgroup.empty())
    throw NotRegular("regular representation requires the trivial subgroup");
  std::vector<Permutation> gens;
  for (int g = 0; g < t.ngens(); ++g)
    gens.push_back(coset_action(t, Word{Letter{g, +1}}));
  PermutationGroup grp =
      PermutationGroup::closure(t.n_cosets, std::move(gens), t.n_cosets + 1);
  if (grp.order() != (size_t)t.n_cosets)
    throw NotRegular("regular representation order mismatch");
  return grp;
}

PermutationGroup subgroup_from_words(const CosetTable& t,
                                     const SubgroupSpec& words) {
  std::vector<Permutation> gens;
  for (const Word& w : words) gens.push_back(coset_action(t, w));
  return PermutationGroup::closure(t.n_cosets, std::move(gens),
                                   (size_t)t.n_cosets + 1);
}

}  // namespace msg
