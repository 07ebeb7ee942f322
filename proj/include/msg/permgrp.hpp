#ifndef MSG_PERMGRP_HPP
#define MSG_PERMGRP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "msg/errors.hpp"

namespace msg {

// Permutation of {0..n-1}.  Composition is left-to-right: (p*q)(i) = q(p(i)),
// so the permutation of a word g1*g2 is perm(g1)*perm(g2).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<uint16_t> img);
  static Permutation identity(int degree);

  int degree() const { return (int)img_.size(); }
  int apply(int i) const { return img_[i]; }
  const std::vector<uint16_t>& images() const { return img_; }

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  bool is_identity() const;
  long long order() const;  // lcm of cycle lengths

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.img_ < b.img_;
  }

  std::string cycle_string() const;  // 1-based, e.g. "(1 2)(3 4)"

 private:
  std::vector<uint16_t> img_;
};

// 1-based cycle notation, e.g. "(1 2)(3 4)" or "(1,3,5)".
Permutation perm_from_cycles(int degree, std::string_view text);

struct PermHash {
  size_t operator()(const Permutation& p) const;
};

inline constexpr size_t kClosureCap = 1000000;

// Breadth-first product closure.  Stops early with exceeded=true as soon as
// more than `limit` elements exist; elems[0] is the identity and the order
// of elems is deterministic for fixed generator order.
struct ClosureResult {
  bool exceeded = false;
  std::vector<Permutation> elems;
};
ClosureResult closure_limited(int degree, std::span<const Permutation> gens,
                              size_t limit);

class PermutationGroup {
 public:
  PermutationGroup() = default;  // empty placeholder, order 0

  // Full closure; throws ExplosionGuard if more than `cap` elements appear.
  static PermutationGroup closure(int degree, std::vector<Permutation> gens,
                                  size_t cap = kClosureCap);

  int degree() const { return degree_; }
  size_t order() const { return elems_.size(); }
  const std::vector<Permutation>& elements() const { return elems_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  bool contains(const Permutation& p) const;

 private:
  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;  // BFS order
  std::vector<uint32_t> index_;     // positions sorted for membership tests
};

// G and H side by side on disjoint point sets.
PermutationGroup direct_product(const PermutationGroup& g,
                                const PermutationGroup& h);

struct GroupHom {
  size_t source_order = 0;
  size_t target_order = 0;
  size_t pair_group_order = 0;
  size_t image_order = 0;  // order of the subgroup generated by the images
  std::vector<Permutation> gens;
  std::vector<Permutation> images;

  bool surjective() const { return image_order == target_order; }
  bool injective() const { return image_order == source_order; }
};

// Decides whether gens(i) -> images(i) extends to a homomorphism G -> H via
// the subdirect-product criterion: the pairwise closure of {(gens_i, imgs_i)}
// on disjoint points has order |G| exactly when the map is well defined.
// Returns nullopt when no such homomorphism exists.  Throws NotGenerating if
// gens do not generate G.
std::optional<GroupHom> hom_by_images(const PermutationGroup& g,
                                      std::span<const Permutation> gens,
                                      const PermutationGroup& h,
                                      std::span<const Permutation> images);

bool is_isomorphism(const GroupHom& hom);

}  // namespace msg

#endif
