#ifndef MSG_QUATALG_HPP
#define MSG_QUATALG_HPP

#include <string>
#include <vector>

#include "msg/fraction.hpp"
#include "msg/permgrp.hpp"

namespace msg {

// Element of the real field Q(sqrt2, sqrt5) in the basis {1, sqrt2, sqrt5,
// sqrt10}.  All arithmetic is exact; sign() decides the real embedding with
// sqrt2, sqrt5 > 0 by recursive squaring, never through doubles.
struct FieldElem {
  Fraction a, b, c, d;  // a + b*sqrt2 + c*sqrt5 + d*sqrt10

  FieldElem() = default;
  FieldElem(Fraction ra, Fraction rb = 0, Fraction rc = 0, Fraction rd = 0)
      : a(ra), b(rb), c(rc), d(rd) {}
  static FieldElem rational(long long n, long long d = 1) {
    return FieldElem(Fraction(n, d));
  }
  static FieldElem sqrt2() { return FieldElem(0, 1); }
  static FieldElem sqrt5() { return FieldElem(0, 0, 1); }
  static FieldElem sqrt10() { return FieldElem(0, 0, 0, 1); }
  static FieldElem golden();  // (1 + sqrt5)/2

  bool is_zero() const {
    return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero();
  }
  int sign() const;
  FieldElem inv() const;  // throws DomainError on zero
  double to_double() const;
  std::string str() const;

  friend FieldElem operator+(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator-(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator*(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator/(const FieldElem& x, const FieldElem& y);
  FieldElem operator-() const { return FieldElem(-a, -b, -c, -d); }
  friend bool operator==(const FieldElem& x, const FieldElem& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const FieldElem& x, const FieldElem& y) {
    return !(x == y);
  }
};

// Coefficient-tuple lexicographic order (deterministic, not the real order).
bool lex_less(const FieldElem& x, const FieldElem& y);

struct Quaternion {
  FieldElem w, x, y, z;

  static Quaternion one() { return {FieldElem(1), {}, {}, {}}; }

  Quaternion conj() const { return {w, -x, -y, -z}; }
  FieldElem norm() const { return w * w + x * x + y * y + z * z; }
  bool is_unit() const { return norm() == FieldElem(1); }
  Quaternion operator-() const { return {-w, -x, -y, -z}; }

  friend Quaternion operator+(const Quaternion& p, const Quaternion& q);
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
  friend bool operator==(const Quaternion& p, const Quaternion& q) {
    return p.w == q.w && p.x == q.x && p.y == q.y && p.z == q.z;
  }
  friend bool operator!=(const Quaternion& p, const Quaternion& q) {
    return !(p == q);
  }
  friend bool operator<(const Quaternion& p, const Quaternion& q);  // lex

  std::string str() const;
};

// Binary polyhedral group as an explicit set of unit quaternions, sorted
// lexicographically.  kind is 'T', 'O' or 'I' (orders 24, 48, 120); closure
// under multiplication is re-verified exhaustively on every call.
std::vector<Quaternion> binary_group(char kind);

// Rotation pair acting by q -> a * q * b^-1, kept with the sign of the first
// nonzero coefficient of `a` positive since (a,b) and (-a,-b) act alike.
struct QuatPair {
  Quaternion a, b;
  QuatPair normalized() const;
  friend bool operator==(const QuatPair& p, const QuatPair& q) {
    return p.a == q.a && p.b == q.b;
  }
  friend bool operator<(const QuatPair& p, const QuatPair& q);
};

Quaternion act(const QuatPair& p, const Quaternion& q);

// Pair families over one binary polyhedral group, normalized and sorted:
// left-multiplication pairs (q, 1) and conjugation pairs (q, q).
std::vector<QuatPair> left_pairs(char kind);
std::vector<QuatPair> conj_pairs(char kind);

// The central product of the binary icosahedral and octahedral groups,
// realized on its natural orbit Q = {a*b} of 240 unit quaternions.
struct QuatPairGroup {
  std::vector<QuatPair> pairs;    // 2880 classes, sorted
  std::vector<Quaternion> orbit;  // the domain Q, sorted
  PermutationGroup perm_rep;      // degree |Q|, faithful

  int point_of(const Quaternion& q) const;  // -1 when q is not in the orbit
  Permutation pair_perm(const QuatPair& p) const;
};

QuatPairGroup central_product_IO();

}  // namespace msg

#endif
