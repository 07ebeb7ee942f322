#include "msg/quatalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "msg/errors.hpp"

namespace msg {

FieldElem FieldElem::golden() {
  return FieldElem(Fraction(1, 2), 0, Fraction(1, 2));
}

FieldElem operator+(const FieldElem& x, const FieldElem& y) {
  return FieldElem(x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d);
}

FieldElem operator-(const FieldElem& x, const FieldElem& y) {
  return FieldElem(x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d);
}

FieldElem operator*(const FieldElem& x, const FieldElem& y) {
  // basis products: sqrt2*sqrt5 = sqrt10, sqrt2*sqrt10 = 2*sqrt5,
  // sqrt5*sqrt10 = 5*sqrt2
  Fraction two(2), five(5), ten(10);
  return FieldElem(
      x.a * y.a + two * x.b * y.b + five * x.c * y.c + ten * x.d * y.d,
      x.a * y.b + x.b * y.a + five * (x.c * y.d + x.d * y.c),
      x.a * y.c + x.c * y.a + two * (x.b * y.d + x.d * y.b),
      x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b);
}

FieldElem operator/(const FieldElem& x, const FieldElem& y) {
  return x * y.inv();
}

namespace {

// sign of p + q*sqrt(n) given exact signs of p and q
int sign_with_root(int sp, int sq, const Fraction& p2_minus_nq2) {
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  int t = p2_minus_nq2.sign();
  return t == 0 ? 0 : (t > 0 ? sp : sq);
}

int sign_q_sqrt2(const Fraction& p, const Fraction& q) {
  return sign_with_root(p.sign(), q.sign(), p * p - Fraction(2) * q * q);
}

}  // namespace

int FieldElem::sign() const {
  // view as u + v*sqrt5 with u = a + b*sqrt2, v = c + d*sqrt2
  int su = sign_q_sqrt2(a, b);
  int sv = sign_q_sqrt2(c, d);
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  // compare u^2 against 5 v^2 inside Q(sqrt2)
  Fraction u2p = a * a + Fraction(2) * b * b, u2q = Fraction(2) * a * b;
  Fraction v2p = c * c + Fraction(2) * d * d, v2q = Fraction(2) * c * d;
  int t = sign_q_sqrt2(u2p - Fraction(5) * v2p, u2q - Fraction(5) * v2q);
  return t == 0 ? 0 : (t > 0 ? su : sv);
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw DomainError("inverse of zero field element");
  FieldElem s2(a, -b, c, -d);   // sqrt2 -> -sqrt2
  FieldElem s5(a, b, -c, -d);   // sqrt5 -> -sqrt5
  FieldElem s10(a, -b, -c, d);  // both
  FieldElem prod = s2 * s5 * s10;
  FieldElem norm = *this * prod;
  if (!(norm.b.is_zero() && norm.c.is_zero() && norm.d.is_zero()) ||
      norm.a.is_zero())
    throw EvaluationError("field norm is not a nonzero rational");
  Fraction r = Fraction(1) / norm.a;
  return FieldElem(prod.a * r, prod.b * r, prod.c * r, prod.d * r);
}

double FieldElem::to_double() const {
  return a.to_double() + b.to_double() * std::sqrt(2.0) +
         c.to_double() * std::sqrt(5.0) + d.to_double() * std::sqrt(10.0);
}

std::string FieldElem::str() const {
  std::string out = a.str();
  auto term = [&out](const Fraction& f, const char* root) {
    if (f.is_zero()) return;
    out += (f.sign() > 0 ? "+" : "-");
    Fraction m = f.sign() > 0 ? f : -f;
    if (m != Fraction(1)) out += m.str() + "*";
    out += root;
  };
  term(b, "sqrt2");
  term(c, "sqrt5");
  term(d, "sqrt10");
  return out;
}

bool lex_less(const FieldElem& x, const FieldElem& y) {
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  if (x.c != y.c) return x.c < y.c;
  return x.d < y.d;
}

Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

bool operator<(const Quaternion& p, const Quaternion& q) {
  if (p.w != q.w) return lex_less(p.w, q.w);
  if (p.x != q.x) return lex_less(p.x, q.x);
  if (p.y != q.y) return lex_less(p.y, q.y);
  return lex_less(p.z, q.z);
}

std::string Quaternion::str() const {
  return "(" + w.str() + ", " + x.str() + ", " + y.str() + ", " + z.str() +
         ")";
}

namespace {

Quaternion from_components(const FieldElem (&c)[4]) {
  return {c[0], c[1], c[2], c[3]};
}

void verify_group_set(const std::vector<Quaternion>& elems, const char* name) {
  for (const auto& q : elems)
    if (!q.is_unit()) throw EvaluationError(std::string(name) + ": non-unit element");
  for (const auto& p : elems)
    for (const auto& q : elems)
      if (!std::binary_search(elems.begin(), elems.end(), p * q))
        throw EvaluationError(std::string(name) + ": not closed under product");
}

std::vector<Quaternion> binary_tetrahedral() {
  std::vector<Quaternion> out;
  Fraction one(1), half(1, 2);
  for (int pos = 0; pos < 4; ++pos)
    for (int s = -1; s <= 1; s += 2) {
      FieldElem c[4];
      c[pos] = FieldElem(Fraction(s));
      out.push_back(from_components(c));
    }
  for (int mask = 0; mask < 16; ++mask) {
    FieldElem c[4];
    for (int pos = 0; pos < 4; ++pos)
      c[pos] = FieldElem(mask & (1 << pos) ? -half : half);
    out.push_back(from_components(c));
  }
  return out;
}

std::vector<Quaternion> binary_octahedral() {
  std::vector<Quaternion> out = binary_tetrahedral();
  FieldElem r(0, Fraction(1, 2));  // 1/sqrt2 = sqrt2/2
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int si = -1; si <= 1; si += 2)
        for (int sj = -1; sj <= 1; sj += 2) {
          FieldElem c[4];
          c[i] = si > 0 ? r : -r;
          c[j] = sj > 0 ? r : -r;
          out.push_back(from_components(c));
        }
  return out;
}

std::vector<Quaternion> binary_icosahedral() {
  std::vector<Quaternion> out = binary_tetrahedral();
  FieldElem half(Fraction(1, 2));
  FieldElem phi_half(Fraction(1, 4), 0, Fraction(1, 4));      // phi/2
  FieldElem ihp_half(Fraction(-1, 4), 0, Fraction(1, 4));     // 1/(2 phi)
  int perm[4] = {0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) ++inversions;
    if (inversions % 2) continue;
    for (int mask = 0; mask < 8; ++mask) {
      FieldElem base[4] = {FieldElem(0),
                           mask & 1 ? -half : half,
                           mask & 2 ? -ihp_half : ihp_half,
                           mask & 4 ? -phi_half : phi_half};
      FieldElem c[4];
      for (int i = 0; i < 4; ++i) c[perm[i]] = base[i];
      out.push_back(from_components(c));
    }
  } while (std::next_permutation(perm, perm + 4));
  return out;
}

}  // namespace

std::vector<Quaternion> binary_group(char kind) {
  std::vector<Quaternion> out;
  switch (kind) {
    case 'T': out = binary_tetrahedral(); break;
    case 'O': out = binary_octahedral(); break;
    case 'I': out = binary_icosahedral(); break;
    default: throw DomainError(std::string("unknown binary group kind: ") + kind);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw EvaluationError("duplicate elements in binary group");
  verify_group_set(out, "binary_group");
  return out;
}

QuatPair QuatPair::normalized() const {
  const FieldElem* comps[4] = {&a.w, &a.x, &a.y, &a.z};
  for (const FieldElem* f : comps) {
    int s = f->sign();
    if (s > 0) return *this;
    if (s < 0) return {-a, -b};
  }
  return *this;
}

bool operator<(const QuatPair& p, const QuatPair& q) {
  if (p.a != q.a) return p.a < q.a;
  return p.b < q.b;
}

Quaternion act(const QuatPair& p, const Quaternion& q) {
  return p.a * q * p.b.conj();
}

std::vector<QuatPair> left_pairs(char kind) {
  std::vector<QuatPair> out;
  for (const Quaternion& q : binary_group(kind))
    out.push_back(QuatPair{q, Quaternion::one()}.normalized());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<QuatPair> conj_pairs(char kind) {
  std::vector<QuatPair> out;
  for (const Quaternion& q : binary_group(kind))
    out.push_back(QuatPair{q, q}.normalized());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int QuatPairGroup::point_of(const Quaternion& q) const {
  auto it = std::lower_bound(orbit.begin(), orbit.end(), q);
  if (it == orbit.end() || !(*it == q)) return -1;
  return (int)(it - orbit.begin());
}

Permutation QuatPairGroup::pair_perm(const QuatPair& p) const {
  std::vector<uint16_t> img(orbit.size());
  for (size_t i = 0; i < orbit.size(); ++i) {
    int j = point_of(act(p, orbit[i]));
    if (j < 0) throw EvaluationError("pair action leaves the orbit");
    img[i] = (uint16_t)j;
  }
  return Permutation(std::move(img));
}

QuatPairGroup central_product_IO() {
  auto left = binary_group('I');
  auto right = binary_group('O');

  QuatPairGroup g;
  g.orbit.reserve(left.size() * right.size());
  for (const auto& a : left)
    for (const auto& b : right) g.orbit.push_back(a * b);
  std::sort(g.orbit.begin(), g.orbit.end());
  g.orbit.erase(std::unique(g.orbit.begin(), g.orbit.end()), g.orbit.end());

  const int n = (int)g.orbit.size();
  auto index_of = [&g](const Quaternion& q) {
    int i = g.point_of(q);
    if (i < 0) throw EvaluationError("product set is not closed");
    return (uint16_t)i;
  };

  // action of (a,b) is (left mult by a) then (right mult by b^-1);
  // precompute the two factor permutations and compose
  std::vector<Permutation> lperm, rperm;
  lperm.reserve(left.size());
  for (const auto& a : left) {
    std::vector<uint16_t> img(n);
    for (int i = 0; i < n; ++i) img[i] = index_of(a * g.orbit[i]);
    lperm.push_back(Permutation(std::move(img)));
  }
  rperm.reserve(right.size());
  for (const auto& b : right) {
    std::vector<uint16_t> img(n);
    Quaternion bc = b.conj();
    for (int i = 0; i < n; ++i) img[i] = index_of(g.orbit[i] * bc);
    rperm.push_back(Permutation(std::move(img)));
  }

  std::map<Permutation, QuatPair> by_perm;
  for (size_t ia = 0; ia < left.size(); ++ia)
    for (size_t ib = 0; ib < right.size(); ++ib) {
      QuatPair p = QuatPair{left[ia], right[ib]}.normalized();
      by_perm.emplace(lperm[ia] * rperm[ib], p);
    }
  if (by_perm.size() * 2 != left.size() * right.size())
    throw EvaluationError("pair action is not two-to-one");

  g.pairs.reserve(by_perm.size());
  std::vector<Permutation> all_perms;
  all_perms.reserve(by_perm.size());
  for (const auto& [perm, pair] : by_perm) {
    g.pairs.push_back(pair);
    all_perms.push_back(perm);
  }
  std::sort(g.pairs.begin(), g.pairs.end());

  // small generating set found greedily, then closed and checked against
  // the explicit permutation list
  std::vector<Permutation> gens;
  PermutationGroup closed;
  for (const auto& p : all_perms) {
    if (!gens.empty() && closed.contains(p)) continue;
    gens.push_back(p);
    closed = PermutationGroup::closure(n, gens);
    if (closed.order() == all_perms.size()) break;
  }
  if (closed.order() != all_perms.size())
    throw EvaluationError("generated group misses some pair actions");
  g.perm_rep = std::move(closed);
  return g;
}

}  // namespace msg
