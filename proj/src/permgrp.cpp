#include "msg/permgrp.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>

namespace msg {

Permutation::Permutation(std::vector<uint16_t> img) : img_(std::move(img)) {
  std::vector<bool> seen(img_.size(), false);
  for (uint16_t v : img_) {
    if (v >= img_.size() || seen[v])
      throw DomainError("invalid permutation image vector");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.img_.resize(degree);
  std::iota(p.img_.begin(), p.img_.end(), 0);
  return p;
}

Permutation Permutation::operator*(const Permutation& o) const {
  Permutation r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[i] = o.img_[img_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = (uint16_t)i;
  return r;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

long long Permutation::order() const {
  std::vector<bool> seen(img_.size(), false);
  long long ord = 1;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(img_.size(), false);
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    out += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = img_[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation perm_from_cycles(int degree, std::string_view text) {
  std::vector<uint16_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() &&
           (std::isspace((unsigned char)text[pos]) || text[pos] == ','))
      ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != '(') throw SyntaxError("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cyc;
    skip();
    while (pos < text.size() && text[pos] != ')') {
      size_t start = pos;
      while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
      if (pos == start) throw SyntaxError("expected point in cycle notation");
      int v = std::stoi(std::string(text.substr(start, pos - start)));
      if (v < 1 || v > degree) throw DomainError("cycle point out of range");
      cyc.push_back(v - 1);
      skip();
    }
    if (pos >= text.size()) throw SyntaxError("unterminated cycle");
    ++pos;
    for (size_t i = 0; i < cyc.size(); ++i)
      img[cyc[i]] = (uint16_t)cyc[(i + 1) % cyc.size()];
    skip();
  }
  return Permutation(std::move(img));
}

size_t PermHash::operator()(const Permutation& p) const {
  // FNV-1a over the image bytes
  size_t h = 1469598103934665603ull;
  for (uint16_t v : p.images()) {
    h = (h ^ (v & 0xff)) * 1099511628211ull;
    h = (h ^ (v >> 8)) * 1099511628211ull;
  }
  return h;
}

ClosureResult closure_limited(int degree, std::span<const Permutation> gens,
                              size_t limit) {
  ClosureResult res;
  std::unordered_set<Permutation, PermHash> seen;
  seen.reserve(std::min(limit + 1, (size_t)1 << 16));
  res.elems.push_back(Permutation::identity(degree));
  seen.insert(res.elems[0]);
  for (size_t i = 0; i < res.elems.size(); ++i) {
    for (const Permutation& g : gens) {
      if (g.degree() != degree) throw DomainError("degree mismatch in closure");
      Permutation p = res.elems[i] * g;
      if (seen.insert(p).second) {
        res.elems.push_back(std::move(p));
        if (res.elems.size() > limit) {
          res.exceeded = true;
          return res;
        }
      }
    }
  }
  return res;
}

PermutationGroup PermutationGroup::closure(int degree,
                                           std::vector<Permutation> gens,
                                           size_t cap) {
  ClosureResult r = closure_limited(degree, gens, cap);
  if (r.exceeded)
    throw ExplosionGuard("closure exceeded cap of " + std::to_string(cap) +
                         " elements");
  PermutationGroup g;
  g.degree_ = degree;
  g.gens_ = std::move(gens);
  g.elems_ = std::move(r.elems);
  g.index_.resize(g.elems_.size());
  std::iota(g.index_.begin(), g.index_.end(), 0);
  std::sort(g.index_.begin(), g.index_.end(), [&g](uint32_t a, uint32_t b) {
    return g.elems_[a] < g.elems_[b];
  });
  return g;
}

bool PermutationGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto it = std::lower_bound(
      index_.begin(), index_.end(), p,
      [this](uint32_t a, const Permutation& b) { return elems_[a] < b; });
  return it != index_.end() && elems_[*it] == p;
}

namespace {

Permutation embed(const Permutation& p, int offset, int total) {
  std::vector<uint16_t> img(total);
  std::iota(img.begin(), img.end(), 0);
  for (int i = 0; i < p.degree(); ++i) img[offset + i] = (uint16_t)(offset + p.apply(i));
  return Permutation(std::move(img));
}

}  // namespace

PermutationGroup direct_product(const PermutationGroup& g,
                                const PermutationGroup& h) {
  int total = g.degree() + h.degree();
  std::vector<Permutation> gens;
  for (const Permutation& p : g.generators()) gens.push_back(embed(p, 0, total));
  for (const Permutation& p : h.generators())
    gens.push_back(embed(p, g.degree(), total));
  return PermutationGroup::closure(total, std::move(gens),
                                   g.order() * h.order() + 1);
}

std::optional<GroupHom> hom_by_images(const PermutationGroup& g,
                                      std::span<const Permutation> gens,
                                      const PermutationGroup& h,
                                      std::span<const Permutation> images) {
  if (gens.size() != images.size())
    throw DomainError("generator/image count mismatch");
  for (const Permutation& p : gens)
    if (!g.contains(p)) throw DomainError("map source not an element of the group");
  for (const Permutation& p : images)
    if (!h.contains(p)) throw DomainError("map image not an element of the group");

  ClosureResult src = closure_limited(g.degree(), gens, g.order());
  if (src.exceeded || src.elems.size() != g.order())
    throw NotGenerating("map sources generate a proper subgroup of order " +
                        std::to_string(src.elems.size()));

  int total = g.degree() + h.degree();
  std::vector<Permutation> pair_gens;
  pair_gens.reserve(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    std::vector<uint16_t> img(total);
    for (int j = 0; j < g.degree(); ++j) img[j] = (uint16_t)gens[i].apply(j);
    for (int j = 0; j < h.degree(); ++j)
      img[g.degree() + j] = (uint16_t)(g.degree() + images[i].apply(j));
    pair_gens.emplace_back(std::move(img));
  }

  // |closure| == |G| exactly when every element of G receives one image.
  ClosureResult pair = closure_limited(total, pair_gens, g.order());
  if (pair.exceeded) return std::nullopt;

  ClosureResult img = closure_limited(h.degree(), images, h.order());
  if (img.exceeded)
    throw DomainError("image closure escaped the target group");

  GroupHom hom;
  hom.source_order = g.order();
  hom.target_order = h.order();
  hom.pair_group_order = pair.elems.size();
  hom.image_order = img.elems.size();
  hom.gens.assign(gens.begin(), gens.end());
  hom.images.assign(images.begin(), images.end());
  return hom;
}

bool is_isomorphism(const GroupHom& hom) {
  return hom.injective() && hom.surjective();
}

}  // namespace msg
