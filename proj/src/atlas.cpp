#include "msg/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "msg/amalgam.hpp"
#include "msg/cosets.hpp"
#include "msg/graphs.hpp"
#include "msg/permgrp.hpp"
#include "msg/words.hpp"

namespace msg {

namespace {

using nlohmann::json;

std::string row_name(const InvariantRow& row) {
  std::string out;
  for (const auto& label : row.labels) {
    if (!out.empty()) out += "+";
    out += label;
  }
  return out;
}

InvariantSet read_invariants(const json& j) {
  InvariantSet s;
  for (const auto& item : j.at("d").items()) {
    size_t used = 0;
    int deg = std::stoi(item.key(), &used);
    if (used != item.key().size() || deg <= 0)
      throw SyntaxError("atlas: bad degree key '" + item.key() + "'");
    s.degree_hist[deg] = item.value().get<int>();
  }
  s.edge_count = j.at("E").get<long long>();
  s.diameter = j.at("D").get<int>();
  if (j.contains("G")) s.girth = j.at("G").get<int>();
  return s;
}

OrderTable read_table(const json& j) {
  OrderTable t;
  for (const json& jr : j.at("rows")) {
    TableRow r;
    r.num = jr.at("num").get<long long>();
    r.den = jr.value("den", 1LL);
    if (r.num <= 0 || r.den <= 0)
      throw DomainError("atlas: order table coefficients must be positive");
    for (const json& g : jr.at("genera")) r.genera.push_back(g.get<long long>());
    t.rows.push_back(std::move(r));
  }
  const json& sq = j.at("square");
  t.square_coef = sq.at("coef").get<long long>();
  for (const json& k : sq.at("excluded_k"))
    t.square_excluded_k.push_back(k.get<long long>());
  const json& d = j.at("default");
  t.default_coef = d.at("coef").get<long long>();
  t.default_interval = d.value("interval", false);
  if (t.square_coef <= 0 || t.default_coef <= 0)
    throw DomainError("atlas: order table coefficients must be positive");
  return t;
}

void check_integrity(const Atlas& a) {
  for (const char* key : {"m", "M", "Mstar", "Eminus"})
    if (!a.tables.count(key))
      throw DomainError(std::string("atlas: missing order table '") + key + "'");
  for (const auto& [key, table] : a.tables) {
    std::set<long long> seen;
    for (const auto& r : table.rows)
      for (long long g : r.genera)
        if (!seen.insert(g).second)
          throw DomainError("atlas: table " + key + " lists genus " +
                            std::to_string(g) + " twice");
  }

  std::set<std::string> ids;
  for (const auto& o : a.orbifolds)
    if (!ids.insert(o.id).second)
      throw DomainError("atlas: duplicate orbifold '" + o.id + "'");

  // Arc labels and row labels must pair up one-to-one.
  std::map<std::string, int> arc_rows;
  for (const auto& o : a.orbifolds)
    for (const auto& arc : o.arcs) {
      if (arc.genus < 2)
        throw DomainError("atlas: " + arc.label() + " has genus below 2");
      if (arc.row < 0 || arc.row >= (int)a.rows.size())
        throw DomainError("atlas: " + arc.label() + " points at no table row");
      if (a.rows[arc.row].genus != arc.genus)
        throw DomainError("atlas: " + arc.label() + " disagrees with its row's genus");
      if (!arc_rows.emplace(arc.label(), arc.row).second)
        throw DomainError("atlas: duplicate arc " + arc.label());
      if (arc.words && !o.presentation)
        throw DomainError("atlas: " + arc.label() + " has words but no presentation");
    }
  size_t labels = 0;
  for (size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i].labels.empty())
      throw DomainError("atlas: row " + std::to_string(i) + " has no labels");
    for (const auto& label : a.rows[i].labels) {
      auto it = arc_rows.find(label);
      if (it == arc_rows.end() || it->second != (int)i)
        throw DomainError("atlas: row label " + label + " names no arc of that row");
      ++labels;
    }
  }
  if (labels != arc_rows.size())
    throw DomainError("atlas: some arcs appear in no row");

  static const std::vector<std::string> kTripleNames{"v", "vl", "vr"};
  for (const auto& m : a.maps) {
    const ArcRecord& from = a.find_arc(m.from);
    const ArcRecord& to = a.find_arc(m.to);
    if (!from.words || !to.words)
      throw DomainError("atlas: map " + m.from + " -> " + m.to +
                        " needs stabilizer words on both ends");
    if (m.images.size() != 3 || (m.corrected && m.corrected->size() != 3))
      throw DomainError("atlas: map " + m.from + " -> " + m.to +
                        " needs exactly three images");
    for (const auto& w : m.images) parse_word(w, kTripleNames);
    if (m.corrected)
      for (const auto& w : *m.corrected) parse_word(w, kTripleNames);
  }

  for (const auto& o : a.orbifolds)
    if (o.presentation) {
      Presentation p = parse_presentation(*o.presentation);
      for (const auto& arc : o.arcs)
        if (arc.words) {
          parse_word(arc.words->u, p.generators);
          parse_word(arc.words->ul, p.generators);
          parse_word(arc.words->ur, p.generators);
        }
    }
}

Atlas read_atlas(const json& j) {
  Atlas a;
  a.schema = j.at("schema").get<int>();
  if (a.schema != 1)
    throw DomainError("atlas: unsupported schema " + std::to_string(a.schema));
  for (const json& jo : j.at("orbifolds")) {
    OrbifoldRecord o;
    o.id = jo.at("id").get<std::string>();
    if (jo.contains("order")) o.expected_order = jo.at("order").get<long long>();
    if (jo.contains("presentation"))
      o.presentation = jo.at("presentation").get<std::string>();
    for (const json& ja : jo.at("arcs")) {
      ArcRecord arc;
      arc.orbifold = o.id;
      arc.arc = ja.at("arc").get<std::string>();
      arc.genus = ja.at("genus").get<long long>();
      if (ja.contains("knotted")) arc.knotted = ja.at("knotted").get<bool>();
      arc.row = ja.at("row").get<int>();
      if (ja.contains("words")) {
        const json& jw = ja.at("words");
        arc.words = ArcWords{jw.at("u").get<std::string>(),
                             jw.at("ul").get<std::string>(),
                             jw.at("ur").get<std::string>()};
      }
      o.arcs.push_back(std::move(arc));
    }
    a.orbifolds.push_back(std::move(o));
  }
  for (const json& jr : j.at("rows")) {
    InvariantRow row;
    for (const json& l : jr.at("labels")) row.labels.push_back(l.get<std::string>());
    row.genus = jr.at("genus").get<long long>();
    row.printed = read_invariants(jr.at("printed"));
    if (jr.contains("corrected")) row.corrected = read_invariants(jr.at("corrected"));
    if (jr.contains("family")) row.family = jr.at("family").get<std::string>();
    a.rows.push_back(std::move(row));
  }
  for (const json& jm : j.at("maps")) {
    MapRecord m;
    m.from = jm.at("from").get<std::string>();
    m.to = jm.at("to").get<std::string>();
    for (const json& w : jm.at("images")) m.images.push_back(w.get<std::string>());
    if (jm.contains("corrected")) {
      m.corrected.emplace();
      for (const json& w : jm.at("corrected"))
        m.corrected->push_back(w.get<std::string>());
    }
    a.maps.push_back(std::move(m));
  }
  for (const auto& item : j.at("tables").items())
    a.tables[item.key()] = read_table(item.value());
  return a;
}

// "dipole(6)", "gen_petersen(8,3)", "platonic(cube)", ...
Multigraph family_graph(const std::string& call) {
  auto open = call.find('(');
  if (open == std::string::npos || call.empty() || call.back() != ')')
    throw DomainError("bad family constructor '" + call + "'");
  std::string name = call.substr(0, open);
  std::string args = call.substr(open + 1, call.size() - open - 2);
  std::vector<std::string> parts;
  std::istringstream in(args);
  std::string part;
  while (std::getline(in, part, ',')) {
    auto b = part.find_first_not_of(" \t");
    auto e = part.find_last_not_of(" \t");
    parts.push_back(b == std::string::npos ? "" : part.substr(b, e - b + 1));
  }
  auto num = [&](size_t i) {
    size_t used = 0;
    int v = std::stoi(parts.at(i), &used);
    if (used != parts[i].size())
      throw DomainError("bad family argument '" + parts[i] + "'");
    return v;
  };
  try {
    if (name == "dipole" && parts.size() == 1) return dipole(num(0));
    if (name == "complete" && parts.size() == 1) return complete(num(0));
    if (name == "complete_bipartite" && parts.size() == 2)
      return complete_bipartite(num(0), num(1));
    if (name == "crown" && parts.size() == 1) return crown(num(0));
    if (name == "hypercube" && parts.size() == 1) return hypercube(num(0));
    if (name == "gen_petersen" && parts.size() == 2)
      return gen_petersen(num(0), num(1));
    if (name == "wheel" && parts.size() == 1) return wheel(num(0));
    if (name == "platonic" && parts.size() == 1) return platonic(parts[0]);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw DomainError("bad family constructor '" + call + "'");
  }
  throw DomainError("unknown family constructor '" + call + "'");
}

long long isqrt_ll(long long n) {
  long long r = (long long)std::sqrt((double)n);
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::optional<long long> explicit_order(const OrderTable& t, long long g) {
  for (const auto& row : t.rows)
    if (std::find(row.genera.begin(), row.genera.end(), g) != row.genera.end()) {
      long long num = row.num * (g - 1);
      if (num % row.den != 0)
        throw DomainError("order table: " + std::to_string(row.num) + "(g-1)/" +
                          std::to_string(row.den) + " is not integral at g=" +
                          std::to_string(g));
      return num / row.den;
    }
  return std::nullopt;
}

std::optional<long long> square_order(const OrderTable& t, long long g) {
  long long k = isqrt_ll(g);
  if (k * k != g) return std::nullopt;
  if (std::find(t.square_excluded_k.begin(), t.square_excluded_k.end(), k) !=
      t.square_excluded_k.end())
    return std::nullopt;
  return t.square_coef * (k + 1) * (k + 1);
}

// Explicit rows win over the square rule, which wins over the default.
OrderValue table_value(const OrderTable& t, long long g) {
  if (auto e = explicit_order(t, g)) return {true, *e, 0};
  if (auto s = square_order(t, g)) return {true, *s, 0};
  long long lo = t.default_coef * (g + 1);
  if (t.default_interval) return {false, lo, 2 * lo};
  return {true, lo, 0};
}

// ---- validation machinery ----

struct Caches {
  std::map<std::string, CosetTable> tables;
  std::map<std::string, PermutationGroup> regs;
};

// Enumerates every orbifold an arc in `arcs` needs, so that later lookups
// (possibly from several threads) only ever read.
void prime_caches(const Atlas& atlas, const std::vector<const ArcRecord*>& arcs,
                  size_t budget, Caches& c) {
  for (const ArcRecord* arc : arcs) {
    if (c.tables.count(arc->orbifold)) continue;
    const OrbifoldRecord* orb = atlas.find(arc->orbifold);
    if (!orb || !orb->presentation)
      throw DomainError(arc->orbifold + " has no stored presentation");
    Presentation pres = parse_presentation(*orb->presentation);
    CosetTable t = enumerate(pres, {}, budget);
    c.regs.emplace(orb->id, regular_representation(t));
    c.tables.emplace(orb->id, std::move(t));
  }
}

ArcData make_arc_data(const CosetTable& t, const PermutationGroup& reg,
                      const ArcRecord& arc) {
  const auto& gens = t.pres.generators;
  Word u = parse_word(arc.words->u, gens);
  Word ul = parse_word(arc.words->ul, gens);
  Word ur = parse_word(arc.words->ur, gens);
  ArcData data;
  data.group = reg;
  data.h_e = subgroup_from_words(t, {u});
  data.h_a = subgroup_from_words(t, {u, ul});
  data.h_b = subgroup_from_words(t, {u, ur});
  data.label = arc.label();
  return data;
}

std::vector<const ArcRecord*> word_arcs_of_row(const Atlas& atlas, int row) {
  std::vector<const ArcRecord*> out;
  for (const auto& o : atlas.orbifolds)
    for (const auto& arc : o.arcs)
      if (arc.row == row && arc.words) out.push_back(&arc);
  return out;
}

void check_identities(const InvariantSet& s, long long genus, bool& handshake_ok,
                      bool& genus_ok) {
  long long degree_sum = 0, vertices = 0;
  for (const auto& [d, count] : s.degree_hist) {
    degree_sum += (long long)d * count;
    vertices += count;
  }
  handshake_ok = degree_sum == 2 * s.edge_count;
  genus_ok = s.edge_count - vertices + 1 == genus;
}

struct RowOutcome {
  RowReport rep;
  std::vector<std::string> errors;
};

RowOutcome check_row(const Atlas& atlas, int index, const Caches& cache) {
  const InvariantRow& row = atlas.rows[index];
  const std::string name = row_name(row);
  RowOutcome out;
  RowReport& rep = out.rep;
  rep.row = index;

  check_identities(row.printed, row.genus, rep.handshake_ok, rep.genus_ok);
  bool flagged = !rep.handshake_ok || !rep.genus_ok;
  if (flagged) {
    rep.status = RowStatus::flagged;
    if (!rep.handshake_ok) rep.notes.push_back("printed degrees do not sum to 2E");
    if (!rep.genus_ok) rep.notes.push_back("printed E - V + 1 differs from the genus");
    if (!row.corrected) {
      rep.corrected_ok = false;
      out.errors.push_back(name + ": printed values fail with no stored correction");
    } else {
      bool ch = false, cg = false;
      check_identities(*row.corrected, row.genus, ch, cg);
      rep.corrected_ok = ch && cg;
      if (!rep.corrected_ok)
        out.errors.push_back(name + ": stored correction fails the same identities");
    }
  } else if (row.corrected) {
    out.errors.push_back(name + ": correction stored for a row that already passes");
  }

  if (row.family) {
    try {
      InvariantSet got = invariants(subdivide(family_graph(*row.family)));
      rep.family_match = got == row.best();
      if (!*rep.family_match)
        out.errors.push_back(name + ": subdivided " + *row.family +
                             " does not match the table row");
    } catch (const Error& e) {
      rep.family_match = false;
      out.errors.push_back(name + ": family check failed: " + e.what());
    }
  }

  for (const ArcRecord* arc : word_arcs_of_row(atlas, index)) {
    try {
      const OrbifoldRecord* orb = atlas.find(arc->orbifold);
      const CosetTable& table = cache.tables.at(arc->orbifold);
      if (orb->expected_order && table.n_cosets != *orb->expected_order)
        throw DomainError("group has order " + std::to_string(table.n_cosets) +
                          ", recorded order is " +
                          std::to_string(*orb->expected_order));
      long long want = ms_order(atlas, arc->genus);
      if (table.n_cosets != want)
        throw DomainError("group order " + std::to_string(table.n_cosets) +
                          " is not the genus-" + std::to_string(arc->genus) +
                          " maximum " + std::to_string(want));
      ArcData data = make_arc_data(table, cache.regs.at(arc->orbifold), *arc);
      MSGraph g = build_graph(data);
      euler_check(data, g);
      ActionReport action = verify_action(g);
      if (!action.automorphic)
        throw DomainError("group action does not preserve the graph");
      if (!action.faithful)
        throw DomainError("group action on the edges is not faithful");
      if (genus(g) != row.genus)
        throw DomainError("rebuilt graph has genus " + std::to_string(genus(g)));
      if (!(invariants(g.graph) == row.best()))
        throw DomainError("rebuilt invariants differ from the table row");
      rep.rebuilt.push_back(arc->label());
    } catch (const Error& e) {
      rep.notes.push_back(arc->label() + ": " + e.what());
      out.errors.push_back(name + ", " + arc->label() + ": " + e.what());
    }
  }
  if (!flagged && !rep.rebuilt.empty()) rep.status = RowStatus::verified;
  return out;
}

std::vector<Permutation> triple_perms(const CosetTable& t, const ArcWords& w) {
  const auto& gens = t.pres.generators;
  std::vector<Permutation> out;
  out.push_back(coset_action(t, parse_word(w.u, gens)));
  out.push_back(coset_action(t, parse_word(w.ul, gens)));
  out.push_back(coset_action(t, parse_word(w.ur, gens)));
  return out;
}

Permutation eval_template(const Word& w, const std::vector<Permutation>& base) {
  Permutation p = Permutation::identity(base[0].degree());
  for (const Letter& l : w)
    p = p * (l.sign > 0 ? base[l.gen] : base[l.gen].inverse());
  return p;
}

TripleCheck check_triple(const CosetTable& table, const ArcRecord& arc) {
  TripleCheck c;
  c.arc = arc.label();
  std::vector<Permutation> t = triple_perms(table, *arc.words);
  const Permutation& u = t[0];
  const Permutation& ul = t[1];
  const Permutation& ur = t[2];
  auto note = [&](const std::string& s) { c.notes.push_back(s); };

  if (u.order() != 2) note("u has order " + std::to_string(u.order()));
  if (ul.order() != 2) note("ul has order " + std::to_string(ul.order()));
  long long k = ur.order();
  if (k != 3 && k != 5) note("ur has order " + std::to_string(k));
  if ((u * ul).order() != 2) note("u*ul is not an involution");
  if (!(u * ur * u == ur.inverse())) note("u*ur*u differs from ur^-1");

  std::vector<Permutation> ga{u, ul}, gb{u, ur}, gall{u, ul, ur};
  ClosureResult ca = closure_limited(u.degree(), ga, 16);
  if (ca.exceeded || ca.elems.size() != 4)
    note("<u,ul> has order " +
         (ca.exceeded ? std::string(">16") : std::to_string(ca.elems.size())) +
         ", not 4");
  ClosureResult cb = closure_limited(u.degree(), gb, 64);
  if (cb.exceeded || (long long)cb.elems.size() != 2 * k)
    note("<u,ur> has order " +
         (cb.exceeded ? std::string(">64") : std::to_string(cb.elems.size())) +
         ", not " + std::to_string(2 * k));

  if (!ca.exceeded && !cb.exceeded) {
    std::sort(ca.elems.begin(), ca.elems.end());
    std::sort(cb.elems.begin(), cb.elems.end());
    std::vector<Permutation> meet;
    std::set_intersection(ca.elems.begin(), ca.elems.end(), cb.elems.begin(),
                          cb.elems.end(), std::back_inserter(meet));
    bool has_id = std::find(meet.begin(), meet.end(),
                            Permutation::identity(u.degree())) != meet.end();
    bool has_u = std::find(meet.begin(), meet.end(), u) != meet.end();
    if (meet.size() != 2 || !has_id || !has_u)
      note("<u,ul> and <u,ur> meet outside <u>");
  }

  ClosureResult cg = closure_limited(u.degree(), gall, (size_t)table.n_cosets);
  if (cg.exceeded || (int)cg.elems.size() != table.n_cosets)
    note("triple generates a subgroup of order " +
         (cg.exceeded ? std::string(">|G|") : std::to_string(cg.elems.size())) +
         ", not " + std::to_string(table.n_cosets));

  c.ok = c.notes.empty();
  return c;
}

MapCheck check_map(const Atlas& atlas, const MapRecord& m, const Caches& cache,
                   const ValidateOptions& opt) {
  MapCheck c;
  c.name = m.from + " -> " + m.to;
  const ArcRecord& fa = atlas.find_arc(m.from);
  const ArcRecord& ta = atlas.find_arc(m.to);
  const CosetTable& ft = cache.tables.at(fa.orbifold);
  const CosetTable& tt = cache.tables.at(ta.orbifold);
  const PermutationGroup& gf = cache.regs.at(fa.orbifold);
  const PermutationGroup& gt = cache.regs.at(ta.orbifold);

  std::vector<Permutation> src = triple_perms(ft, *fa.words);
  std::vector<Permutation> tgt = triple_perms(tt, *ta.words);
  static const std::vector<std::string> kTripleNames{"v", "vl", "vr"};
  auto lifts = [&](const std::vector<std::string>& words, std::string& why) {
    std::vector<Permutation> img;
    for (const std::string& w : words)
      img.push_back(eval_template(parse_word(w, kTripleNames), tgt));
    try {
      std::optional<GroupHom> hom = hom_by_images(gf, src, gt, img);
      if (!hom) {
        why = "images extend to no homomorphism";
        return false;
      }
      if (!is_isomorphism(*hom)) {
        why = "homomorphism is not an isomorphism";
        return false;
      }
      return true;
    } catch (const Error& e) {
      why = e.what();
      return false;
    }
  };

  std::string why;
  c.printed_ok = lifts(m.images, why);
  c.corrected = m.corrected.has_value();
  if (!c.corrected) {
    c.hom_ok = c.printed_ok;
    if (!c.printed_ok) c.notes.push_back(why);
  } else {
    if (c.printed_ok)
      c.notes.push_back("correction stored but the printed images already lift");
    else
      c.notes.push_back("printed images: " + why);
    std::string why2;
    c.hom_ok = lifts(*m.corrected, why2);
    if (!c.hom_ok) c.notes.push_back("corrected images: " + why2);
  }

  MSGraph a = build_graph(make_arc_data(ft, gf, fa));
  MSGraph b = build_graph(make_arc_data(tt, gt, ta));
  IsoResult iso = isomorphic(a.graph, b.graph, opt.iso_timeout);
  switch (iso.verdict) {
    case IsoVerdict::isomorphic:
      c.graphs_isomorphic = true;
      break;
    case IsoVerdict::not_isomorphic:
      c.notes.push_back("arc graphs are not isomorphic");
      break;
    case IsoVerdict::inconclusive:
      c.notes.push_back("isomorphism search hit the timeout");
      break;
  }
  return c;
}

}  // namespace

std::string ArcRecord::label() const {
  return orbifold + "." + arc + "(" + std::to_string(genus) + ")";
}

const OrbifoldRecord* Atlas::find(const std::string& id) const {
  for (const auto& o : orbifolds)
    if (o.id == id) return &o;
  return nullptr;
}

const ArcRecord& Atlas::find_arc(const std::string& spec) const {
  std::string body = spec;
  std::optional<long long> genus;
  auto open = spec.find('(');
  if (open != std::string::npos) {
    if (spec.back() != ')') throw DomainError("bad arc spec '" + spec + "'");
    body = spec.substr(0, open);
    std::string digits = spec.substr(open + 1, spec.size() - open - 2);
    try {
      size_t used = 0;
      genus = std::stoll(digits, &used);
      if (used != digits.size()) throw std::invalid_argument(digits);
    } catch (const std::exception&) {
      throw DomainError("bad arc spec '" + spec + "'");
    }
  }
  auto dot = body.find('.');
  if (dot == std::string::npos)
    throw DomainError("bad arc spec '" + spec + "' (expected ORB.arc)");
  std::string id = body.substr(0, dot);
  std::string arc = body.substr(dot + 1);
  const OrbifoldRecord* orb = find(id);
  if (!orb) throw DomainError("unknown orbifold '" + id + "'");
  const ArcRecord* hit = nullptr;
  int n = 0;
  for (const auto& a : orb->arcs)
    if (a.arc == arc && (!genus || a.genus == *genus)) {
      hit = &a;
      ++n;
    }
  if (n == 0) throw DomainError("no arc matches '" + spec + "'");
  if (n > 1)
    throw DomainError("arc spec '" + spec + "' is ambiguous; append the genus as '" +
                      id + "." + arc + "(g)'");
  return *hit;
}

Atlas parse_atlas(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("atlas: ") + e.what());
  }
  Atlas a;
  try {
    a = read_atlas(j);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw SyntaxError(std::string("atlas: ") + e.what());
  }
  check_integrity(a);
  return a;
}

const Atlas& builtin_atlas() {
  static const Atlas atlas = parse_atlas(builtin_atlas_json());
  return atlas;
}

Atlas load_atlas(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open atlas file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_atlas(buf.str());
}

long long ms_order(const Atlas& atlas, long long g) {
  if (g <= 1) throw DomainError("genus must be at least 2");
  const OrderTable& t = atlas.tables.at("m");
  std::optional<long long> e = explicit_order(t, g);
  std::optional<long long> s = square_order(t, g);
  if (e && s && *e != *s)
    throw DomainError("order table m: explicit and square rules disagree at g=" +
                      std::to_string(g));
  if (e) return *e;
  if (s) return *s;
  return t.default_coef * (g + 1);
}

long long ms_order(long long g) { return ms_order(builtin_atlas(), g); }

GeneralOrders general_orders(const Atlas& atlas, long long g) {
  if (g <= 1) throw DomainError("genus must be at least 2");
  GeneralOrders out;
  out.mg = table_value(atlas.tables.at("M"), g);
  out.mstar = table_value(atlas.tables.at("Mstar"), g).value;
  out.eminus = table_value(atlas.tables.at("Eminus"), g).value;
  return out;
}

GeneralOrders general_orders(long long g) {
  return general_orders(builtin_atlas(), g);
}

ArcData arc_data(const Atlas& atlas, const ArcRecord& arc, size_t budget) {
  const OrbifoldRecord* orb = atlas.find(arc.orbifold);
  if (!orb) throw DomainError("unknown orbifold '" + arc.orbifold + "'");
  if (!orb->presentation)
    throw DomainError(arc.orbifold + " has no stored presentation");
  if (!arc.words) throw DomainError(arc.label() + " has no stabilizer words");
  Presentation pres = parse_presentation(*orb->presentation);
  CosetTable t = enumerate(pres, {}, budget);
  return make_arc_data(t, regular_representation(t), arc);
}

bool AtlasReport::ok() const { return errors.empty(); }

AtlasReport validate_atlas(const Atlas& atlas, const ValidateOptions& opt) {
  std::vector<int> selected;
  for (int i = 0; i < (int)atlas.rows.size(); ++i) {
    if (!opt.id.empty()) {
      const std::string prefix = opt.id + ".";
      bool hit = false;
      for (const auto& label : atlas.rows[i].labels)
        hit = hit || label.rfind(prefix, 0) == 0;
      if (!hit) continue;
    }
    selected.push_back(i);
  }
  if (selected.empty())
    throw DomainError("no atlas rows mention '" + opt.id + "'");

  std::vector<const ArcRecord*> arcs;
  for (int i : selected) {
    auto more = word_arcs_of_row(atlas, i);
    arcs.insert(arcs.end(), more.begin(), more.end());
  }
  Caches cache;
  prime_caches(atlas, arcs, opt.budget, cache);

  std::vector<RowOutcome> outcomes(selected.size());
  int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    for (size_t s = 0; s < selected.size(); ++s)
      outcomes[s] = check_row(atlas, selected[s], cache);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::future<void>> workers;
    for (int w = 0; w < jobs; ++w)
      workers.push_back(std::async(std::launch::async, [&] {
        for (size_t s = next++; s < selected.size(); s = next++)
          outcomes[s] = check_row(atlas, selected[s], cache);
      }));
    for (auto& f : workers) f.get();
  }

  AtlasReport report;
  for (RowOutcome& o : outcomes) {
    report.rows.push_back(std::move(o.rep));
    report.errors.insert(report.errors.end(), o.errors.begin(), o.errors.end());
  }
  return report;
}

bool SuiteReport::ok() const {
  for (const auto& t : triples)
    if (!t.ok) return false;
  for (const auto& m : maps) {
    if (!m.hom_ok || !m.graphs_isomorphic) return false;
    if (m.corrected == m.printed_ok) return false;
  }
  return true;
}

SuiteReport equivalence_suite(const Atlas& atlas, const ValidateOptions& opt) {
  std::vector<const ArcRecord*> arcs;
  for (const auto& o : atlas.orbifolds) {
    if (!opt.id.empty() && o.id != opt.id) continue;
    for (const auto& arc : o.arcs)
      if (arc.words) arcs.push_back(&arc);
  }
  std::vector<const MapRecord*> maps;
  for (const auto& m : atlas.maps) {
    if (!opt.id.empty()) {
      const ArcRecord& from = atlas.find_arc(m.from);
      const ArcRecord& to = atlas.find_arc(m.to);
      if (from.orbifold != opt.id && to.orbifold != opt.id) continue;
    }
    maps.push_back(&m);
  }

  std::vector<const ArcRecord*> prime = arcs;
  for (const MapRecord* m : maps) {
    prime.push_back(&atlas.find_arc(m->from));
    prime.push_back(&atlas.find_arc(m->to));
  }
  Caches cache;
  prime_caches(atlas, prime, opt.budget, cache);

  SuiteReport report;
  for (const ArcRecord* arc : arcs)
    report.triples.push_back(check_triple(cache.tables.at(arc->orbifold), *arc));
  for (const MapRecord* m : maps)
    report.maps.push_back(check_map(atlas, *m, cache, opt));
  return report;
}

}  // namespace msg
