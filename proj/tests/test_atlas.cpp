#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "msg/amalgam.hpp"
#include "msg/atlas.hpp"
#include "msg/cosets.hpp"
#include "msg/errors.hpp"
#include "msg/graphs.hpp"
#include "msg/permgrp.hpp"
#include "msg/words.hpp"

using namespace msg;
using nlohmann::json;

namespace {

// The printed coset-arrow list for the genus-11 arc of the second order-120
// orbifold, transcribed digit for digit.  Odd numbers are A-side coset
// representatives (1..59), even numbers B-side (2..40); renumbered here to
// 0..29 and 30..49.
Multigraph printed_genus11_graph() {
  static const int arrows[60][2] = {
      {1, 2},   {1, 4},   {3, 2},   {3, 6},   {5, 2},   {5, 8},   {7, 4},
      {7, 10},  {9, 4},   {9, 12},  {11, 6},  {11, 14}, {13, 8},  {13, 16},
      {15, 6},  {15, 18}, {17, 8},  {17, 20}, {19, 10}, {19, 22}, {21, 12},
      {21, 24}, {23, 10}, {23, 26}, {25, 12}, {25, 28}, {27, 14}, {27, 30},
      {29, 16}, {29, 32}, {31, 18}, {31, 28}, {33, 20}, {33, 26}, {35, 14},
      {35, 22}, {37, 16}, {37, 24}, {39, 18}, {39, 32}, {41, 20}, {41, 30},
      {43, 22}, {43, 34}, {45, 24}, {45, 36}, {47, 26}, {47, 36}, {49, 28},
      {49, 34}, {51, 30}, {51, 38}, {53, 32}, {53, 38}, {55, 34}, {55, 40},
      {57, 36}, {57, 40}, {59, 38}, {59, 40}};
  std::vector<std::pair<int, int>> edges;
  for (const auto& a : arrows)
    edges.push_back({(a[0] - 1) / 2, 30 + a[1] / 2 - 1});
  return Multigraph(50, edges);
}

int hist(const InvariantSet& inv, int k) {
  auto it = inv.degree_hist.find(k);
  return it == inv.degree_hist.end() ? 0 : it->second;
}

// Generator triple of an arc as permutations of the regular representation.
std::vector<Permutation> arc_triple(const Atlas& atlas, const std::string& spec,
                                    CosetTable& table_out) {
  const ArcRecord& arc = atlas.find_arc(spec);
  const OrbifoldRecord* o = atlas.find(arc.orbifold);
  REQUIRE(o != nullptr);
  REQUIRE(o->presentation.has_value());
  Presentation pres = parse_presentation(*o->presentation);
  table_out = enumerate(pres, {});
  return {coset_action(table_out, parse_word(arc.words->u, pres.generators)),
          coset_action(table_out, parse_word(arc.words->ul, pres.generators)),
          coset_action(table_out, parse_word(arc.words->ur, pres.generators))};
}

}  // namespace

TEST_CASE("builtin catalog loads with its cross-checks") {
  const Atlas& a = builtin_atlas();
  CHECK(a.schema == 1);
  CHECK(a.orbifolds.size() == 18);
  CHECK(a.rows.size() == 42);
  CHECK(a.maps.size() == 4);
  CHECK(a.tables.size() == 4);
  CHECK(a.tables.count("m") == 1);
  CHECK(a.tables.count("M") == 1);
  CHECK(a.tables.count("Mstar") == 1);
  CHECK(a.tables.count("Eminus") == 1);

  size_t arcs = 0, with_words = 0;
  for (const auto& o : a.orbifolds) {
    arcs += o.arcs.size();
    for (const auto& arc : o.arcs)
      if (arc.words) ++with_words;
  }
  CHECK(arcs == 48);
  CHECK(with_words == 9);

  size_t labels = 0, corrected = 0, families = 0;
  for (const auto& r : a.rows) {
    labels += r.labels.size();
    if (r.corrected) ++corrected;
    if (r.family) ++families;
  }
  CHECK(labels == arcs);
  CHECK(corrected == 2);
  CHECK(families == 20);
}

TEST_CASE("arc lookup resolves labels and flags ambiguity") {
  const Atlas& a = builtin_atlas();
  CHECK(a.find_arc("O34.a'").genus == 11);
  CHECK(a.find_arc("O34.a'").label() == "O34.a'(11)");
  CHECK(a.find_arc("O19.a(16)").row == 28);
  CHECK(a.find_arc("O15E.a(2)").row == 0);
  CHECK(a.find_arc("O15E.a(29)").row == 40);
  CHECK_THROWS_AS(a.find_arc("O15E.a"), DomainError);  // two genera
  CHECK_THROWS_AS(a.find_arc("O19.a(7)"), DomainError);
  CHECK_THROWS_AS(a.find_arc("O99.z"), DomainError);
  CHECK_THROWS_AS(a.find_arc("O34"), DomainError);

  const OrbifoldRecord* o = a.find("O28");
  REQUIRE(o != nullptr);
  CHECK(o->expected_order == 120);
  CHECK(a.find("O99") == nullptr);
}

TEST_CASE("minimal order lookup reproduces every explicit row") {
  const Atlas& a = builtin_atlas();
  for (const auto& row : a.tables.at("m").rows)
    for (long long g : row.genera)
      CHECK(ms_order(g) == row.num * (g - 1) / row.den);

  CHECK(ms_order(2) == 12);
  CHECK(ms_order(11) == 120);    // the two order-120 orbifolds
  CHECK(ms_order(9) == 96);      // explicit row wins over the excluded square
  CHECK(ms_order(121) == 1440);
  CHECK(ms_order(361) == 2400);
  CHECK(ms_order(49) == 384);
  CHECK(ms_order(29) == 120);
  CHECK(ms_order(841) == 3600);  // explicit row and square rule coincide
  CHECK(ms_order(4) == 36);
  CHECK(ms_order(16) == 100);
  CHECK(ms_order(36) == 196);    // square rule only
  CHECK(ms_order(10) == 44);        // default 4(g+1)
  CHECK(ms_order(9998) == 39996);   // default 4(g+1)
  CHECK(ms_order(10000) == 40804);  // 10000 = 100^2
  CHECK_THROWS_AS(ms_order(1), DomainError);
  CHECK_THROWS_AS(ms_order(0), DomainError);

  // Word-bearing orbifolds have order m_g at the genus of their arcs.
  for (const auto& o : a.orbifolds)
    for (const auto& arc : o.arcs)
      if (arc.words) {
        REQUIRE(o.expected_order.has_value());
        CHECK(*o.expected_order == ms_order(arc.genus));
      }
}

TEST_CASE("upper order tables with interval defaults") {
  GeneralOrders g2 = general_orders(2);
  CHECK(g2.mg.exact);
  CHECK(g2.mg.value == 12);
  CHECK(g2.mstar == 24);
  CHECK(g2.eminus == 24);

  CHECK(general_orders(7).mg.value == 96);

  GeneralOrders g36 = general_orders(36);
  CHECK(g36.mg.exact);
  CHECK(g36.mg.value == 392);
  CHECK(g36.mstar == 392);
  CHECK(g36.eminus == 392);

  GeneralOrders g10 = general_orders(10);  // M falls to a bound interval
  CHECK_FALSE(g10.mg.exact);
  CHECK(g10.mg.value == 44);
  CHECK(g10.mg.sup == 88);
  CHECK(g10.mstar == 88);
  CHECK(g10.eminus == 88);

  CHECK(general_orders(16).mg.value == 200);
  CHECK(general_orders(16).eminus == 200);

  // At 1681 the explicit rows beat the square rule in all three tables.
  GeneralOrders g1681 = general_orders(1681);
  CHECK(g1681.mg.exact);
  CHECK(g1681.mg.value == 14400);
  CHECK(g1681.mstar == 14400);
  CHECK(g1681.eminus == 14400);
  CHECK(ms_order(1681) == 7200);

  CHECK_THROWS_AS(general_orders(1), DomainError);
}

TEST_CASE("explicit rows and square rule agree wherever both apply") {
  const Atlas& a = builtin_atlas();
  std::set<std::pair<std::string, long long>> mismatches;
  for (const auto& [name, table] : a.tables) {
    for (const auto& row : table.rows)
      for (long long g : row.genera) {
        if (g > 10000) continue;
        long long k = 1;
        while (k * k < g) ++k;
        if (k * k != g) continue;
        if (std::count(table.square_excluded_k.begin(),
                       table.square_excluded_k.end(), k))
          continue;
        if (row.num * (g - 1) / row.den != table.square_coef * (k + 1) * (k + 1))
          mismatches.insert({name, g});
      }
  }
  std::set<std::pair<std::string, long long>> expected{
      {"Eminus", 1681}, {"M", 1681}, {"Mstar", 1681}};
  CHECK(mismatches == expected);
}

TEST_CASE("minimal orders exceed four times genus minus one") {
  for (long long g = 2; g <= 10000; ++g) CHECK(ms_order(g) > 4 * (g - 1));
}

TEST_CASE("atlas json round trip and rejection of broken data") {
  const std::string path = "test_atlas_roundtrip.json";
  {
    std::ofstream out(path);
    out << builtin_atlas_json();
  }
  Atlas loaded = load_atlas(path);
  CHECK(loaded.orbifolds.size() == builtin_atlas().orbifolds.size());
  CHECK(loaded.rows.size() == builtin_atlas().rows.size());
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_atlas("no_such_atlas_file.json"), IoError);
  CHECK_THROWS_AS(parse_atlas("{"), SyntaxError);
  CHECK_THROWS_AS(parse_atlas("[1, 2]"), SyntaxError);

  json base = json::parse(builtin_atlas_json());

  json wrong_schema = base;
  wrong_schema["schema"] = 2;
  CHECK_THROWS_AS(parse_atlas(wrong_schema.dump()), DomainError);

  json genus_clash = base;  // row genus no longer matches its arc
  genus_clash["rows"][0]["genus"] = 3;
  CHECK_THROWS_AS(parse_atlas(genus_clash.dump()), DomainError);

  json short_map = base;
  short_map["maps"][0]["images"] = {"v", "vl"};
  CHECK_THROWS_AS(parse_atlas(short_map.dump()), DomainError);

  json bad_image = base;
  bad_image["maps"][0]["images"] = {"v", "vl", "w"};
  CHECK_THROWS_AS(parse_atlas(bad_image.dump()), Error);

  json wordless = base;  // strip words from a map endpoint
  for (auto& o : wordless["orbifolds"])
    if (o["id"] == "O34")
      for (auto& arc : o["arcs"])
        if (arc["arc"] == "b") arc.erase("words");
  CHECK_THROWS_AS(parse_atlas(wordless.dump()), DomainError);
}

TEST_CASE("validation flags exactly the two corrected rows") {
  AtlasReport report = validate_atlas();
  CHECK(report.ok());
  CHECK(report.errors.empty());
  REQUIRE(report.rows.size() == 42);

  std::set<int> flagged;
  size_t verified = 0, passed = 0, families = 0;
  std::vector<std::string> rebuilt;
  for (const auto& r : report.rows) {
    switch (r.status) {
      case RowStatus::flagged: {
        flagged.insert(r.row);
        CHECK(r.corrected_ok);
        bool printed_clean = r.handshake_ok && r.genus_ok;
        CHECK_FALSE(printed_clean);
        break;
      }
      case RowStatus::verified:
        ++verified;
        CHECK(r.handshake_ok);
        CHECK(r.genus_ok);
        break;
      case RowStatus::pass:
        ++passed;
        break;
    }
    rebuilt.insert(rebuilt.end(), r.rebuilt.begin(), r.rebuilt.end());
    if (r.family_match) {
      ++families;
      CHECK(*r.family_match);
    }
  }
  CHECK(flagged == std::set<int>{4, 32});
  CHECK(verified == 5);
  CHECK(passed == 35);
  CHECK(families == 20);

  std::sort(rebuilt.begin(), rebuilt.end());
  std::vector<std::string> expected{
      "O20C.a(9)",    "O20C.b(9)",    "O22B.a(121)", "O22B.b(121)",
      "O22C.a(361)",  "O22C.b(361)",  "O28.a'(11)",  "O34.a'(11)",
      "O34.b(11)"};
  CHECK(rebuilt == expected);

  // Every row holding a word-bearing arc came out verified.
  const Atlas& a = builtin_atlas();
  for (const auto& o : a.orbifolds)
    for (const auto& arc : o.arcs)
      if (arc.words) CHECK(report.rows[arc.row].status == RowStatus::verified);
}

TEST_CASE("parallel validation matches the sequential report") {
  ValidateOptions seq, par;
  par.jobs = 3;
  AtlasReport a = validate_atlas(builtin_atlas(), seq);
  AtlasReport b = validate_atlas(builtin_atlas(), par);
  REQUIRE(a.rows.size() == b.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].row == b.rows[i].row);
    CHECK(a.rows[i].status == b.rows[i].status);
    CHECK(a.rows[i].rebuilt == b.rows[i].rebuilt);
    CHECK(a.rows[i].notes == b.rows[i].notes);
  }
  CHECK(a.errors == b.errors);
}

TEST_CASE("validation restricted to one orbifold") {
  ValidateOptions opt;
  opt.id = "O22B";
  AtlasReport report = validate_atlas(builtin_atlas(), opt);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].row == 17);
  CHECK(report.rows[0].status == RowStatus::verified);
  CHECK(report.rows[0].rebuilt.size() == 2);
  CHECK(report.ok());

  ValidateOptions unknown;
  unknown.id = "O99";
  CHECK_THROWS_AS(validate_atlas(builtin_atlas(), unknown), DomainError);
}

TEST_CASE("genus-11 rebuild matches the printed arrow list") {
  const Atlas& a = builtin_atlas();
  ArcData data = arc_data(a, a.find_arc("O34.a'"));
  MSGraph g = build_graph(data);
  CHECK(g.n_a == 30);
  CHECK(g.n_b == 20);
  CHECK(genus(g) == 11);

  InvariantSet inv = invariants(g.graph);
  CHECK(hist(inv, 2) == 30);
  CHECK(hist(inv, 3) == 20);
  CHECK(inv.edge_count == 60);
  CHECK(inv.diameter == 10);
  CHECK(inv.girth == 12);

  Multigraph printed = printed_genus11_graph();
  CHECK(invariants(printed) == inv);
  CHECK(isomorphic(g.graph, printed).verdict == IsoVerdict::isomorphic);

  // Same graph again as the subdivided named family of its table row.
  Multigraph family = subdivide(gen_petersen(10, 3));
  CHECK(isomorphic(family, printed).verdict == IsoVerdict::isomorphic);

  // Records without presentations or words cannot be rebuilt.
  CHECK_THROWS_AS(arc_data(a, a.find_arc("O26.a(3)")), DomainError);
  CHECK_THROWS_AS(arc_data(a, a.find_arc("O28.b(19)")), DomainError);
}

TEST_CASE("equivalence suite passes with one template correction") {
  SuiteReport report = equivalence_suite();
  CHECK(report.ok());
  REQUIRE(report.triples.size() == 9);
  for (const auto& t : report.triples) {
    CHECK(t.ok);
    CHECK(t.notes.empty());
  }

  REQUIRE(report.maps.size() == 4);
  for (const auto& m : report.maps) {
    CHECK(m.hom_ok);
    CHECK(m.graphs_isomorphic);
    if (m.name == "O20C.a -> O20C.b") {
      CHECK_FALSE(m.printed_ok);  // printed images extend to no homomorphism
      CHECK(m.corrected);
      REQUIRE_FALSE(m.notes.empty());
      CHECK(m.notes[0].find("printed images") != std::string::npos);
    } else {
      CHECK(m.printed_ok);
      CHECK_FALSE(m.corrected);
      CHECK(m.notes.empty());
    }
  }
}

TEST_CASE("suite restricted to one orbifold") {
  ValidateOptions opt;
  opt.id = "O28";
  SuiteReport report = equivalence_suite(builtin_atlas(), opt);
  CHECK(report.ok());
  CHECK(report.triples.size() == 1);  // only O28.a' carries words
  REQUIRE(report.maps.size() == 1);
  CHECK(report.maps[0].name == "O28.a' -> O34.b");
}

TEST_CASE("broken image templates are rejected") {
  const Atlas& atlas = builtin_atlas();

  CosetTable t28, t34, t22a, t22b;
  std::vector<Permutation> src = arc_triple(atlas, "O28.a'", t28);
  std::vector<Permutation> tgt = arc_triple(atlas, "O34.b", t34);
  PermutationGroup g28 = regular_representation(t28);
  PermutationGroup g34 = regular_representation(t34);

  // Sending the order-2 generator to the order-3 one breaks u^2 = 1.
  std::vector<Permutation> broken{tgt[2], tgt[1], tgt[2]};
  CHECK_FALSE(hom_by_images(g28, src, g34, broken).has_value());

  // All-identity images always extend, but only onto the trivial subgroup.
  Permutation id = Permutation::identity(tgt[0].degree());
  std::vector<Permutation> trivial{id, id, id};
  auto collapse = hom_by_images(g28, src, g34, trivial);
  REQUIRE(collapse.has_value());
  CHECK(collapse->image_order == 1);
  CHECK_FALSE(is_isomorphism(*collapse));

  // The twisted template of the order-2400 pair is load-bearing: the
  // identity correspondence does not survive the relators.
  std::vector<Permutation> a = arc_triple(atlas, "O22C.a", t22a);
  std::vector<Permutation> b = arc_triple(atlas, "O22C.b", t22b);
  PermutationGroup g = regular_representation(t22a);
  PermutationGroup h = regular_representation(t22b);
  std::vector<Permutation> untwisted{b[0], b[1], b[2]};
  CHECK_FALSE(hom_by_images(g, a, h, untwisted).has_value());
  std::vector<Permutation> shifted{b[0], b[1] * b[0], b[2] * b[2]};
  auto twisted = hom_by_images(g, a, h, shifted);
  REQUIRE(twisted.has_value());
  CHECK(is_isomorphism(*twisted));
}
