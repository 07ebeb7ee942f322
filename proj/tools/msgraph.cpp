// Command-line front end.  Subcommands map onto the library modules: coset
// enumeration (order), graph rebuilds (build), invariant computation
// (invariants), dataset validation (verify-atlas), generator-map lifting
// (check-hom), generating-pair surveys (genpairs), maximum-order tables
// (tables) and wireframe projection (project).
//
// Exit codes: 0 success, 1 a checked property failed to verify, 2 resource
// limit hit (raise --budget or --cap), 3 usage or input error.

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "msg/amalgam.hpp"
#include "msg/atlas.hpp"
#include "msg/cosets.hpp"
#include "msg/errors.hpp"
#include "msg/genpairs.hpp"
#include "msg/graphs.hpp"
#include "msg/quatalg.hpp"
#include "msg/spatial.hpp"
#include "msg/words.hpp"

namespace {

using nlohmann::ordered_json;

struct Config {
  std::string atlas_path;
  size_t budget = msg::kDefaultCosetBudget;
  size_t cap = msg::kPairGroupCap;
  long long timeout_ms = 60000;
  int jobs = 1;
  std::string format = "json";

  bool json() const { return format == "json"; }
};

int exit_code_for(const msg::Error& e) {
  if (e.is_budget()) return 2;
  switch (e.code()) {
    case msg::errc::not_subgroup_triple:
    case msg::errc::euler_mismatch:
    case msg::errc::disconnected:
    case msg::errc::no_pairs:
      return 1;
    default:
      return 3;
  }
}

std::string slurp(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw msg::IoError("cannot read " + path);
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw msg::IoError("cannot write " + out_path);
  out << text;
}

const msg::Atlas& pick_atlas(const Config& cfg, std::optional<msg::Atlas>& storage) {
  if (cfg.atlas_path.empty()) return msg::builtin_atlas();
  storage = msg::load_atlas(cfg.atlas_path);
  return *storage;
}

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace((unsigned char)s[b])) ++b;
  while (e > b && std::isspace((unsigned char)s[e - 1])) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

long long parse_ll(const std::string& text) {
  size_t pos = 0;
  long long v;
  try {
    v = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw msg::SyntaxError("bad integer '" + text + "'");
  }
  if (pos != text.size()) throw msg::SyntaxError("bad integer '" + text + "'");
  return v;
}

msg::Fraction parse_fraction(const std::string& raw) {
  std::string text = trim(raw);
  size_t slash = text.find('/');
  if (slash == std::string::npos) return msg::Fraction(parse_ll(text));
  return msg::Fraction(parse_ll(trim(text.substr(0, slash))),
                       parse_ll(trim(text.substr(slash + 1))));
}

std::optional<msg::Fraction> rational_sqrt(const msg::Fraction& f) {
  if (f.sign() < 0) return std::nullopt;
  auto isqrt = [](long long v) -> std::optional<long long> {
    long long r = (long long)std::llround(std::sqrt((double)v));
    for (long long c = std::max<long long>(0, r - 2); c <= r + 2; ++c)
      if (c * c == v) return c;
    return std::nullopt;
  };
  auto n = isqrt(f.num());
  auto d = isqrt(f.den());
  if (!n || !d) return std::nullopt;
  return msg::Fraction(*n, *d);
}

// "w,x,y,z" with rational entries.  Any nonzero scale whose norm^2 is the
// square of a rational is accepted and normalized exactly, so 1,2,4,10 means
// (1,2,4,10)/11.
msg::S3Point parse_pole(const std::string& text) {
  std::vector<std::string> parts = split(text, ',');
  if (parts.size() != 4)
    throw msg::SyntaxError("pole needs four comma-separated rationals");
  std::array<msg::Fraction, 4> c;
  for (int i = 0; i < 4; ++i) c[i] = parse_fraction(parts[i]);
  msg::Fraction n2(0);
  for (const auto& x : c) n2 += x * x;
  std::optional<msg::Fraction> root = rational_sqrt(n2);
  if (!root || root->is_zero())
    throw msg::DomainError("pole norm^2 = " + n2.str() +
                           " must be the square of a nonzero rational");
  msg::Quaternion q{msg::FieldElem(c[0] / *root), msg::FieldElem(c[1] / *root),
                    msg::FieldElem(c[2] / *root), msg::FieldElem(c[3] / *root)};
  return msg::make_s3_point(q);
}

ordered_json parse_json(const std::string& text, const std::string& what) {
  ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw msg::SyntaxError(what + ": not valid JSON");
  return doc;
}

// Shared graph document: "vertices" is an array (ids are the positions) or a
// plain count, "edges" an array of [u, v] pairs.
msg::Multigraph graph_from_json(const ordered_json& doc, const std::string& what) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw msg::SyntaxError(what + ": expected an object with vertices and edges");
  const ordered_json& v = doc["vertices"];
  int n = 0;
  if (v.is_array())
    n = (int)v.size();
  else if (v.is_number_integer())
    n = v.get<int>();
  else
    throw msg::SyntaxError(what + ": vertices must be an array or a count");
  if (!doc["edges"].is_array())
    throw msg::SyntaxError(what + ": edges must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const ordered_json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw msg::SyntaxError(what + ": each edge must be a pair of vertex ids");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return msg::Multigraph(n, std::move(edges));
}

// Embedding coordinates are exact rationals: integers or "p/q" strings.
msg::S3Point point_from_json(const ordered_json& e, const std::string& what) {
  if (!e.is_array() || e.size() != 4)
    throw msg::SyntaxError(what + ": each embedding point must be [w, x, y, z]");
  std::array<msg::Fraction, 4> c;
  for (int i = 0; i < 4; ++i) {
    const ordered_json& v = e[i];
    if (v.is_number_integer())
      c[i] = msg::Fraction(v.get<long long>());
    else if (v.is_string())
      c[i] = parse_fraction(v.get<std::string>());
    else
      throw msg::SyntaxError(what + ": coordinates must be integers or \"p/q\" strings");
  }
  return msg::make_s3_point({msg::FieldElem(c[0]), msg::FieldElem(c[1]),
                             msg::FieldElem(c[2]), msg::FieldElem(c[3])});
}

// "u = word; ul = word2": the names label the output, the words are parsed
// over the presentation's generators.
std::vector<std::pair<std::string, msg::Word>> parse_word_list(
    const std::string& text, const msg::Presentation& pres) {
  std::vector<std::pair<std::string, msg::Word>> out;
  for (const std::string& item : split(text, ';')) {
    std::string t = trim(item);
    if (t.empty()) continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw msg::SyntaxError("expected name=word in '" + t + "'");
    std::string name = trim(t.substr(0, eq));
    if (name.empty()) throw msg::SyntaxError("empty name in '" + t + "'");
    out.emplace_back(name, msg::parse_word(t.substr(eq + 1), pres.generators));
  }
  if (out.empty()) throw msg::SyntaxError("empty word list");
  return out;
}

int run_order(const Config& cfg, const std::string& file,
              const std::string& subgroup_text) {
  msg::Presentation pres = msg::parse_presentation(slurp(file));
  msg::SubgroupSpec sub;
  if (!subgroup_text.empty()) sub = msg::parse_subgroup(subgroup_text, pres);
  msg::CosetTable t = msg::enumerate(pres, sub, cfg.budget);
  const char* key = sub.empty() ? "order" : "index";
  if (cfg.json()) {
    ordered_json out;
    out[key] = t.n_cosets;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << key << " = " << t.n_cosets << "\n";
  }
  return 0;
}

int run_build(const Config& cfg, const std::string& spec) {
  std::optional<msg::Atlas> storage;
  const msg::Atlas& atlas = pick_atlas(cfg, storage);
  const msg::ArcRecord& arc = atlas.find_arc(spec);
  msg::ArcData data = msg::arc_data(atlas, arc, cfg.budget);
  msg::MSGraph g = msg::build_graph(data);
  msg::euler_check(data, g);
  std::vector<int> deg = g.graph.degrees();
  long long gen = msg::genus(g);
  if (cfg.json()) {
    ordered_json verts = ordered_json::array();
    for (int i = 0; i < g.graph.n_vertices(); ++i)
      verts.push_back({{"id", i},
                       {"side", std::string(1, g.vertex_side[i])},
                       {"degree", deg[i]}});
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : g.graph.edges()) edges.push_back({u, v});
    ordered_json out;
    out["vertices"] = std::move(verts);
    out["edges"] = std::move(edges);
    out["genus"] = gen;
    out["order"] = (long long)data.group.order();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "graph " << arc.label() << "\n"
              << "order = " << data.group.order() << "\n"
              << "genus = " << gen << "\n"
              << "vertices = " << g.graph.n_vertices() << " (A " << g.n_a
              << ", B " << g.n_b << ")\n"
              << "edges = " << g.graph.n_edges() << "\n";
  }
  return 0;
}

int run_invariants(const Config& cfg, const std::string& file) {
  std::string what = file == "-" ? "stdin" : file;
  msg::Multigraph g = graph_from_json(parse_json(slurp(file), what), what);
  msg::InvariantSet inv = msg::invariants(g);
  if (cfg.json()) {
    ordered_json hist = ordered_json::object();
    for (const auto& [d, c] : inv.degree_hist) hist[std::to_string(d)] = c;
    ordered_json out;
    out["degrees"] = std::move(hist);
    out["edges"] = inv.edge_count;
    out["diameter"] = inv.diameter;
    if (inv.girth)
      out["girth"] = *inv.girth;
    else
      out["girth"] = "acyclic";
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "degrees =";
    for (const auto& [d, c] : inv.degree_hist) std::cout << " " << d << "^" << c;
    std::cout << "\n"
              << "edges = " << inv.edge_count << "\n"
              << "diameter = " << inv.diameter << "\n"
              << "girth = ";
    if (inv.girth)
      std::cout << *inv.girth << "\n";
    else
      std::cout << "acyclic\n";
  }
  return 0;
}

int run_verify(const Config& cfg, const std::string& id) {
  std::optional<msg::Atlas> storage;
  const msg::Atlas& atlas = pick_atlas(cfg, storage);
  msg::ValidateOptions opt;
  opt.id = id;
  opt.budget = cfg.budget;
  opt.iso_timeout = std::chrono::milliseconds(cfg.timeout_ms);
  opt.jobs = cfg.jobs;
  msg::AtlasReport rows = msg::validate_atlas(atlas, opt);
  msg::SuiteReport suite = msg::equivalence_suite(atlas, opt);
  bool ok = rows.ok() && suite.ok();
  auto status_name = [](msg::RowStatus s) {
    switch (s) {
      case msg::RowStatus::pass:
        return "pass";
      case msg::RowStatus::flagged:
        return "flagged";
      default:
        return "verified";
    }
  };
  if (cfg.json()) {
    ordered_json jrows = ordered_json::array();
    for (const msg::RowReport& r : rows.rows) {
      ordered_json row;
      row["row"] = r.row;
      row["labels"] = atlas.rows[r.row].labels;
      row["status"] = status_name(r.status);
      row["handshake"] = r.handshake_ok;
      row["genus"] = r.genus_ok;
      row["corrected_ok"] = r.corrected_ok;
      row["rebuilt"] = r.rebuilt;
      row["family"] = r.family_match ? ordered_json(*r.family_match) : ordered_json(nullptr);
      row["notes"] = r.notes;
      jrows.push_back(std::move(row));
    }
    ordered_json jtriples = ordered_json::array();
    for (const msg::TripleCheck& t : suite.triples)
      jtriples.push_back({{"arc", t.arc}, {"ok", t.ok}, {"notes", t.notes}});
    ordered_json jmaps = ordered_json::array();
    for (const msg::MapCheck& m : suite.maps)
      jmaps.push_back({{"map", m.name},
                       {"printed", m.printed_ok},
                       {"corrected", m.corrected},
                       {"isomorphism", m.hom_ok},
                       {"graphs_isomorphic", m.graphs_isomorphic},
                       {"notes", m.notes}});
    ordered_json out;
    out["rows"] = std::move(jrows);
    out["errors"] = rows.errors;
    out["triples"] = std::move(jtriples);
    out["maps"] = std::move(jmaps);
    out["ok"] = ok;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const msg::RowReport& r : rows.rows) {
      std::cout << "row " << r.row;
      for (const std::string& l : atlas.rows[r.row].labels) std::cout << " " << l;
      std::cout << " " << status_name(r.status);
      if (!r.handshake_ok) std::cout << " handshake=FAIL";
      if (!r.genus_ok) std::cout << " genus=FAIL";
      if (!r.corrected_ok) std::cout << " corrected=FAIL";
      if (r.family_match) std::cout << " family=" << (*r.family_match ? "ok" : "FAIL");
      std::cout << "\n";
      for (const std::string& n : r.notes) std::cout << "  note: " << n << "\n";
    }
    for (const std::string& e : rows.errors) std::cout << "error: " << e << "\n";
    for (const msg::TripleCheck& t : suite.triples) {
      std::cout << "triple " << t.arc << " " << (t.ok ? "ok" : "FAIL") << "\n";
      for (const std::string& n : t.notes) std::cout << "  note: " << n << "\n";
    }
    for (const msg::MapCheck& m : suite.maps) {
      std::cout << "map " << m.name << " "
                << (m.hom_ok && m.graphs_isomorphic ? "ok" : "FAIL")
                << (m.corrected ? " (corrected images)" : "") << "\n";
      for (const std::string& n : m.notes) std::cout << "  note: " << n << "\n";
    }
    std::cout << (ok ? "ok" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

int run_checkhom(const Config& cfg, const std::string& f1, const std::string& f2,
                 const std::string& map_text, const std::string& images_text) {
  msg::Presentation p1 = msg::parse_presentation(slurp(f1));
  msg::Presentation p2 = msg::parse_presentation(slurp(f2));
  auto srcs = parse_word_list(map_text, p1);
  auto imgs = parse_word_list(images_text, p2);
  if (srcs.size() != imgs.size())
    throw msg::SyntaxError("--map lists " + std::to_string(srcs.size()) +
                           " words but --images lists " + std::to_string(imgs.size()));
  msg::CosetTable t1 = msg::enumerate(p1, {}, cfg.budget);
  msg::CosetTable t2 = msg::enumerate(p2, {}, cfg.budget);
  msg::PermutationGroup g = msg::regular_representation(t1);
  msg::PermutationGroup h = msg::regular_representation(t2);
  std::vector<msg::Permutation> gens, images;
  for (const auto& [name, w] : srcs) gens.push_back(msg::coset_action(t1, w));
  for (const auto& [name, w] : imgs) images.push_back(msg::coset_action(t2, w));
  std::optional<msg::GroupHom> hom = msg::hom_by_images(g, gens, h, images);
  std::string verdict = !hom                       ? "undefined"
                        : msg::is_isomorphism(*hom) ? "isomorphism"
                                                    : "homomorphism";
  if (cfg.json()) {
    ordered_json out;
    out["verdict"] = verdict;
    out["source_order"] = (long long)g.order();
    out["target_order"] = (long long)h.order();
    if (hom) out["image_order"] = (long long)hom->image_order;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << verdict << "\n"
              << "source order = " << g.order() << "\n"
              << "target order = " << h.order() << "\n";
    if (hom) std::cout << "image order = " << hom->image_order << "\n";
  }
  return hom ? 0 : 1;
}

int run_genpairs(const Config& cfg, const std::string& which) {
  msg::PermutationGroup g;
  if (which == "a5z2")
    g = msg::a5z2();
  else if (which == "a5s4")
    g = msg::a5s4();
  else
    g = msg::central_product_IO().perm_rep;
  std::vector<msg::GenPair> pairs = msg::enumerate_23_pairs(g, cfg.cap);
  bool equivalent = msg::all_pairs_equivalent(g);
  int partners = pairs.empty() ? 0 : msg::count_partners(g, pairs.front().y);
  if (cfg.json()) {
    ordered_json out;
    out["group"] = which;
    out["order"] = (long long)g.order();
    out["pairs"] = (long long)pairs.size();
    out["partners"] = partners;
    out["equivalent"] = equivalent;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "group = " << which << "\n"
              << "order = " << g.order() << "\n"
              << "pairs = " << pairs.size() << "\n"
              << "partners = " << partners << "\n"
              << "equivalent = " << (equivalent ? "yes" : "no") << "\n";
  }
  return equivalent ? 0 : 1;
}

int run_tables(const Config& cfg, long long genus) {
  std::optional<msg::Atlas> storage;
  const msg::Atlas& atlas = pick_atlas(cfg, storage);
  long long m = msg::ms_order(atlas, genus);
  msg::GeneralOrders gen = msg::general_orders(atlas, genus);
  if (cfg.json()) {
    ordered_json out;
    out["genus"] = genus;
    out["m"] = m;
    if (gen.mg.exact)
      out["M"] = gen.mg.value;
    else
      out["M"] = ordered_json{{"min", gen.mg.value}, {"sup", gen.mg.sup}};
    out["Mstar"] = gen.mstar;
    out["Eminus"] = gen.eminus;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "m(" << genus << ") = " << m << "\n";
    if (gen.mg.exact)
      std::cout << "M(" << genus << ") = " << gen.mg.value << "\n";
    else
      std::cout << "M(" << genus << ") = [" << gen.mg.value << ", " << gen.mg.sup
                << ")\n";
    std::cout << "M*(" << genus << ") = " << gen.mstar << "\n"
              << "E-(" << genus << ") = " << gen.eminus << "\n";
  }
  return 0;
}

int run_project(const Config& cfg, const std::string& model,
                const std::string& pole_text, int samples,
                const std::string& out_path) {
  msg::S3Point pole = pole_text.empty() ? msg::default_pole() : parse_pole(pole_text);
  static const std::array<const char*, 5> kModels = {
      "tesseract", "simplex4", "cube", "dodecahedron", "600cell"};
  msg::Multigraph graph;
  std::vector<msg::S3Point> embedding;
  if (std::find(kModels.begin(), kModels.end(), model) != kModels.end()) {
    embedding = msg::model_points(model);
    graph = msg::nn_skeleton(embedding);
  } else {
    ordered_json doc = parse_json(slurp(model), model);
    graph = graph_from_json(doc, model);
    if (!doc.contains("embedding") || !doc["embedding"].is_array())
      throw msg::SyntaxError(model + ": missing embedding array");
    for (const ordered_json& e : doc["embedding"])
      embedding.push_back(point_from_json(e, model));
  }
  msg::Scene scene = msg::export_scene(graph, embedding, pole, samples, model);
  emit(cfg.json() ? msg::scene_json(scene) : msg::scene_obj(scene), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximum-symmetry spatial graphs: rebuild, validate, project"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Config cfg;
  app.add_option("--atlas", cfg.atlas_path,
                 "atlas JSON file replacing the built-in dataset")
      ->envname("MSG_ATLAS");
  app.add_option("--budget", cfg.budget, "coset definition budget")
      ->capture_default_str()
      ->envname("MSG_BUDGET");
  app.add_option("--cap", cfg.cap, "group order cap for pair enumeration")
      ->capture_default_str()
      ->envname("MSG_CAP");
  app.add_option("--timeout", cfg.timeout_ms, "isomorphism timeout in milliseconds")
      ->capture_default_str()
      ->envname("MSG_TIMEOUT");
  app.add_option("--jobs", cfg.jobs, "parallel workers for batch validation")
      ->capture_default_str()
      ->envname("MSG_JOBS");
  app.add_option("--format", cfg.format, "output format (json or text)")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str()
      ->envname("MSG_FORMAT");

  std::string order_file, order_subgroup;
  CLI::App* order = app.add_subcommand(
      "order", "group order (or subgroup index) by coset enumeration");
  order->add_option("file", order_file, "presentation file")->required();
  order->add_option("--subgroup", order_subgroup,
                    "semicolon-separated subgroup words; prints the index instead");

  std::string build_spec;
  CLI::App* build =
      app.add_subcommand("build", "rebuild an atlas arc's invariant graph");
  build->add_option("arc", build_spec, "arc spec, e.g. O34.a' or O19.a(16)")
      ->required();

  std::string inv_file;
  CLI::App* inv = app.add_subcommand(
      "invariants", "degree histogram, edge count, diameter and girth");
  inv->add_option("file", inv_file, "graph JSON file, or - for stdin")->required();

  std::string verify_id;
  CLI::App* verify = app.add_subcommand(
      "verify-atlas", "validate rows, rebuilds, families, triples and maps");
  verify->add_option("--id", verify_id, "restrict to rows mentioning this orbifold");

  std::string hom_p1, hom_p2, hom_map, hom_images;
  CLI::App* hom = app.add_subcommand(
      "check-hom", "test whether a generator map extends to a homomorphism");
  hom->add_option("pres1", hom_p1, "source presentation file")->required();
  hom->add_option("pres2", hom_p2, "target presentation file")->required();
  hom->add_option("--map", hom_map, "source words, e.g. \"u=a; ul=b; ur=c*a\"")
      ->required();
  hom->add_option("--images", hom_images, "image words over the target generators")
      ->required();

  std::string pairs_group = "a5z2";
  CLI::App* pairs = app.add_subcommand(
      "genpairs", "survey generating (2,3)-pairs of a reference group");
  pairs->add_option("group", pairs_group, "a5z2, a5s4 or ixo")
      ->check(CLI::IsMember({"a5z2", "a5s4", "ixo"}))
      ->capture_default_str();

  long long tables_genus = 0;
  CLI::App* tables =
      app.add_subcommand("tables", "maximum symmetry orders for a genus");
  tables->add_option("--genus", tables_genus, "genus, at least 2")->required();

  std::string project_model, project_pole, project_out;
  int project_samples = 32;
  CLI::App* project = app.add_subcommand(
      "project", "stereographic wireframe of a model or an embedded graph");
  project
      ->add_option("model", project_model,
                   "tesseract, simplex4, cube, dodecahedron, 600cell, or a "
                   "graph+embedding JSON file")
      ->required();
  project->add_option("--pole", project_pole,
                      "projection pole w,x,y,z (rationals, any nonzero scale)");
  project->add_option("--samples", project_samples, "points per edge arc (min 8)")
      ->capture_default_str();
  project->add_option("-o,--output", project_out,
                      "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (*order) return run_order(cfg, order_file, order_subgroup);
    if (*build) return run_build(cfg, build_spec);
    if (*inv) return run_invariants(cfg, inv_file);
    if (*verify) return run_verify(cfg, verify_id);
    if (*hom) return run_checkhom(cfg, hom_p1, hom_p2, hom_map, hom_images);
    if (*pairs) return run_genpairs(cfg, pairs_group);
    if (*tables) return run_tables(cfg, tables_genus);
    if (*project)
      return run_project(cfg, project_model, project_pole, project_samples,
                         project_out);
  } catch (const msg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
