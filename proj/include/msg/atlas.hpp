#ifndef MSG_ATLAS_HPP
#define MSG_ATLAS_HPP

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "msg/amalgam.hpp"
#include "msg/cosets.hpp"
#include "msg/errors.hpp"
#include "msg/graphs.hpp"

namespace msg {

// Stabilizer generator words for one dashed arc: the edge group is <u>, the
// two vertex groups are <u, ul> and <u, ur>.
struct ArcWords {
  std::string u, ul, ur;
};

struct ArcRecord {
  std::string orbifold;  // owning record id, e.g. "O34"
  std::string arc;       // "a", "a'", "b", ...
  long long genus = 0;
  std::optional<bool> knotted;  // nullopt = not stated
  int row = -1;                 // index into Atlas::rows
  std::optional<ArcWords> words;

  std::string label() const;  // "O34.a'(11)"
};

struct OrbifoldRecord {
  std::string id;
  std::optional<long long> expected_order;  // absent for parametric families
  std::optional<std::string> presentation;  // parse_presentation format
  std::vector<ArcRecord> arcs;
};

// One printed invariant table row.  Rows shared by two arcs carry both
// labels.  `corrected` is present only where the printed values fail the
// handshake or genus identity; the printed data is never overwritten.
struct InvariantRow {
  std::vector<std::string> labels;
  long long genus = 0;
  InvariantSet printed;
  std::optional<InvariantSet> corrected;
  std::optional<std::string> family;  // constructor call, e.g. "dipole(6)"

  const InvariantSet& best() const { return corrected ? *corrected : printed; }
};

// Order tables.  An explicit row covers the listed genera with the value
// num*(g-1)/den; the square rule covers g = k*k (k not excluded) with
// coef*(sqrt(g)+1)^2; everything else falls to the default coef*(g+1),
// which for one table is only the inclusive lower end of a bound interval.
struct TableRow {
  long long num = 1, den = 1;
  std::vector<long long> genera;
};

struct OrderTable {
  std::vector<TableRow> rows;
  long long square_coef = 0;
  std::vector<long long> square_excluded_k;
  long long default_coef = 0;
  bool default_interval = false;  // [default_coef*(g+1), 2*default_coef*(g+1))
};

// Generator-triple correspondence between two arcs; `images` are words over
// the alphabet {v, vl, vr} naming the target arc's triple.  `corrected` is
// present only where the printed images fail to lift to an ambient group
// isomorphism; like row corrections it never overwrites the printed data.
struct MapRecord {
  std::string from, to;
  std::vector<std::string> images;
  std::optional<std::vector<std::string>> corrected;

  const std::vector<std::string>& best() const {
    return corrected ? *corrected : images;
  }
};

struct Atlas {
  int schema = 0;
  std::vector<OrbifoldRecord> orbifolds;
  std::vector<InvariantRow> rows;
  std::vector<MapRecord> maps;
  std::map<std::string, OrderTable> tables;  // keys: m, M, Mstar, Eminus

  const OrbifoldRecord* find(const std::string& id) const;
  // Arc spec "O34.a'" or, where one orbifold reuses an arc letter at several
  // genera, "O19.a(16)".  Throws DomainError on unknown or ambiguous specs.
  const ArcRecord& find_arc(const std::string& spec) const;
};

const std::string& builtin_atlas_json();
const Atlas& builtin_atlas();
Atlas parse_atlas(const std::string& json_text);
Atlas load_atlas(const std::string& path);

// Maximum order of an orientation-preserving extendable action on a minimal
// graph of genus g.  Explicit table rows take precedence over the square
// rule, which takes precedence over the default; wherever the explicit and
// square clauses overlap their values are asserted equal.
long long ms_order(long long g);
long long ms_order(const Atlas& atlas, long long g);

struct OrderValue {
  bool exact = true;
  long long value = 0;  // the value, or the inclusive lower bound
  long long sup = 0;    // exclusive upper bound when !exact
};

struct GeneralOrders {
  OrderValue mg;         // minimal graphs, orientation-reversing allowed
  long long mstar = 0;   // arbitrary graphs / handlebodies
  long long eminus = 0;  // type (-,-) extendable surface actions
};

GeneralOrders general_orders(long long g);
GeneralOrders general_orders(const Atlas& atlas, long long g);

// Rebuilds the arc's stabilizer data by coset enumeration of its orbifold
// group.  Throws DomainError when the record has no presentation or words.
ArcData arc_data(const Atlas& atlas, const ArcRecord& arc,
                 size_t budget = kDefaultCosetBudget);

struct ValidateOptions {
  std::string id;  // restrict to rows whose labels mention this orbifold
  size_t budget = kDefaultCosetBudget;
  std::chrono::milliseconds iso_timeout{60000};
  int jobs = 1;
};

enum class RowStatus { pass, flagged, verified };

struct RowReport {
  int row = -1;
  RowStatus status = RowStatus::pass;
  bool handshake_ok = false;  // printed degree sum == 2E
  bool genus_ok = false;      // printed E - V + 1 == genus
  bool corrected_ok = true;   // corrected row passes both checks
  std::vector<std::string> rebuilt;       // arc labels verified by rebuild
  std::optional<bool> family_match;       // subdivide(family) comparison
  std::vector<std::string> notes;         // mismatch details
};

struct AtlasReport {
  std::vector<RowReport> rows;
  std::vector<std::string> errors;
  bool ok() const;
};

// Per-row checks: handshake and genus identities on the printed values,
// consistency of any stored correction, rebuild-and-compare where stabilizer
// words exist, and a subdivided named-family comparison where one is named.
AtlasReport validate_atlas(const Atlas& atlas = builtin_atlas(),
                           const ValidateOptions& opt = {});

struct TripleCheck {
  std::string arc;
  bool ok = false;
  std::vector<std::string> notes;
};

struct MapCheck {
  std::string name;  // "O28.a' -> O34.b"
  bool printed_ok = false;         // printed images lift to an isomorphism
  bool corrected = false;          // a corrected template is stored
  bool hom_ok = false;             // best template lifts to an isomorphism
  bool graphs_isomorphic = false;  // rebuilt arc graphs are isomorphic
  std::vector<std::string> notes;
};

// ok() demands every triple check clean and every map an isomorphism with
// isomorphic graphs, with corrections present exactly where printed images
// fail to lift.
struct SuiteReport {
  std::vector<TripleCheck> triples;
  std::vector<MapCheck> maps;
  bool ok() const;
};

// Verifies the printed generator-map tables: every word-bearing arc carries
// a faithful dihedral-pair datum (orders 2/2/k, dihedral relations, vertex
// groups of orders 4 and 2k meeting in <u>, triple generating the group),
// and every stored correspondence extends to a group isomorphism with the
// two arc graphs abstractly isomorphic.
SuiteReport equivalence_suite(const Atlas& atlas = builtin_atlas(),
                              const ValidateOptions& opt = {});

}  // namespace msg

#endif
