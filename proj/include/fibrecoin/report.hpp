#pragma once

// Map specifications, per-pair reports and formula tables for the command
// line front end.
//
// Input accepts either one map per line,
//
//     # DOMAIN CODOMAIN q r
//     K K 4 1
//     K K 0 0
//
// or a JSON document: a MapSpec object {"domain":"K","codomain":"K","q":4,
// "r":1}, a pair object {"f1": MapSpec, "f2": MapSpec}, or an array of
// either. Maps are paired in input order unless each is paired with
// s_{+1} o p (root mode).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fibrecoin/bundle.hpp"
#include "fibrecoin/geometry.hpp"
#include "fibrecoin/nielsen.hpp"
#include "fibrecoin/omega.hpp"

namespace fibrecoin {

/// Malformed or invalid user input (exit code 1).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MapSpec {
    BundleSpace domain = BundleSpace::Torus;
    BundleSpace codomain = BundleSpace::Torus;
    std::int64_t q = 0;
    std::int64_t r = 0;
    friend bool operator==(const MapSpec&, const MapSpec&) = default;
};

struct ParsedSpecs {
    std::vector<MapSpec> specs;
    std::vector<std::string> warnings;
};

/// Reduces r mod 2 for a Klein codomain (warning when |r| > 1) and rejects
/// mixed combinations with q != 0. `where` prefixes error messages.
MapSpec validate_spec(MapSpec spec, const std::string& where, std::vector<std::string>& warnings);

/// One "DOMAIN CODOMAIN q r" line.
MapSpec parse_spec_line(const std::string& line, int line_no, std::vector<std::string>& warnings);

/// Line or JSON input, detected from the first non-blank character.
ParsedSpecs parse_specs(const std::string& text);

FiberMapClass to_class(const MapSpec& spec);
MapSpec to_spec(const FiberMapClass& f);

/// Consecutive specs form pairs, or each spec is paired with s_{+1} o p.
std::vector<MapPair> make_pairs(const std::vector<MapSpec>& specs, bool root);

struct OracleCheck {
    std::string name;
    bool passed = false;
    friend bool operator==(const OracleCheck&, const OracleCheck&) = default;
};

struct DiagramSummary {
    std::size_t circles = 0;
    std::vector<std::int64_t> wraps;
    std::size_t vertical = 0;
    bool degenerate = false;
    friend bool operator==(const DiagramSummary&, const DiagramSummary&) = default;
};

struct Report {
    MapSpec f1;
    MapSpec f2;
    std::int64_t q = 0;
    std::int64_t r = 0;
    InvariantReport invariants;
    std::string omega_group;
    std::optional<std::int64_t> omega_c1;
    std::int64_t omega_c2 = 0;
    std::int64_t omega_c3 = 0;
    DiagramSummary diagram;
    std::vector<OracleCheck> oracle;

    bool consistent() const;
    friend bool operator==(const Report&, const Report&) = default;
};

/// Computes every invariant of the pair and runs the per-pair cross-checks
/// (orbit enumeration with the given window, geometry, omega roundtrip).
Report build_report(const MapPair& pair, std::int64_t window = 500);

nlohmann::json to_json(const Report& report);
/// Throws InputError on a malformed document.
Report report_from_json(const nlohmann::json& doc);
std::string render_text(const Report& report);

nlohmann::json diagram_to_json(const CoincidenceDiagram& raw, const CoincidenceDiagram& minimal);
std::string render_diagram(const CoincidenceDiagram& raw, const CoincidenceDiagram& minimal);

struct TableRow {
    std::int64_t q = 0;
    std::int64_t r = 0;
    InvariantReport invariants;
    OmegaClass omega;
};

inline constexpr std::int64_t kMaxTableCells = 10000;

/// Rows for every (q, r) in the ranges, restricted to the values that name
/// distinct classes: q = 0 for mixed combinations, r in {0, 1} into K.
/// Empty or oversized grids raise InputError.
std::vector<TableRow> build_table(BundleSpace domain, BundleSpace codomain, std::int64_t qmin, std::int64_t qmax,
                                  std::int64_t rmin, std::int64_t rmax);

std::string render_table(const std::vector<TableRow>& rows);
nlohmann::json table_to_json(BundleSpace domain, BundleSpace codomain, const std::vector<TableRow>& rows);

/// "KK", "TK", ... or "K,K".
std::pair<BundleSpace, BundleSpace> parse_combo(const std::string& text);

}  // namespace fibrecoin
