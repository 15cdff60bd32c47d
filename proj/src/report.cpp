#include "fibrecoin/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "fibrecoin/geometry.hpp"
#include "fibrecoin/reidemeister.hpp"

namespace fibrecoin {

using nlohmann::json;

MapSpec validate_spec(MapSpec spec, const std::string& where, std::vector<std::string>& warnings)
{
    if (spec.domain != spec.codomain && spec.q != 0)
        throw InputError(where + ": maps " + symbol(spec.domain) + " -> " + symbol(spec.codomain) +
                         " have fibre degree 0, got q = " + std::to_string(spec.q));
    if (spec.codomain == BundleSpace::Klein && (spec.r < 0 || spec.r > 1)) {
        const std::int64_t reduced = mod_floor(spec.r, 2);
        if (std::llabs(spec.r) > 1)
            warnings.push_back(where + ": r = " + std::to_string(spec.r) + " into K reduced to " +
                               std::to_string(reduced) + " (mod 2)");
        spec.r = reduced;
    }
    return spec;
}

namespace {

std::int64_t parse_integer(const std::string& token, const std::string& where, const char* field)
{
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != token.size())
        throw InputError(where + ": field " + field + " = '" + token + "' is not an integer");
    return value;
}

BundleSpace parse_space_field(const std::string& token, const std::string& where, const char* field)
{
    try {
        return parse_space(token);
    } catch (const ContractViolation&) {
        throw InputError(where + ": field " + field + " = '" + token + "' is not T or K");
    }
}

MapSpec spec_from_json(const json& j, const std::string& where, std::vector<std::string>& warnings)
{
    if (!j.is_object())
        throw InputError(where + ": expected a map object");
    for (const char* key : {"domain", "codomain", "q", "r"})
        if (!j.contains(key))
            throw InputError(where + ": missing field " + key);
    if (!j["domain"].is_string() || !j["codomain"].is_string())
        throw InputError(where + ": domain and codomain must be strings");
    if (!j["q"].is_number_integer())
        throw InputError(where + ": field q must be an integer");
    if (!j["r"].is_number_integer())
        throw InputError(where + ": field r must be an integer");
    MapSpec spec;
    spec.domain = parse_space_field(j["domain"].get<std::string>(), where, "domain");
    spec.codomain = parse_space_field(j["codomain"].get<std::string>(), where, "codomain");
    spec.q = j["q"].get<std::int64_t>();
    spec.r = j["r"].get<std::int64_t>();
    return validate_spec(spec, where, warnings);
}

json spec_to_json(const MapSpec& s)
{
    return json{{"domain", symbol(s.domain)}, {"codomain", symbol(s.codomain)}, {"q", s.q}, {"r", s.r}};
}

void collect_json_entry(const json& j, const std::string& where, ParsedSpecs& out)
{
    if (j.is_object() && j.contains("f1") && j.contains("f2")) {
        out.specs.push_back(spec_from_json(j["f1"], where + ".f1", out.warnings));
        out.specs.push_back(spec_from_json(j["f2"], where + ".f2", out.warnings));
        return;
    }
    out.specs.push_back(spec_from_json(j, where, out.warnings));
}

}  // namespace

MapSpec parse_spec_line(const std::string& line, int line_no, std::vector<std::string>& warnings)
{
    const std::string where = "line " + std::to_string(line_no);
    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;)
        tokens.push_back(tok);
    if (tokens.size() != 4)
        throw InputError(where + ": expected 'DOMAIN CODOMAIN q r', got " + std::to_string(tokens.size()) +
                         " fields");
    MapSpec spec;
    spec.domain = parse_space_field(tokens[0], where, "DOMAIN");
    spec.codomain = parse_space_field(tokens[1], where, "CODOMAIN");
    spec.q = parse_integer(tokens[2], where, "q");
    spec.r = parse_integer(tokens[3], where, "r");
    return validate_spec(spec, where, warnings);
}

ParsedSpecs parse_specs(const std::string& text)
{
    ParsedSpecs out;
    const auto first = std::find_if(text.begin(), text.end(), [](char c) {
        return !std::isspace(static_cast<unsigned char>(c));
    });
    if (first != text.end() && (*first == '{' || *first == '[')) {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::parse_error& e) {
            throw InputError(std::string("JSON input: ") + e.what());
        }
        if (doc.is_array()) {
            for (std::size_t i = 0; i < doc.size(); ++i)
                collect_json_entry(doc[i], "entry " + std::to_string(i), out);
        } else {
            collect_json_entry(doc, "document", out);
        }
        return out;
    }

    std::istringstream in(text);
    int line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        if (std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
            continue;
        out.specs.push_back(parse_spec_line(line, line_no, out.warnings));
    }
    return out;
}

FiberMapClass to_class(const MapSpec& spec)
{
    try {
        return FiberMapClass(spec.domain, spec.codomain, spec.q, spec.r);
    } catch (const ContractViolation& e) {
        throw InputError(e.what());
    }
}

MapSpec to_spec(const FiberMapClass& f)
{
    return MapSpec{f.domain(), f.codomain(), f.q(), f.r()};
}

std::vector<MapPair> make_pairs(const std::vector<MapSpec>& specs, bool root)
{
    std::vector<MapPair> pairs;
    if (root) {
        for (const auto& s : specs)
            pairs.emplace_back(to_class(s), FiberMapClass::constant_section(s.domain, s.codomain, Epsilon::Plus));
        return pairs;
    }
    if (specs.size() % 2 != 0)
        throw InputError("got " + std::to_string(specs.size()) +
                         " maps; pairs need an even count (or use --root)");
    for (std::size_t i = 0; i < specs.size(); i += 2) {
        const auto& a = specs[i];
        const auto& b = specs[i + 1];
        if (a.domain != b.domain || a.codomain != b.codomain)
            throw InputError("pair " + std::to_string(i / 2) + ": maps " + symbol(a.domain) + symbol(a.codomain) +
                             " and " + symbol(b.domain) + symbol(b.codomain) + " differ in domain or codomain");
        pairs.emplace_back(to_class(a), to_class(b));
    }
    return pairs;
}

bool Report::consistent() const
{
    return std::all_of(oracle.begin(), oracle.end(), [](const OracleCheck& c) { return c.passed; });
}

Report build_report(const MapPair& pair, std::int64_t window)
{
    Report rep;
    rep.f1 = to_spec(pair.f1());
    rep.f2 = to_spec(pair.f2());
    rep.q = pair.q();
    rep.r = pair.r();
    rep.invariants = full_report(pair);

    const OmegaClass w = omega_class(pair);
    rep.omega_group = to_string(w.group());
    rep.omega_c1 = w.c1();
    rep.omega_c2 = w.c2();
    rep.omega_c3 = w.c3();

    const CoincidenceDiagram raw = diagram(pair);
    const CoincidenceDiagram minimal = minimal_representative_diagram(pair);
    rep.diagram.circles = circle_count(minimal);
    rep.diagram.wraps = wrap_multiset(minimal);
    rep.diagram.vertical = vertical_count(minimal);
    rep.diagram.degenerate = raw.degenerate;

    const std::uint64_t n = rep.invariants.nielsen;
    auto& checks = rep.oracle;
    checks.push_back({"orbit_count", orbit_enumerate(pair, window).cardinality == rep.invariants.reidemeister});
    if (pair.domain() == BundleSpace::Klein && pair.codomain() == BundleSpace::Klein && pair.q() != 0) {
        const auto inv = involution_fixed_points(pair.q(), pair.f1().r(), pair.f2().r());
        const auto via_fix = static_cast<std::uint64_t>((std::llabs(pair.q()) + inv.fixed_count) / 2);
        checks.push_back({"involution_identity", rep.invariants.reidemeister == Cardinality::finite(via_fix)});
    }
    checks.push_back({"geometric_count", rep.diagram.circles == n});
    if (rep.invariants.reidemeister.is_finite())
        checks.push_back({"nielsen_equals_reidemeister", rep.invariants.reidemeister.value() == n});
    {
        bool ok = false;
        try {
            ok = recover_pair_invariants(w) == FibreInvariants{pair.q(), pair.r()};
        } catch (const InconsistentClass&) {
            ok = false;
        }
        checks.push_back({"omega_roundtrip", ok});
    }
    checks.push_back({"omega_zero_iff_loose", w.is_zero() == rep.invariants.loose});
    if (pair.q() != 0) {
        std::int64_t sum = 0;
        for (auto x : rep.diagram.wraps)
            sum += x;
        checks.push_back({"wrap_sum", sum == std::llabs(pair.q())});
    }
    if (pair.codomain() == BundleSpace::Torus && !raw.degenerate) {
        const bool ok = fibre_intersection_count(raw) == static_cast<std::uint64_t>(std::llabs(pair.q())) &&
                        section_intersection_count(raw, generic_section_angle(pair)) ==
                            static_cast<std::uint64_t>(std::llabs(pair.r()));
        checks.push_back({"fibre_section_counts", ok});
    }
    if (pair.codomain() == BundleSpace::Klein && pair.q() != 0)
        checks.push_back({"root_phase", root_phase_r(pair) == pair.r()});
    checks.push_back({"symmetry", nielsen_number(pair.swapped()) == n});
    // Sorted by name, the order a JSON object round-trip yields.
    std::sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return rep;
}

json to_json(const Report& rep)
{
    json omega{{"group", rep.omega_group}, {"c2", rep.omega_c2}, {"c3", rep.omega_c3}};
    omega["c1"] = rep.omega_c1 ? json(*rep.omega_c1) : json("trivial");

    json oracle = json::object();
    for (const auto& c : rep.oracle)
        oracle[c.name] = c.passed;

    return json{
        {"pair", {{"f1", spec_to_json(rep.f1)}, {"f2", spec_to_json(rep.f2)}}},
        {"q", rep.q},
        {"r", rep.r},
        {"invariants",
         {{"reidemeister", rep.invariants.reidemeister.is_finite() ? json(rep.invariants.reidemeister.value())
                                                                   : json("inf")},
          {"nielsen", rep.invariants.nielsen},
          {"nielsen_sharp", rep.invariants.nielsen_sharp},
          {"mcc", rep.invariants.mcc},
          {"loose", rep.invariants.loose}}},
        {"omega", omega},
        {"diagram",
         {{"circles", rep.diagram.circles},
          {"wraps", rep.diagram.wraps},
          {"vertical", rep.diagram.vertical},
          {"degenerate", rep.diagram.degenerate}}},
        {"oracle", oracle},
        {"consistent", rep.consistent()},
    };
}

Report report_from_json(const json& doc)
{
    try {
        Report rep;
        std::vector<std::string> warnings;
        rep.f1 = spec_from_json(doc.at("pair").at("f1"), "pair.f1", warnings);
        rep.f2 = spec_from_json(doc.at("pair").at("f2"), "pair.f2", warnings);
        rep.q = doc.at("q").get<std::int64_t>();
        rep.r = doc.at("r").get<std::int64_t>();

        const json& inv = doc.at("invariants");
        const json& reid = inv.at("reidemeister");
        if (reid.is_string()) {
            if (reid.get<std::string>() != "inf")
                throw InputError("invariants.reidemeister: expected a count or \"inf\"");
            rep.invariants.reidemeister = Cardinality::infinite();
        } else {
            rep.invariants.reidemeister = Cardinality::finite(reid.get<std::uint64_t>());
        }
        rep.invariants.nielsen = inv.at("nielsen").get<std::uint64_t>();
        rep.invariants.nielsen_sharp = inv.at("nielsen_sharp").get<std::uint64_t>();
        rep.invariants.mcc = inv.at("mcc").get<std::uint64_t>();
        rep.invariants.loose = inv.at("loose").get<bool>();

        const json& omega = doc.at("omega");
        rep.omega_group = omega.at("group").get<std::string>();
        if (omega.at("c1").is_string())
            rep.omega_c1.reset();
        else
            rep.omega_c1 = omega.at("c1").get<std::int64_t>();
        rep.omega_c2 = omega.at("c2").get<std::int64_t>();
        rep.omega_c3 = omega.at("c3").get<std::int64_t>();

        const json& d = doc.at("diagram");
        rep.diagram.circles = d.at("circles").get<std::size_t>();
        rep.diagram.wraps = d.at("wraps").get<std::vector<std::int64_t>>();
        rep.diagram.vertical = d.at("vertical").get<std::size_t>();
        rep.diagram.degenerate = d.at("degenerate").get<bool>();

        for (const auto& [name, passed] : doc.at("oracle").items())
            rep.oracle.push_back({name, passed.get<bool>()});
        return rep;
    } catch (const json::exception& e) {
        throw InputError(std::string("report JSON: ") + e.what());
    }
}

namespace {

std::string join_wraps(const std::vector<std::int64_t>& wraps)
{
    std::string out = "{";
    for (std::size_t i = 0; i < wraps.size(); ++i)
        out += (i ? "," : "") + std::to_string(wraps[i]);
    return out + "}";
}

std::string spec_text(const MapSpec& s)
{
    return "(" + symbol(s.domain) + "," + symbol(s.codomain) + ",q=" + std::to_string(s.q) +
           ",r=" + std::to_string(s.r) + ")";
}

}  // namespace

std::string render_text(const Report& rep)
{
    std::ostringstream out;
    const auto yes_no = [](bool b) { return b ? "yes" : "no"; };
    out << "pair          f1=" << spec_text(rep.f1) << " f2=" << spec_text(rep.f2) << '\n';
    out << "difference    q=" << rep.q << " r=" << rep.r << '\n';
    out << "reidemeister  " << rep.invariants.reidemeister.to_string() << '\n';
    out << "nielsen       " << rep.invariants.nielsen << '\n';
    out << "nielsen#      " << rep.invariants.nielsen_sharp << '\n';
    out << "mcc           " << rep.invariants.mcc << '\n';
    out << "loose         " << yes_no(rep.invariants.loose) << '\n';
    out << "omega         (" << (rep.omega_c1 ? std::to_string(*rep.omega_c1) : std::string("0*")) << ", "
        << rep.omega_c2 << ", " << rep.omega_c3 << ") in " << rep.omega_group << '\n';
    out << "diagram       circles=" << rep.diagram.circles << " wraps=" << join_wraps(rep.diagram.wraps)
        << " vertical=" << rep.diagram.vertical << " degenerate=" << yes_no(rep.diagram.degenerate) << '\n';
    out << "oracle       ";
    for (const auto& c : rep.oracle)
        out << ' ' << c.name << '=' << (c.passed ? "ok" : "FAIL");
    out << '\n';
    return out.str();
}

namespace {

json circles_to_json(const CoincidenceDiagram& d)
{
    json circles = json::array();
    for (const auto& c : d.circles) {
        if (const auto* h = std::get_if<HorizontalCircle>(&c))
            circles.push_back({{"kind", "horizontal"}, {"base_wrap", h->base_wrap}, {"root_cycle", h->root_cycle}});
        else
            circles.push_back(
                {{"kind", "vertical"}, {"base_coordinate", to_string(std::get<VerticalFibre>(c).base_coordinate)}});
    }
    return circles;
}

void render_circles(std::ostringstream& out, const CoincidenceDiagram& d)
{
    if (d.degenerate) {
        out << "  degenerate (the standard maps agree everywhere)\n";
        return;
    }
    if (d.circles.empty())
        out << "  no coincidences\n";
    for (const auto& c : d.circles) {
        if (const auto* h = std::get_if<HorizontalCircle>(&c)) {
            out << "  horizontal wrap=" << h->base_wrap << " roots=";
            for (std::size_t i = 0; i < h->root_cycle.size(); ++i)
                out << (i ? "->" : "") << h->root_cycle[i];
            out << '\n';
        } else {
            out << "  vertical fibre at t=" << to_string(std::get<VerticalFibre>(c).base_coordinate) << '\n';
        }
    }
}

}  // namespace

json diagram_to_json(const CoincidenceDiagram& raw, const CoincidenceDiagram& minimal)
{
    json out{{"pair", {{"f1", spec_to_json(to_spec(raw.pair.f1()))}, {"f2", spec_to_json(to_spec(raw.pair.f2()))}}},
             {"q", raw.pair.q()},
             {"r", raw.pair.r()},
             {"standard", {{"degenerate", raw.degenerate}, {"circles", circles_to_json(raw)}}},
             {"minimal", {{"circles", circles_to_json(minimal)}}}};
    if (raw.pair.q() != 0) {
        out["roots_at_0"] = json::array();
        for (const auto& x : coincidence_roots(raw.pair, 0))
            out["roots_at_0"].push_back(to_string(x));
        out["gluing_permutation"] = gluing_permutation(raw.pair);
    }
    return out;
}

std::string render_diagram(const CoincidenceDiagram& raw, const CoincidenceDiagram& minimal)
{
    std::ostringstream out;
    out << "pair f1=" << spec_text(to_spec(raw.pair.f1())) << " f2=" << spec_text(to_spec(raw.pair.f2()))
        << "  q=" << raw.pair.q() << " r=" << raw.pair.r() << '\n';
    if (raw.pair.q() != 0) {
        out << "roots over t=0:";
        for (const auto& x : coincidence_roots(raw.pair, 0))
            out << ' ' << to_string(x);
        out << "\ngluing permutation:";
        const auto sigma = gluing_permutation(raw.pair);
        for (std::size_t k = 0; k < sigma.size(); ++k)
            out << ' ' << k << "->" << sigma[k];
        out << '\n';
    }
    out << "standard representatives:\n";
    render_circles(out, raw);
    out << "minimal representatives (" << minimal.circles.size() << " circles):\n";
    render_circles(out, minimal);
    return out.str();
}

std::vector<TableRow> build_table(BundleSpace domain, BundleSpace codomain, std::int64_t qmin, std::int64_t qmax,
                                  std::int64_t rmin, std::int64_t rmax)
{
    if (qmin > qmax || rmin > rmax)
        throw InputError("table: empty range (min exceeds max)");
    if (domain != codomain) {
        if (qmin > 0 || qmax < 0)
            throw InputError("table: maps " + symbol(domain) + " -> " + symbol(codomain) +
                             " only have q = 0; include 0 in the q range");
        qmin = qmax = 0;
    }
    if (codomain == BundleSpace::Klein) {
        rmin = std::max<std::int64_t>(rmin, 0);
        rmax = std::min<std::int64_t>(rmax, 1);
        if (rmin > rmax)
            throw InputError("table: r into K is a residue mod 2; include 0 or 1 in the r range");
    }
    const double cells = (static_cast<double>(qmax) - static_cast<double>(qmin) + 1) *
                         (static_cast<double>(rmax) - static_cast<double>(rmin) + 1);
    if (cells > static_cast<double>(kMaxTableCells))
        throw InputError("table: " + std::to_string(static_cast<long long>(cells)) + " cells exceeds the limit of " +
                         std::to_string(kMaxTableCells) + "; try e.g. --qmin -50 --qmax 50 --rmin -49 --rmax 49");

    std::vector<TableRow> rows;
    for (std::int64_t q = qmin; q <= qmax; ++q) {
        for (std::int64_t r = rmin; r <= rmax; ++r) {
            const MapPair pair = MapPair::from_difference(domain, codomain, q, r);
            rows.push_back(TableRow{q, r, full_report(pair), omega_class(pair)});
        }
    }
    return rows;
}

std::string render_table(const std::vector<TableRow>& rows)
{
    std::ostringstream out;
    const auto col = [&](const std::string& s, std::size_t width) {
        out << std::string(width > s.size() ? width - s.size() : 0, ' ') << s;
    };
    col("q", 6);
    col("r", 6);
    col("R", 8);
    col("N", 6);
    col("N#", 6);
    col("MCC", 6);
    col("loose", 7);
    out << "  omega\n";
    for (const auto& row : rows) {
        col(std::to_string(row.q), 6);
        col(std::to_string(row.r), 6);
        col(row.invariants.reidemeister.to_string(), 8);
        col(std::to_string(row.invariants.nielsen), 6);
        col(std::to_string(row.invariants.nielsen_sharp), 6);
        col(std::to_string(row.invariants.mcc), 6);
        col(row.invariants.loose ? "yes" : "no", 7);
        out << "  " << to_string(row.omega) << '\n';
    }
    return out.str();
}

json table_to_json(BundleSpace domain, BundleSpace codomain, const std::vector<TableRow>& rows)
{
    json out{{"domain", symbol(domain)},
             {"codomain", symbol(codomain)},
             {"group", to_string(omega_group(domain, codomain))},
             {"rows", json::array()}};
    for (const auto& row : rows) {
        const auto& inv = row.invariants;
        out["rows"].push_back(
            {{"q", row.q},
             {"r", row.r},
             {"reidemeister", inv.reidemeister.is_finite() ? json(inv.reidemeister.value()) : json("inf")},
             {"nielsen", inv.nielsen},
             {"nielsen_sharp", inv.nielsen_sharp},
             {"mcc", inv.mcc},
             {"loose", inv.loose},
             {"omega", {row.omega.c1() ? json(*row.omega.c1()) : json("trivial"), row.omega.c2(), row.omega.c3()}}});
    }
    return out;
}

std::pair<BundleSpace, BundleSpace> parse_combo(const std::string& text)
{
    std::string letters;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != ',' && c != '/' && c != '-' && c != '>')
            letters.push_back(c);
    if (letters.size() != 2)
        throw InputError("combo '" + text + "': expected two letters such as KK or TK");
    try {
        return {parse_space(letters.substr(0, 1)), parse_space(letters.substr(1, 1))};
    } catch (const ContractViolation&) {
        throw InputError("combo '" + text + "': letters must be T or K");
    }
}

}  // namespace fibrecoin
