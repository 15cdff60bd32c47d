// fibrecoin: coincidence invariants of fibre-preserving maps between the
// torus and the Klein bottle over S^1.
//
// Exit codes: 0 computed and internally consistent, 1 input error,
// 2 oracle disagreement.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibrecoin/geometry.hpp"
#include "fibrecoin/report.hpp"
#include "fibrecoin/verify.hpp"

namespace {

using namespace fibrecoin;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDisagreement = 2;

const char* const kInputHelp = R"(Map input, one map per line:
    DOMAIN CODOMAIN q r        e.g.  K K 4 1
with DOMAIN, CODOMAIN in {T, K}; '#' starts a comment. Alternatively a JSON
document: {"domain":"K","codomain":"K","q":4,"r":1}, {"f1":{...},"f2":{...}},
or an array of either. Consecutive maps form a pair; with --root every map
is paired with the section s_{+1} o p instead. Maps between T and K have
q = 0; r into K is taken mod 2.)";

struct InputOptions {
    std::string file;
    std::vector<std::string> maps;
    bool root = false;
    bool json = false;
    std::int64_t window = 500;
};

std::string read_all(std::istream& in)
{
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::vector<MapPair> load_pairs(const InputOptions& opt)
{
    std::string text;
    if (!opt.maps.empty()) {
        for (const auto& m : opt.maps)
            text += m + "\n";
    } else if (!opt.file.empty() && opt.file != "-") {
        std::ifstream in(opt.file);
        if (!in)
            throw InputError("cannot open '" + opt.file + "'");
        text = read_all(in);
    } else {
        text = read_all(std::cin);
    }
    const ParsedSpecs parsed = parse_specs(text);
    for (const auto& w : parsed.warnings)
        std::cerr << "warning: " << w << '\n';
    if (parsed.specs.empty())
        throw InputError("no maps given");
    return make_pairs(parsed.specs, opt.root);
}

void add_input_options(CLI::App* cmd, InputOptions& opt)
{
    cmd->add_option("file", opt.file, "Input file ('-' or omitted: standard input)");
    cmd->add_option("-m,--map", opt.maps, "Inline map 'DOMAIN CODOMAIN q r' (repeatable)");
    cmd->add_flag("--root", opt.root, "Pair each map with s_{+1} o p (root invariant)");
    cmd->add_flag("--json", opt.json, "Machine-readable output");
    cmd->footer(kInputHelp);
}

int run_invariants(const InputOptions& opt)
{
    if (opt.window < 1)
        throw InputError("--window must be at least 1");
    const auto pairs = load_pairs(opt);
    bool consistent = true;
    nlohmann::json reports = nlohmann::json::array();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const Report rep = build_report(pairs[i], opt.window);
        consistent = consistent && rep.consistent();
        if (opt.json) {
            reports.push_back(to_json(rep));
        } else {
            if (i)
                std::cout << '\n';
            std::cout << render_text(rep);
        }
        if (!rep.consistent())
            std::cerr << "error: oracle disagreement for pair " << i << '\n';
    }
    if (opt.json)
        std::cout << (reports.size() == 1 ? reports[0] : reports).dump(2) << '\n';
    return consistent ? kExitOk : kExitDisagreement;
}

int run_diagram(const InputOptions& opt)
{
    const auto pairs = load_pairs(opt);
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const CoincidenceDiagram raw = diagram(pairs[i]);
        const CoincidenceDiagram minimal = minimal_representative_diagram(pairs[i]);
        if (opt.json) {
            out.push_back(diagram_to_json(raw, minimal));
        } else {
            if (i)
                std::cout << '\n';
            std::cout << render_diagram(raw, minimal);
        }
    }
    if (opt.json)
        std::cout << (out.size() == 1 ? out[0] : out).dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Coincidence invariants of maps between S^1-bundles over S^1 (torus T, Klein bottle K)"};
    app.require_subcommand(1);

    InputOptions inv_opt;
    auto* inv = app.add_subcommand("invariants", "Reidemeister, Nielsen, MCC, looseness and omega for map pairs");
    add_input_options(inv, inv_opt);
    inv->add_option("--window", inv_opt.window, "Window for listing orbits when q = 0")->capture_default_str();

    InputOptions dia_opt;
    auto* dia = app.add_subcommand("diagram", "Coincidence circles of standard and minimal representatives");
    add_input_options(dia, dia_opt);

    std::string combo;
    std::int64_t qmin = 0;
    std::int64_t qmax = 6;
    std::int64_t rmin = 0;
    std::int64_t rmax = 1;
    bool table_json = false;
    auto* table = app.add_subcommand("table", "Formula table over a (q, r) grid");
    table->add_option("combo", combo, "Domain and codomain, e.g. KK, TT, KT, TK")->required();
    auto* qmin_opt = table->add_option("--qmin", qmin, "Smallest q (default -qmax)");
    table->add_option("--qmax", qmax, "Largest q")->capture_default_str();
    auto* rmin_opt = table->add_option("--rmin", rmin, "Smallest r (default -rmax, or 0 into K)");
    table->add_option("--rmax", rmax, "Largest r")->capture_default_str();
    table->add_flag("--json", table_json, "Machine-readable output");

    VerifyOptions verify_opt;
    bool verify_json = false;
    bool inject_fault = false;
    bool serial = false;
    auto* verify = app.add_subcommand("verify", "Cross-validate closed forms, orbit counts and geometry on a grid");
    verify->add_option("--qmax", verify_opt.qmax, "Grid bound on |q|")->capture_default_str();
    verify->add_option("--rmax", verify_opt.rmax, "Grid bound on |r| into T")->capture_default_str();
    verify->add_option("--window", verify_opt.window, "Orbit window for q = 0")->capture_default_str();
    verify->add_flag("--json", verify_json, "Machine-readable output");
    verify->add_flag("--serial", serial, "Evaluate combos one after another");
    verify->add_flag("--inject-fault", inject_fault, "Test mode: perturb a closed form to exercise failure paths");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (inv->parsed())
            return run_invariants(inv_opt);
        if (dia->parsed())
            return run_diagram(dia_opt);
        if (table->parsed()) {
            const auto [domain, codomain] = parse_combo(combo);
            if (!qmin_opt->count())
                qmin = -qmax;
            if (!rmin_opt->count())
                rmin = codomain == BundleSpace::Klein ? 0 : -rmax;
            const auto rows = build_table(domain, codomain, qmin, qmax, rmin, rmax);
            if (table_json)
                std::cout << table_to_json(domain, codomain, rows).dump(2) << '\n';
            else
                std::cout << symbol(domain) << " -> " << symbol(codomain) << "   omega in "
                          << to_string(omega_group(domain, codomain)) << '\n'
                          << render_table(rows);
            return kExitOk;
        }
        if (verify->parsed()) {
            verify_opt.fault = inject_fault ? Fault::NielsenOddQ : Fault::None;
            verify_opt.parallel = !serial;
            const VerifySummary summary = run_verification(verify_opt);
            if (verify_json)
                std::cout << summary_to_json(summary).dump(2) << '\n';
            else
                std::cout << render_summary(summary);
            return summary.ok() ? kExitOk : kExitDisagreement;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ContractViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::logic_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return kExitDisagreement;
    }
    return kExitInput;
}
