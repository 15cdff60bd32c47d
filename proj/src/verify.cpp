#include "fibrecoin/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "fibrecoin/geometry.hpp"
#include "fibrecoin/nielsen.hpp"
#include "fibrecoin/omega.hpp"
#include "fibrecoin/reidemeister.hpp"
#include "fibrecoin/report.hpp"

namespace fibrecoin {

namespace {

constexpr std::size_t kMaxSamples = 5;

class Tallies {
public:
    void record(const std::string& name, bool ok, const std::string& label)
    {
        auto it = index_.find(name);
        if (it == index_.end()) {
            it = index_.emplace(name, checks_.size()).first;
            checks_.push_back(CheckTally{name, 0, 0, {}});
        }
        auto& t = checks_[it->second];
        if (ok) {
            ++t.passed;
        } else {
            ++t.failed;
            if (t.samples.size() < kMaxSamples)
                t.samples.push_back(label);
        }
    }

    void merge(const Tallies& other)
    {
        for (const auto& t : other.checks_) {
            auto it = index_.find(t.name);
            if (it == index_.end()) {
                index_.emplace(t.name, checks_.size());
                checks_.push_back(t);
                continue;
            }
            auto& mine = checks_[it->second];
            mine.passed += t.passed;
            mine.failed += t.failed;
            for (const auto& s : t.samples)
                if (mine.samples.size() < kMaxSamples)
                    mine.samples.push_back(s);
        }
    }

    std::vector<CheckTally> take() && { return std::move(checks_); }

private:
    std::map<std::string, std::size_t> index_;
    std::vector<CheckTally> checks_;
};

std::uint64_t nielsen_under_check(const MapPair& pair, Fault fault)
{
    std::uint64_t n = nielsen_number(pair);
    if (fault == Fault::NielsenOddQ && pair.codomain() == BundleSpace::Klein && std::llabs(pair.q()) % 2 == 1)
        ++n;
    return n;
}

std::string label(const MapPair& pair)
{
    return symbol(pair.domain()) + symbol(pair.codomain()) + " q=" + std::to_string(pair.q()) +
           " r=" + std::to_string(pair.r());
}

std::vector<std::int64_t> span(std::int64_t lo, std::int64_t hi)
{
    std::vector<std::int64_t> out(static_cast<std::size_t>(hi - lo + 1));
    std::iota(out.begin(), out.end(), lo);
    return out;
}

void check_cell(const MapPair& pair, const VerifyOptions& opt, Tallies& t)
{
    const std::string where = label(pair);
    const std::int64_t q = pair.q();
    const std::int64_t r = pair.r();
    const std::int64_t abs_q = std::llabs(q);
    const bool into_klein = pair.codomain() == BundleSpace::Klein;
    const bool klein_klein = into_klein && pair.domain() == BundleSpace::Klein;

    const Cardinality closed = reidemeister_count(pair);
    const ReidemeisterSet orbits = orbit_enumerate(pair, opt.window);
    t.record("reidemeister_closed_form_vs_orbits", orbits.cardinality == closed, where);

    const std::uint64_t n = nielsen_under_check(pair, opt.fault);
    const CoincidenceDiagram raw = diagram(pair);
    const CoincidenceDiagram minimal = minimal_representative_diagram(pair);
    const bool geometric = circle_count(minimal) == n;
    const bool orbital = !orbits.cardinality.is_finite() || orbits.cardinality.value() == n;
    t.record("nielsen_three_way_agreement", geometric && orbital, where);

    bool chain = false;
    try {
        const InvariantReport rep = full_report(pair);
        chain = rep.nielsen == rep.nielsen_sharp && rep.nielsen_sharp == rep.mcc &&
                (!rep.reidemeister.is_finite() || rep.mcc <= rep.reidemeister.value());
    } catch (const std::logic_error&) {
        chain = false;
    }
    t.record("inequality_chain", chain, where);
    t.record("loose_iff_empty_minimal_locus", is_loose(pair) == minimal.circles.empty(), where);
    t.record("symmetry", nielsen_number(pair.swapped()) == nielsen_number(pair), where);

    if (klein_klein && q != 0) {
        const auto inv = involution_fixed_points(q, pair.f1().r(), pair.f2().r());
        const auto via_fix = static_cast<std::uint64_t>((abs_q + inv.fixed_count) / 2);
        t.record("involution_orbit_identity", closed == Cardinality::finite(via_fix), where);

        const AffineGenerator reflect = action_generators(pair)[1];
        bool involutive = true;
        for (std::int64_t k = 0; k < abs_q; ++k)
            involutive = involutive && reflect.apply_mod(reflect.apply_mod(k, abs_q), abs_q) == k;
        t.record("reflection_is_involution", involutive, where);

        const auto wraps = wrap_multiset(raw);
        const bool bounded = std::all_of(wraps.begin(), wraps.end(), [](auto w) { return w == 1 || w == 2; });
        const auto ones = std::count(wraps.begin(), wraps.end(), 1);
        t.record("wrap_structure", bounded && ones == inv.fixed_count, where);
    }
    if (!into_klein && q != 0) {
        const auto wraps = wrap_multiset(raw);
        const std::int64_t expected = abs_q / std::gcd(abs_q, std::llabs(r));
        t.record("wrap_structure",
                 std::all_of(wraps.begin(), wraps.end(), [&](auto w) { return w == expected; }), where);
    }
    if (q != 0) {
        const auto wraps = wrap_multiset(raw);
        t.record("wrap_sum", std::accumulate(wraps.begin(), wraps.end(), std::int64_t{0}) == abs_q, where);
    }

    if (!into_klein && !raw.degenerate) {
        const bool counts = fibre_intersection_count(raw) == static_cast<std::uint64_t>(abs_q) &&
                            section_intersection_count(raw, generic_section_angle(pair)) ==
                                static_cast<std::uint64_t>(std::llabs(r));
        t.record("fibre_section_counts", counts, where);
    }
    if (into_klein && q != 0)
        t.record("root_phase_recovers_r", root_phase_r(pair) == r, where);

    const OmegaClass w = omega_class(pair);
    bool roundtrip = false;
    try {
        roundtrip = recover_pair_invariants(w) == FibreInvariants{q, r};
    } catch (const InconsistentClass&) {
        roundtrip = false;
    }
    t.record("omega_roundtrip", roundtrip, where);
    t.record("omega_zero_iff_loose", w.is_zero() == is_loose(pair), where);
    t.record("omega_c3_is_nielsen_parity", w.c3() == rho2(static_cast<std::int64_t>(n)), where);

    // Same differences from other representatives.
    bool invariant = true;
    for (std::int64_t shift : {-3, 1, 7}) {
        const std::int64_t sq = pair.domain() == pair.codomain() ? shift : 0;
        const FiberMapClass g1(pair.domain(), pair.codomain(), pair.f1().q() + sq, pair.f1().r() + shift);
        const FiberMapClass g2(pair.domain(), pair.codomain(), pair.f2().q() + sq, pair.f2().r() + shift);
        const MapPair moved(g1, g2);
        invariant = invariant && full_report(moved) == full_report(pair) && omega_class(moved) == w;
    }
    t.record("homotopy_invariance", invariant, where);
}

Tallies check_combo(BundleSpace domain, BundleSpace codomain, const VerifyOptions& opt)
{
    Tallies t;
    const auto qs = domain == codomain ? span(-opt.qmax, opt.qmax) : std::vector<std::int64_t>{0};
    const auto rs = codomain == BundleSpace::Klein ? span(0, 1) : span(-opt.rmax, opt.rmax);

    using Key = std::tuple<std::optional<std::int64_t>, std::int64_t, std::int64_t>;
    std::map<Key, std::pair<std::int64_t, std::int64_t>> roots;
    for (std::int64_t q : qs) {
        for (std::int64_t r : rs) {
            const FiberMapClass f(domain, codomain, q, r);
            const MapPair pair(f, FiberMapClass::constant_section(domain, codomain, Epsilon::Plus));
            check_cell(pair, opt, t);

            const OmegaClass w = root_invariant(f);
            const auto [it, fresh] = roots.emplace(Key{w.c1(), w.c2(), w.c3()}, std::make_pair(q, r));
            t.record("root_invariant_injective", fresh,
                     label(pair) + " collides with q=" + std::to_string(it->second.first) +
                         " r=" + std::to_string(it->second.second));

            if (domain == codomain) {
                const DoldIndexComponents d = dold_index_components(f);
                const MapPair with_id(FiberMapClass::identity(domain), f);
                const bool coherent = d.second == rho2(static_cast<std::int64_t>(nielsen_number(with_id))) &&
                                      std::llabs(d.first) == std::llabs(1 - q);
                t.record("dold_index_coherence", coherent, label(pair));
            }
        }
    }
    return t;
}

}  // namespace

bool VerifySummary::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.failed == 0; });
}

VerifySummary run_verification(const VerifyOptions& options)
{
    if (options.qmax < 0 || options.rmax < 0)
        throw InputError("verify: --qmax and --rmax must be nonnegative");
    if (options.window < 1)
        throw InputError("verify: --window must be at least 1 (the grid contains q = 0 pairs)");

    const std::vector<std::pair<BundleSpace, BundleSpace>> combos = {
        {BundleSpace::Torus, BundleSpace::Torus},
        {BundleSpace::Klein, BundleSpace::Klein},
        {BundleSpace::Klein, BundleSpace::Torus},
        {BundleSpace::Torus, BundleSpace::Klein},
    };

    std::vector<Tallies> parts;
    if (options.parallel) {
        std::vector<std::future<Tallies>> jobs;
        for (const auto& [d, c] : combos)
            jobs.push_back(std::async(std::launch::async, check_combo, d, c, std::cref(options)));
        for (auto& j : jobs)
            parts.push_back(j.get());
    } else {
        for (const auto& [d, c] : combos)
            parts.push_back(check_combo(d, c, options));
    }

    Tallies all;
    for (const auto& p : parts)
        all.merge(p);
    return VerifySummary{std::move(all).take()};
}

std::string render_summary(const VerifySummary& summary)
{
    std::ostringstream out;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    for (const auto& c : summary.checks) {
        out << (c.failed == 0 ? "PASS " : "FAIL ") << c.name << "  passed=" << c.passed << " failed=" << c.failed
            << '\n';
        for (const auto& s : c.samples)
            out << "     e.g. " << s << '\n';
        passed += c.passed;
        failed += c.failed;
    }
    out << "total passed=" << passed << " failed=" << failed << '\n';
    return out.str();
}

nlohmann::json summary_to_json(const VerifySummary& summary)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : summary.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}, {"samples", c.samples}});
    return {{"ok", summary.ok()}, {"checks", checks}};
}

}  // namespace fibrecoin
