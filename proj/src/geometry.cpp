#include "fibrecoin/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace fibrecoin {

namespace {

void require_isolated_roots(const MapPair& pair, const char* what)
{
    if (pair.q() == 0)
        throw ContractViolation(std::string(what) + ": q = 0, coincidence points are not isolated in the fibres");
}

}  // namespace

std::vector<Rational> coincidence_roots(const MapPair& pair, const Rational& t)
{
    require_isolated_roots(pair, "coincidence_roots");
    if (t < 0 || t > 1)
        throw ContractViolation("coincidence_roots: chart coordinate t must lie in [0, 1]");
    const std::int64_t q = pair.q();
    const std::int64_t n = std::llabs(q);
    std::vector<Rational> roots;
    roots.reserve(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
        if (pair.codomain() == BundleSpace::Torus)
            roots.push_back(mod_one((Rational(k) - Rational(pair.r()) * t) / Rational(q)));
        else
            roots.push_back(mod_one((Rational(pair.r(), 2) + Rational(k)) / Rational(n)));
    }
    return roots;
}

std::vector<std::int64_t> gluing_permutation(const MapPair& pair)
{
    require_isolated_roots(pair, "gluing_permutation");
    const auto at_start = coincidence_roots(pair, 0);
    const auto at_end = coincidence_roots(pair, 1);

    std::map<Rational, std::int64_t> index_of;
    for (std::size_t k = 0; k < at_start.size(); ++k)
        index_of.emplace(at_start[k], static_cast<std::int64_t>(k));

    std::vector<std::int64_t> sigma(at_end.size());
    for (std::size_t k = 0; k < at_end.size(); ++k) {
        const auto it = index_of.find(glue_angle(pair.domain(), at_end[k]));
        if (it == index_of.end())
            throw std::logic_error("gluing_permutation: root " + std::to_string(k) +
                                   " does not return to a root over t = 0");
        sigma[k] = it->second;
    }
    return sigma;
}

CoincidenceDiagram diagram(const MapPair& pair)
{
    CoincidenceDiagram d{pair, {}, false};
    if (pair.q() != 0) {
        const auto sigma = gluing_permutation(pair);
        std::vector<bool> seen(sigma.size(), false);
        for (std::size_t start = 0; start < sigma.size(); ++start) {
            if (seen[start])
                continue;
            HorizontalCircle circle;
            for (auto k = static_cast<std::int64_t>(start); !seen[static_cast<std::size_t>(k)];
                 k = sigma[static_cast<std::size_t>(k)]) {
                seen[static_cast<std::size_t>(k)] = true;
                circle.root_cycle.push_back(k);
            }
            circle.base_wrap = static_cast<std::int64_t>(circle.root_cycle.size());
            d.circles.emplace_back(std::move(circle));
        }
        return d;
    }
    if (pair.r() == 0) {
        d.degenerate = true;
        return d;
    }
    if (pair.codomain() == BundleSpace::Torus) {
        // r t = 0 mod 1: one full fibre of coincidences per solution.
        const std::int64_t n = std::llabs(pair.r());
        for (std::int64_t j = 0; j < n; ++j)
            d.circles.emplace_back(VerticalFibre{Rational(j, n)});
    }
    // Into K with r = 1 the standard maps are the disjoint sections s_{+1}, s_{-1}.
    return d;
}

CoincidenceDiagram minimal_representative_diagram(const MapPair& pair)
{
    CoincidenceDiagram d = diagram(pair);
    if (!d.degenerate)
        return d;
    d.degenerate = false;
    if (pair.codomain() == BundleSpace::Klein)
        d.circles.emplace_back(VerticalFibre{Rational(0)});
    return d;
}

std::uint64_t fibre_intersection_count(const CoincidenceDiagram& d)
{
    if (d.degenerate)
        throw ContractViolation("fibre_intersection_count: degenerate diagram");
    std::uint64_t count = 0;
    for (const auto& c : d.circles)
        if (const auto* h = std::get_if<HorizontalCircle>(&c))
            count += h->root_cycle.size();
    return count;
}

std::uint64_t section_intersection_count(const CoincidenceDiagram& d, const Rational& generic_angle)
{
    if (d.degenerate)
        throw ContractViolation("section_intersection_count: degenerate diagram");
    if (d.pair.codomain() != BundleSpace::Torus)
        throw ContractViolation("section_intersection_count: needs a Torus codomain");
    if (generic_angle < 0 || generic_angle >= 1)
        throw ContractViolation("section_intersection_count: angle must lie in [0, 1)");

    const std::int64_t q = d.pair.q();
    const std::int64_t r = d.pair.r();
    if (q != 0 && (Rational(q) * generic_angle).denominator() == 1)
        throw NonGenericAngle("section angle " + to_string(generic_angle) +
                              " is a coincidence root over the seam t = 0; resample");

    std::uint64_t count = 0;
    for (const auto& c : d.circles) {
        if (std::holds_alternative<VerticalFibre>(c)) {
            ++count;
            continue;
        }
        if (r == 0)
            continue;  // arcs are constant in t and miss a generic angle
        const auto& h = std::get<HorizontalCircle>(c);
        for (std::int64_t k : h.root_cycle) {
            // (k - r t)/q = angle mod 1  <=>  t = (k - q angle - q m) / r.
            const Rational x = Rational(k) - Rational(q) * generic_angle;
            const std::int64_t span = (std::llabs(r) + std::llabs(floor_of(x)) + 1) / std::llabs(q) + 2;
            for (std::int64_t m = -span; m <= span; ++m) {
                const Rational t = (x - Rational(q * m)) / Rational(r);
                if (t >= 0 && t < 1)
                    ++count;
            }
        }
    }
    return count;
}

Rational generic_section_angle(const MapPair& pair)
{
    const std::int64_t n = std::llabs(pair.q());
    if (n % 2 == 0 && n != 0)
        return Rational(1, 2) + Rational(1, 2 * n + 3);
    return Rational(1, 2);
}

std::int64_t root_phase_r(const MapPair& pair)
{
    if (pair.codomain() != BundleSpace::Klein)
        throw ContractViolation("root_phase_r: needs a Klein codomain");
    require_isolated_roots(pair, "root_phase_r");
    const Rational phase = mod_one(Rational(std::llabs(pair.q())) * coincidence_roots(pair, 0).front());
    if (phase == Rational(0))
        return 0;
    if (phase == Rational(1, 2))
        return 1;
    throw std::logic_error("root_phase_r: roots sit at phase " + to_string(phase));
}

std::size_t circle_count(const CoincidenceDiagram& d)
{
    return d.circles.size();
}

std::vector<std::int64_t> wrap_multiset(const CoincidenceDiagram& d)
{
    std::vector<std::int64_t> wraps;
    for (const auto& c : d.circles)
        if (const auto* h = std::get_if<HorizontalCircle>(&c))
            wraps.push_back(h->base_wrap);
    std::sort(wraps.begin(), wraps.end());
    return wraps;
}

std::size_t vertical_count(const CoincidenceDiagram& d)
{
    return static_cast<std::size_t>(std::count_if(d.circles.begin(), d.circles.end(), [](const auto& c) {
        return std::holds_alternative<VerticalFibre>(c);
    }));
}

}  // namespace fibrecoin
