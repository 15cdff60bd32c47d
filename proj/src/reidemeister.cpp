#include "fibrecoin/reidemeister.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fibrecoin {

std::uint64_t Cardinality::value() const
{
    if (!value_)
        throw std::logic_error("Cardinality::value() on an infinite cardinality");
    return *value_;
}

std::string Cardinality::to_string() const
{
    return value_ ? std::to_string(*value_) : std::string("inf");
}

std::int64_t AffineGenerator::apply_mod(std::int64_t k, std::int64_t m) const
{
    return mod_floor(sign * mod_floor(k, m) + mod_floor(offset, m), m);
}

AffineGenerator AffineGenerator::then(const AffineGenerator& next) const
{
    return AffineGenerator{sign * next.sign, next.sign * offset + next.offset};
}

std::string to_string(const AffineGenerator& g)
{
    std::string out = g.sign == 1 ? "k" : "-k";
    if (g.offset > 0)
        out += " + " + std::to_string(g.offset);
    else if (g.offset < 0)
        out += " - " + std::to_string(-g.offset);
    return "k -> " + out;
}

std::vector<AffineGenerator> action_generators(const MapPair& pair)
{
    std::vector<AffineGenerator> gens;
    gens.push_back(AffineGenerator{1, -pair.q()});
    if (pair.codomain() == BundleSpace::Torus)
        gens.push_back(AffineGenerator{1, -pair.r()});
    else
        gens.push_back(AffineGenerator{-1, pair.r()});
    return gens;
}

namespace {

// Generator of the translation subgroup of the group generated by gens:
// translation offsets, plus differences c - c' of reflections k -> c - k
// (their composites are translations).
std::int64_t translation_modulus(const std::vector<AffineGenerator>& gens)
{
    std::int64_t d = 0;
    std::optional<std::int64_t> first_reflection;
    for (const auto& g : gens) {
        if (g.sign == 1) {
            d = std::gcd(d, g.offset);
        } else if (!first_reflection) {
            first_reflection = g.offset;
        } else {
            d = std::gcd(d, g.offset - *first_reflection);
        }
    }
    return d;
}

ReidemeisterSet sweep_residues(const std::vector<AffineGenerator>& gens, std::int64_t m)
{
    ReidemeisterSet out;
    out.modulus = m;
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    out.orbit_of.assign(static_cast<std::size_t>(m), unseen);

    for (std::int64_t seed = 0; seed < m; ++seed) {
        if (out.orbit_of[static_cast<std::size_t>(seed)] != unseen)
            continue;
        const std::size_t index = out.representatives.size();
        out.representatives.push_back(seed);
        std::deque<std::int64_t> frontier{seed};
        out.orbit_of[static_cast<std::size_t>(seed)] = index;
        while (!frontier.empty()) {
            const std::int64_t k = frontier.front();
            frontier.pop_front();
            for (const auto& g : gens) {
                const std::int64_t next = g.apply_mod(k, m);
                if (out.orbit_of[static_cast<std::size_t>(next)] == unseen) {
                    out.orbit_of[static_cast<std::size_t>(next)] = index;
                    frontier.push_back(next);
                }
            }
        }
    }
    out.cardinality = Cardinality::finite(out.representatives.size());
    return out;
}

// Closure of {seed} in Z under a group of order at most 2.
std::vector<std::int64_t> finite_orbit(const std::vector<AffineGenerator>& gens, std::int64_t seed)
{
    std::set<std::int64_t> orbit{seed};
    std::deque<std::int64_t> frontier{seed};
    while (!frontier.empty()) {
        const std::int64_t k = frontier.front();
        frontier.pop_front();
        for (const auto& g : gens) {
            const std::int64_t next = g(k);
            if (orbit.insert(next).second) {
                if (orbit.size() > 2)
                    throw std::logic_error("orbit_enumerate: orbit exceeds the order-2 bound");
                frontier.push_back(next);
            }
        }
    }
    return {orbit.begin(), orbit.end()};
}

}  // namespace

ReidemeisterSet orbit_enumerate(const MapPair& pair, std::int64_t window)
{
    const auto gens = action_generators(pair);
    if (pair.q() != 0)
        return sweep_residues(gens, std::llabs(pair.q()));

    if (window < 1)
        throw ContractViolation("orbit_enumerate: window must be at least 1 when q = 0");

    const std::int64_t d = std::llabs(translation_modulus(gens));
    if (d != 0)
        return sweep_residues(gens, d);

    ReidemeisterSet out;
    out.cardinality = Cardinality::infinite();
    std::set<std::vector<std::int64_t>> seen;
    std::vector<std::int64_t> seeds;
    for (std::int64_t a = 0; a <= window; ++a) {
        seeds.push_back(a);
        if (a != 0)
            seeds.push_back(-a);
    }
    for (std::int64_t seed : seeds) {
        auto orbit = finite_orbit(gens, seed);
        if (seen.insert(orbit).second)
            out.window_orbits.push_back(std::move(orbit));
    }
    return out;
}

InvolutionReport involution_fixed_points(std::int64_t q, std::int64_t r1, std::int64_t r2)
{
    if (q == 0)
        throw ContractViolation("involution_fixed_points: the involution lives on Z/q, q must be nonzero");
    if ((r1 != 0 && r1 != 1) || (r2 != 0 && r2 != 1))
        throw ContractViolation("involution_fixed_points: r1, r2 must be 0 or 1");
    InvolutionReport out;
    out.q = q;
    const std::int64_t m = std::llabs(q);
    const std::int64_t target = mod_floor(r1 - r2, m);
    for (std::int64_t k = 0; k < m; ++k)
        if (mod_floor(2 * k, m) == target)
            out.fixed_points.push_back(k);
    out.fixed_count = static_cast<int>(out.fixed_points.size());
    return out;
}

Cardinality reidemeister_count(const MapPair& pair)
{
    const std::int64_t q = std::llabs(pair.q());
    const std::int64_t r = std::llabs(pair.r());
    if (pair.codomain() == BundleSpace::Torus) {
        if (q == 0 && r == 0)
            return Cardinality::infinite();
        return Cardinality::finite(static_cast<std::uint64_t>(std::gcd(q, r)));
    }
    if (pair.domain() == BundleSpace::Torus || q == 0)
        return Cardinality::infinite();
    if (q % 2 == 0 && r == 1)
        return Cardinality::finite(static_cast<std::uint64_t>(q / 2));
    return Cardinality::finite(static_cast<std::uint64_t>(q / 2 + 1));
}

}  // namespace fibrecoin
