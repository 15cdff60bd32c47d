#pragma once

// Coincidence loci of standard-form representatives, computed exactly on
// root indices. For q != 0 the coincidence set of (f1, f2) meets every
// fibre in |q| points; following them once around the base and through
// the gluing permutes the root indices, and each cycle of that permutation
// is one horizontal coincidence circle winding around the base as many
// times as the cycle is long.

#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "fibrecoin/bundle.hpp"
#include "fibrecoin/rational.hpp"

namespace fibrecoin {

struct HorizontalCircle {
    std::int64_t base_wrap = 0;
    /// Root indices at t = 0 along the circle, starting at the least.
    std::vector<std::int64_t> root_cycle;
    friend bool operator==(const HorizontalCircle&, const HorizontalCircle&) = default;
};

/// A whole fibre {t} x S^1 of coincidences.
struct VerticalFibre {
    Rational base_coordinate;
    friend bool operator==(const VerticalFibre&, const VerticalFibre&) = default;
};

using CoincidenceCircle = std::variant<HorizontalCircle, VerticalFibre>;

struct CoincidenceDiagram {
    MapPair pair;
    std::vector<CoincidenceCircle> circles;
    /// The standard representatives agree identically (q = 0, r = 0).
    bool degenerate = false;
};

class NonGenericAngle : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Fibre angles of the coincidence points over chart coordinate t in
/// [0, 1], indexed by root number k = 0, ..., |q| - 1:
///   into T: theta_k(t) = (k - r t) / q,
///   into K: theta_k = (r/2 + k) / |q|.
std::vector<Rational> coincidence_roots(const MapPair& pair, const Rational& t);

/// sigma[k] is the root index at t = 0 that root k reaches at t = 1 after
/// the domain gluing. Found by matching root values, not by formula.
std::vector<std::int64_t> gluing_permutation(const MapPair& pair);

CoincidenceDiagram diagram(const MapPair& pair);

/// diagram(pair), except for the two degenerate standard pairs, which are
/// replaced by their minimal deformations: into T the maps are pushed apart
/// by a constant fibre rotation (empty locus); into K one section is bumped
/// off itself away from t = 0, leaving the single fibre over t = 0.
CoincidenceDiagram minimal_representative_diagram(const MapPair& pair);

/// Points of the locus on the fibre over t = 0.
std::uint64_t fibre_intersection_count(const CoincidenceDiagram& d);

/// Points of the locus on the constant section at `generic_angle`. Needs a
/// Torus codomain and an angle that is not a root over the seam t = 0;
/// the latter raises NonGenericAngle.
std::uint64_t section_intersection_count(const CoincidenceDiagram& d, const Rational& generic_angle);

/// An angle at or just above 1/2 that passes the genericity check.
Rational generic_section_angle(const MapPair& pair);

/// Klein codomain, q != 0: r read from where the roots sit, at k/|q| (r = 0)
/// or at (k + 1/2)/|q| (r = 1).
std::int64_t root_phase_r(const MapPair& pair);

std::size_t circle_count(const CoincidenceDiagram& d);

/// Sorted base wraps of the horizontal circles.
std::vector<std::int64_t> wrap_multiset(const CoincidenceDiagram& d);

std::size_t vertical_count(const CoincidenceDiagram& d);

}  // namespace fibrecoin
