#pragma once

// Reidemeister classes over S^1: orbits of the pi_1(M)-action on
// pi_1(F_N) = Z for a pair of maps between circle bundles over the circle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibrecoin/bundle.hpp"

namespace fibrecoin {

/// A natural number or infinity.
class Cardinality {
public:
    static Cardinality finite(std::uint64_t n) { return Cardinality(n); }
    static Cardinality infinite() { return Cardinality(std::nullopt); }

    bool is_finite() const { return value_.has_value(); }
    /// Throws std::logic_error when infinite.
    std::uint64_t value() const;

    /// Decimal digits, or "inf".
    std::string to_string() const;

    friend bool operator==(const Cardinality&, const Cardinality&) = default;

private:
    explicit Cardinality(std::optional<std::uint64_t> v) : value_(v) {}
    std::optional<std::uint64_t> value_;
};

/// k -> sign * k + offset on Z.
struct AffineGenerator {
    int sign = 1;
    std::int64_t offset = 0;

    std::int64_t operator()(std::int64_t k) const { return sign * k + offset; }
    /// Image on Z/m (m > 0), as a residue in [0, m).
    std::int64_t apply_mod(std::int64_t k, std::int64_t m) const;
    /// this, then next.
    AffineGenerator then(const AffineGenerator& next) const;
    bool is_identity() const { return sign == 1 && offset == 0; }

    friend bool operator==(const AffineGenerator&, const AffineGenerator&) = default;
};

std::string to_string(const AffineGenerator& g);

struct ReidemeisterSet {
    Cardinality cardinality = Cardinality::infinite();
    /// Finite case: the classes are orbits on Z/modulus.
    std::int64_t modulus = 0;
    /// Least nonnegative residue of each orbit, ascending; finite case only.
    std::vector<std::int64_t> representatives;
    /// Residue -> orbit index; finite case only.
    std::vector<std::size_t> orbit_of;
    /// Infinite case: the (finite) orbits meeting [-window, window], each
    /// sorted, in the order the sweep 0, 1, -1, 2, -2, ... first meets them.
    std::vector<std::vector<std::int64_t>> window_orbits;
};

struct InvolutionReport {
    std::int64_t q = 0;
    int fixed_count = 0;
    std::vector<std::int64_t> fixed_points;
};

/// Actions of a_M and b_M on k in Z = pi_1(F_N):
///   into T: k -> k - q, k -> k - r;
///   into K: k -> k - q, k -> r - k.
std::vector<AffineGenerator> action_generators(const MapPair& pair);

/// Orbit enumeration under action_generators. For q != 0 a breadth-first
/// sweep of Z/|q|. For q = 0 the translation part of the generated group is
/// computed first; a nontrivial translation subgroup dZ gives d classes,
/// while a trivial one leaves a group of order at most 2 acting on Z, so
/// the set is infinite and only the orbits meeting the window are listed.
ReidemeisterSet orbit_enumerate(const MapPair& pair, std::int64_t window);

/// Solutions of 2k = r1 - r2 in Z/|q|, i.e. the fixed points of
/// iota([k]) = [r1 - r2 - k]. Requires q != 0 and r1, r2 in {0, 1}.
InvolutionReport involution_fixed_points(std::int64_t q, std::int64_t r1, std::int64_t r2);

/// Closed-form Reidemeister number over S^1.
Cardinality reidemeister_count(const MapPair& pair);

}  // namespace fibrecoin
