#pragma once

// Circle bundles over the circle and their fibre-preserving maps.
//
// Both total spaces are the quotient of I x S^1 by a gluing of the end
// fibres: the identity for the torus T and complex conjugation for the
// Klein bottle K. Points are carried in the chart coordinates (t, theta)
// with theta the fibre angle in turns, i.e. z = exp(2 pi i theta).

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include "fibrecoin/rational.hpp"

namespace fibrecoin {

enum class BundleSpace { Torus, Klein };

/// "T" or "K".
std::string symbol(BundleSpace space);

/// Parses "T"/"K" (case-insensitive, also "torus"/"klein").
BundleSpace parse_space(const std::string& text);

/// Image of a fibre angle under the end gluing (1, z) ~ (0, glue(z)).
Rational glue_angle(BundleSpace space, const Rational& theta);

/// Thrown when an operation is called outside of its preconditions.
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BundlePoint {
public:
    /// Any chart representative is accepted; whole turns of t are folded
    /// back into [0, 1) through the gluing.
    BundlePoint(BundleSpace space, const Rational& t, const Rational& theta);

    BundleSpace space() const { return space_; }
    const Rational& t() const { return t_; }
    const Rational& theta() const { return theta_; }

    friend bool operator==(const BundlePoint&, const BundlePoint&) = default;

private:
    BundleSpace space_;
    Rational t_;
    Rational theta_;
};

std::string to_string(const BundlePoint& p);

enum class Epsilon { Plus, Minus };

using SectionMap = std::function<BundlePoint(const Rational& t)>;
using PointMap = std::function<BundlePoint(const BundlePoint&)>;

/// s_{+1} sits at theta = 0, s_{-1} at theta = 1/2.
SectionMap section(BundleSpace space, Epsilon epsilon);

/// Homotopy class over S^1 of a fibre-preserving map, recorded by its
/// fibre degree q and section winding r. For a Klein codomain r is a
/// residue mod 2 stored as 0 or 1.
class FiberMapClass {
public:
    FiberMapClass(BundleSpace domain, BundleSpace codomain, std::int64_t q, std::int64_t r);

    static FiberMapClass identity(BundleSpace space);
    /// s_{+1} o p or s_{-1} o p from domain to codomain.
    static FiberMapClass constant_section(BundleSpace domain, BundleSpace codomain, Epsilon epsilon);

    BundleSpace domain() const { return domain_; }
    BundleSpace codomain() const { return codomain_; }
    std::int64_t q() const { return q_; }
    std::int64_t r() const { return r_; }

    friend bool operator==(const FiberMapClass&, const FiberMapClass&) = default;

private:
    BundleSpace domain_;
    BundleSpace codomain_;
    std::int64_t q_;
    std::int64_t r_;
};

std::string to_string(const FiberMapClass& f);

/// Two classes with a common domain and codomain, together with their
/// differences q = q(f1) - q(f2) and r = r(f1) - r(f2) (mod 2 into K).
class MapPair {
public:
    MapPair(FiberMapClass f1, FiberMapClass f2);

    /// The pair (f, s_{+1} o p) whose differences are exactly (q, r).
    static MapPair from_difference(BundleSpace domain, BundleSpace codomain, std::int64_t q, std::int64_t r);

    const FiberMapClass& f1() const { return f1_; }
    const FiberMapClass& f2() const { return f2_; }
    BundleSpace domain() const { return f1_.domain(); }
    BundleSpace codomain() const { return f1_.codomain(); }
    std::int64_t q() const { return q_; }
    std::int64_t r() const { return r_; }

    /// The pair with f1 and f2 exchanged.
    MapPair swapped() const { return MapPair(f2_, f1_); }

private:
    FiberMapClass f1_;
    FiberMapClass f2_;
    std::int64_t q_;
    std::int64_t r_;
};

/// Constant angular velocity representative of a class:
///   [t, theta] -> [t, r t + q theta]   into T,
///   [t, theta] -> [t, r/2 + q theta]   into K.
class StandardMap {
public:
    explicit StandardMap(FiberMapClass cls);

    BundlePoint operator()(const BundlePoint& x) const;

    /// Evaluates on raw chart coordinates, t in [0, 1] included.
    BundlePoint at_chart(const Rational& t, const Rational& theta) const;

    const FiberMapClass& map_class() const { return cls_; }

private:
    FiberMapClass cls_;
};

StandardMap standard_map(const FiberMapClass& cls);

struct FibreInvariants {
    std::int64_t q;
    std::int64_t r;
    friend bool operator==(const FibreInvariants&, const FibreInvariants&) = default;
};

/// Reads (q, r) off an evaluator by tracking lifted fibre angles along the
/// fibre over t = 0 and along the image of s_{+1}. The sampling density is
/// 4 * degree_bound + 1 points per loop, which certifies the winding for
/// every evaluator whose angle moves by at most degree_bound turns per unit
/// parameter. A sampled step of a quarter turn or more is reported as an
/// error rather than guessed through.
FibreInvariants extract_invariants(const PointMap& evaluator, BundleSpace domain, BundleSpace codomain,
                                   std::int64_t degree_bound = 256);

/// Pointwise complex multiplication of standard maps, on class data.
FiberMapClass fibrewise_multiply(const FiberMapClass& f, const FiberMapClass& g);
FiberMapClass fibrewise_inverse(const FiberMapClass& f);

/// (f1, f2) -> (f1 * f2^{-1}, s_{+1} o p); both pairs share the coincidence set.
MapPair reduce_pair(const MapPair& pair);

bool homotopic_over_base(const FiberMapClass& f, const FiberMapClass& g);

}  // namespace fibrecoin
