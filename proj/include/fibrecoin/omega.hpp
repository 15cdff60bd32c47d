#pragma once

// The bordism group Omega_1(M; phi) for circle bundles over the circle and
// the coincidence class omega_B(f1, f2) in it, as a triple of components:
//
//   (M,N)   group          c1   c2               c3
//   (T,T)   Z + Z  + Z2    q    r                rho2(N_B)
//   (K,K)   Z + Z2 + Z2    q    r + 1 + rho2(q)  rho2(N_B)
//   (K,T)   0 + Z  + Z2    -    r                rho2(N_B)
//   (T,K)   0 + Z2 + Z2    -    r + 1            rho2(N_B)
//
// The first two components count intersections of the coincidence circles
// with a fibre and with s_{-1}(B); the shifts by 1 and rho2(q) come from
// the self-intersections of s_{+1} and s_{-1} in K. Each coincidence circle
// is invariantly framed and adds 1 to c3.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "fibrecoin/bundle.hpp"

namespace fibrecoin {

enum class Summand { Zero, Z, Z2 };

struct OmegaGroupDescriptor {
    BundleSpace domain;
    BundleSpace codomain;
    std::array<Summand, 3> summands;

    friend bool operator==(const OmegaGroupDescriptor&, const OmegaGroupDescriptor&) = default;
};

/// "Z+Z+Z2" etc.
std::string to_string(const OmegaGroupDescriptor& g);

OmegaGroupDescriptor omega_group(BundleSpace domain, BundleSpace codomain);

/// Raised when a class's c3 disagrees with the (q, r) its first two
/// components encode.
class InconsistentClass : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OmegaClass {
public:
    /// c1 must be absent exactly when the first summand is 0; Z2 components
    /// must be 0 or 1.
    OmegaClass(OmegaGroupDescriptor group, std::optional<std::int64_t> c1, std::int64_t c2, std::int64_t c3);

    static OmegaClass zero(const OmegaGroupDescriptor& group);

    const OmegaGroupDescriptor& group() const { return group_; }
    const std::optional<std::int64_t>& c1() const { return c1_; }
    std::int64_t c2() const { return c2_; }
    std::int64_t c3() const { return c3_; }

    bool is_zero() const;

    friend bool operator==(const OmegaClass&, const OmegaClass&) = default;

private:
    OmegaGroupDescriptor group_;
    std::optional<std::int64_t> c1_;
    std::int64_t c2_;
    std::int64_t c3_;
};

/// "(3, 1, 0)"; a trivial c1 renders as "0*".
std::string to_string(const OmegaClass& w);

std::int64_t rho2(std::int64_t n);

OmegaClass omega_class(const MapPair& pair);

/// omega_B(f, s_{+1} o p_M), the fibred degree of f.
OmegaClass root_invariant(const FiberMapClass& f);

/// Inverts omega_class on its first two components and checks c3.
FibreInvariants recover_pair_invariants(const OmegaClass& w);

/// Image in H_1(M; Z~): the first two components.
struct HurewiczImage {
    std::optional<std::int64_t> c1;
    std::int64_t c2 = 0;
    friend bool operator==(const HurewiczImage&, const HurewiczImage&) = default;
};

HurewiczImage hurewicz_truncation(const OmegaClass& w);

/// The two components of Dold's index of a self-map over S^1 that are
/// visible here. `first` is fixed to q(id) - q(f) = 1 - q(f); the opposite
/// orientation convention would negate it.
struct DoldIndexComponents {
    std::int64_t first = 0;
    std::int64_t second = 0;
    friend bool operator==(const DoldIndexComponents&, const DoldIndexComponents&) = default;
};

DoldIndexComponents dold_index_components(const FiberMapClass& f);

}  // namespace fibrecoin
