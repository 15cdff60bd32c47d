#pragma once

#include <cstdint>

#include "fibrecoin/bundle.hpp"
#include "fibrecoin/reidemeister.hpp"

namespace fibrecoin {

struct InvariantReport {
    Cardinality reidemeister = Cardinality::infinite();
    std::uint64_t nielsen = 0;
    std::uint64_t nielsen_sharp = 0;
    std::uint64_t mcc = 0;
    bool loose = false;

    friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// N_B(f1, f2). Into T: gcd(|q|, |r|), or 0 when (q, r) = (0, 0).
/// Into K: |q|/2 for q even and r = 1, floor(|q|/2) + 1 for other q != 0;
/// for q = 0 it is 1 when r = 0 and 0 otherwise.
std::uint64_t nielsen_number(const MapPair& pair);

/// Both coincide with nielsen_number in this setting.
std::uint64_t nielsen_sharp(const MapPair& pair);
std::uint64_t mcc(const MapPair& pair);

/// Into T: f1 ~ f2. Into K: the maps are antipodal (q = 0, r = 1).
bool is_loose(const MapPair& pair);

/// Assembles the counts and checks 0 <= N <= N# <= MCC (<= #R when finite)
/// and loose <=> MCC = 0. A violation throws std::logic_error.
InvariantReport full_report(const MapPair& pair);

}  // namespace fibrecoin
