#include "fibrecoin/nielsen.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace fibrecoin {

std::uint64_t nielsen_number(const MapPair& pair)
{
    const std::int64_t q = std::llabs(pair.q());
    const std::int64_t r = std::llabs(pair.r());
    if (pair.codomain() == BundleSpace::Torus)
        return static_cast<std::uint64_t>(std::gcd(q, r));
    if (q == 0)
        return r == 0 ? 1 : 0;
    if (q % 2 == 0 && r == 1)
        return static_cast<std::uint64_t>(q / 2);
    return static_cast<std::uint64_t>(q / 2 + 1);
}

std::uint64_t nielsen_sharp(const MapPair& pair)
{
    return nielsen_number(pair);
}

std::uint64_t mcc(const MapPair& pair)
{
    return nielsen_number(pair);
}

bool is_loose(const MapPair& pair)
{
    if (pair.codomain() == BundleSpace::Torus)
        return pair.q() == 0 && pair.r() == 0;
    return pair.q() == 0 && pair.r() != 0;
}

InvariantReport full_report(const MapPair& pair)
{
    InvariantReport out;
    out.reidemeister = reidemeister_count(pair);
    out.nielsen = nielsen_number(pair);
    out.nielsen_sharp = nielsen_sharp(pair);
    out.mcc = mcc(pair);
    out.loose = is_loose(pair);

    const auto fail = [&](const char* what) {
        throw std::logic_error(std::string("full_report: ") + what + " violated for pair " + to_string(pair.f1()) +
                               ", " + to_string(pair.f2()));
    };
    if (!(out.nielsen <= out.nielsen_sharp && out.nielsen_sharp <= out.mcc))
        fail("N <= N# <= MCC");
    if (out.reidemeister.is_finite() && out.mcc > out.reidemeister.value())
        fail("MCC <= #R");
    if (out.loose != (out.mcc == 0))
        fail("loose <=> MCC = 0");
    return out;
}

}  // namespace fibrecoin
