#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fibrecoin/geometry.hpp"
#include "fibrecoin/nielsen.hpp"
#include "fibrecoin/reidemeister.hpp"
#include "oracles.hpp"

using namespace fibrecoin;

namespace {
constexpr auto T = BundleSpace::Torus;
constexpr auto K = BundleSpace::Klein;

MapPair diff(BundleSpace d, BundleSpace c, std::int64_t q, std::int64_t r)
{
    return MapPair::from_difference(d, c, q, r);
}

std::vector<Rational> sorted(std::vector<Rational> v)
{
    std::sort(v.begin(), v.end());
    return v;
}
}  // namespace

TEST_CASE("coincidence roots")
{
    CHECK(coincidence_roots(diff(K, K, 5, 0), Rational(1, 3)) ==
          std::vector<Rational>{0, Rational(1, 5), Rational(2, 5), Rational(3, 5), Rational(4, 5)});
    CHECK(coincidence_roots(diff(K, K, 2, 1), Rational(7, 9)) == std::vector<Rational>{Rational(1, 4), Rational(3, 4)});
    CHECK(sorted(coincidence_roots(diff(T, T, 2, 1), Rational(1, 2))) ==
          std::vector<Rational>{Rational(1, 4), Rational(3, 4)});
    CHECK_THROWS_AS(coincidence_roots(diff(T, T, 0, 1), 0), ContractViolation);
}

TEST_CASE("roots are exactly the scanned coincidences of the standard maps")
{
    for (auto c : {T, K})
        for (std::int64_t q = -7; q <= 7; ++q) {
            if (q == 0)
                continue;
            for (std::int64_t r = (c == K ? 0 : -5); r <= (c == K ? 1 : 5); ++r) {
                // Non-trivial representatives with the same differences.
                const MapPair pair(FiberMapClass(c, c, q + 2, r + 3), FiberMapClass(c, c, 2, 3));
                for (int a = 0; a <= 6; ++a) {
                    const Rational t(a, 6);
                    const auto scanned = oracle::scan_roots(StandardMap(pair.f1()), StandardMap(pair.f2()), t,
                                                            2 * std::llabs(q) * 6);
                    CHECK(sorted(coincidence_roots(pair, t)) == scanned);
                }
            }
        }
}

TEST_CASE("gluing permutation")
{
    CHECK(gluing_permutation(diff(T, T, 6, 4)) == std::vector<std::int64_t>{2, 3, 4, 5, 0, 1});
    CHECK(gluing_permutation(diff(K, K, 5, 0)) == std::vector<std::int64_t>{0, 4, 3, 2, 1});
    CHECK(gluing_permutation(diff(K, K, 2, 1)) == std::vector<std::int64_t>{1, 0});
    CHECK_THROWS_AS(gluing_permutation(diff(K, K, 0, 1)), ContractViolation);

    for (std::int64_t q = -30; q <= 30; ++q) {
        if (q == 0)
            continue;
        const std::int64_t n = std::llabs(q);
        for (std::int64_t r = -9; r <= 9; ++r) {
            const auto sigma = gluing_permutation(diff(T, T, q, r));
            for (std::int64_t k = 0; k < n; ++k)
                CHECK(sigma[static_cast<std::size_t>(k)] == oracle::residue(k - r, n));
        }
        for (std::int64_t r : {0, 1}) {
            const auto sigma = gluing_permutation(diff(K, K, q, r));
            for (std::int64_t k = 0; k < n; ++k) {
                CHECK(sigma[static_cast<std::size_t>(k)] == oracle::residue(-k - r, n));
                CHECK(sigma[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])] == k);
            }
        }
    }
}

TEST_CASE("the gluing involution and the algebraic involution give the same count")
{
    // k -> -k - r (gluing) and k -> r - k (action) are conjugate by k -> k + r.
    for (std::int64_t q = 1; q <= 60; ++q)
        for (std::int64_t r : {0, 1}) {
            const MapPair pair = diff(K, K, q, r);
            const auto sigma = gluing_permutation(pair);
            const auto fixed_sigma = std::count_if(sigma.begin(), sigma.end(), [k = std::int64_t{0}](auto s) mutable {
                return s == k++;
            });
            CHECK(fixed_sigma == involution_fixed_points(q, r, 0).fixed_count);
            CHECK(circle_count(diagram(pair)) == orbit_enumerate(pair, 1).representatives.size());
        }
}

TEST_CASE("diagrams")
{
    const auto tt = diagram(diff(T, T, 6, 4));
    CHECK(circle_count(tt) == 2);
    CHECK(wrap_multiset(tt) == std::vector<std::int64_t>{3, 3});
    CHECK(std::get<HorizontalCircle>(tt.circles[0]).root_cycle == std::vector<std::int64_t>{0, 2, 4});
    CHECK(std::get<HorizontalCircle>(tt.circles[1]).root_cycle == std::vector<std::int64_t>{1, 3, 5});

    const auto kk = diagram(diff(K, K, 5, 0));
    CHECK(circle_count(kk) == 3);
    CHECK(wrap_multiset(kk) == std::vector<std::int64_t>{1, 2, 2});

    const auto loose = diagram(diff(K, K, 0, 1));
    CHECK(loose.circles.empty());
    CHECK_FALSE(loose.degenerate);

    const auto kt = diagram(diff(K, T, 0, 3));
    CHECK(vertical_count(kt) == 3);
    CHECK(std::get<VerticalFibre>(kt.circles[1]).base_coordinate == Rational(1, 3));

    CHECK(diagram(diff(T, T, 0, 0)).degenerate);
    CHECK(diagram(diff(T, K, 0, 0)).degenerate);
}

TEST_CASE("minimal representatives")
{
    const auto tt = minimal_representative_diagram(diff(T, T, 0, 0));
    CHECK_FALSE(tt.degenerate);
    CHECK(tt.circles.empty());

    for (auto d : {T, K}) {
        const auto k0 = minimal_representative_diagram(diff(d, K, 0, 0));
        CHECK_FALSE(k0.degenerate);
        REQUIRE(k0.circles.size() == 1);
        CHECK(std::get<VerticalFibre>(k0.circles[0]).base_coordinate == Rational(0));
    }

    const auto kk = minimal_representative_diagram(diff(K, K, 4, 1));
    CHECK(wrap_multiset(kk) == std::vector<std::int64_t>{2, 2});
}

TEST_CASE("circle counts match Nielsen numbers and wraps have the expected shape")
{
    for (auto [d, c] : {std::pair{T, T}, std::pair{K, K}, std::pair{K, T}, std::pair{T, K}}) {
        const std::int64_t qmax = d == c ? 50 : 0;
        for (std::int64_t q = -qmax; q <= qmax; ++q)
            for (std::int64_t r = (c == K ? 0 : -50); r <= (c == K ? 1 : 50); ++r) {
                const MapPair pair = diff(d, c, q, r);
                const auto md = minimal_representative_diagram(pair);
                CHECK(circle_count(md) == nielsen_number(pair));
                if (q == 0)
                    continue;
                const auto wraps = wrap_multiset(md);
                CHECK(std::accumulate(wraps.begin(), wraps.end(), std::int64_t{0}) == std::llabs(q));
                if (c == T) {
                    const std::int64_t expected = std::llabs(q) / std::gcd(std::llabs(q), std::llabs(r));
                    CHECK(std::all_of(wraps.begin(), wraps.end(), [&](auto w) { return w == expected; }));
                } else {
                    CHECK(std::all_of(wraps.begin(), wraps.end(), [](auto w) { return w == 1 || w == 2; }));
                    CHECK(std::count(wraps.begin(), wraps.end(), 1) ==
                          involution_fixed_points(q, pair.f1().r(), pair.f2().r()).fixed_count);
                }
            }
    }
}

TEST_CASE("fibre and section intersections")
{
    const auto tt = diagram(diff(T, T, 6, 4));
    CHECK(fibre_intersection_count(tt) == 6);
    CHECK(section_intersection_count(tt, generic_section_angle(tt.pair)) == 4);
    CHECK_THROWS_AS(section_intersection_count(tt, Rational(1, 2)), NonGenericAngle);

    const auto kt = diagram(diff(K, T, 0, 3));
    CHECK(fibre_intersection_count(kt) == 0);
    CHECK(section_intersection_count(kt, Rational(1, 2)) == 3);

    const auto kk = diagram(diff(K, K, 5, 0));
    CHECK(fibre_intersection_count(kk) == 5);
    CHECK_THROWS_AS(section_intersection_count(kk, Rational(1, 2)), ContractViolation);
    CHECK_THROWS_AS(fibre_intersection_count(diagram(diff(T, T, 0, 0))), ContractViolation);

    for (std::int64_t q = -20; q <= 20; ++q)
        for (std::int64_t r = -20; r <= 20; ++r) {
            const auto d = diagram(diff(T, T, q, r));
            if (d.degenerate)
                continue;
            CHECK(fibre_intersection_count(d) == static_cast<std::uint64_t>(std::llabs(q)));
            CHECK(section_intersection_count(d, generic_section_angle(d.pair)) ==
                  static_cast<std::uint64_t>(std::llabs(r)));
            // Any other generic angle gives the same count.
            const Rational other(1, 2 * std::llabs(q) + 7);
            CHECK(section_intersection_count(d, other) == static_cast<std::uint64_t>(std::llabs(r)));
        }
}

TEST_CASE("root phase recovers r into K")
{
    CHECK(root_phase_r(diff(K, K, 5, 0)) == 0);
    CHECK(root_phase_r(diff(K, K, 2, 1)) == 1);
    for (std::int64_t q = -30; q <= 30; ++q)
        for (std::int64_t r : {0, 1})
            if (q != 0)
                CHECK(root_phase_r(diff(K, K, q, r)) == r);
    CHECK_THROWS_AS(root_phase_r(diff(T, T, 3, 1)), ContractViolation);
}
