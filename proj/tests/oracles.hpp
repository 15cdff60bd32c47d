#pragma once

// Brute-force oracles for the test suites. None of these call into the
// closed forms, the orbit sweep or the gluing permutation they check.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "fibrecoin/bundle.hpp"

namespace oracle {

using fibrecoin::BundleSpace;
using fibrecoin::Rational;

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n)
    {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
    std::size_t components()
    {
        std::set<std::size_t> roots;
        for (std::size_t i = 0; i < parent_.size(); ++i)
            roots.insert(find(i));
        return roots.size();
    }

private:
    std::vector<std::size_t> parent_;
};

inline std::int64_t residue(std::int64_t a, std::int64_t m)
{
    return ((a % m) + m) % m;
}

/// Reidemeister classes into K with M = K, q != 0, from the explicit class
/// of a^m: { a^(q t + r (1 - (-1)^v)/2 + (-1)^v m) : t, v in Z }.
inline std::size_t klein_reidemeister_classes(std::int64_t q, std::int64_t r)
{
    const std::int64_t n = std::llabs(q);
    UnionFind uf(static_cast<std::size_t>(n));
    for (std::int64_t m = 0; m < n; ++m)
        for (int v = 0; v < 2; ++v)
            for (std::int64_t t = -1; t <= 1; ++t) {
                const std::int64_t sign = v == 0 ? 1 : -1;
                const std::int64_t image = q * t + r * (1 - sign) / 2 + sign * m;
                uf.unite(static_cast<std::size_t>(m), static_cast<std::size_t>(residue(image, n)));
            }
    return uf.components();
}

/// #Z/(qZ + rZ) by searching the smallest positive combination a q + b r.
inline std::int64_t cokernel_order(std::int64_t q, std::int64_t r)
{
    const std::int64_t bound = std::llabs(q) + std::llabs(r) + 1;
    std::int64_t best = 0;
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b) {
            const std::int64_t c = a * q + b * r;
            if (c > 0 && (best == 0 || c < best))
                best = c;
        }
    return best;  // 0 means the image is trivial: infinitely many classes
}

/// Coincidence angles of two standard maps over chart coordinate t, found
/// by scanning the fibre at resolution 1/denominator.
inline std::vector<Rational> scan_roots(const fibrecoin::StandardMap& f1, const fibrecoin::StandardMap& f2,
                                        const Rational& t, std::int64_t denominator)
{
    std::vector<Rational> out;
    for (std::int64_t a = 0; a < denominator; ++a) {
        const Rational theta(a, denominator);
        if (f1.at_chart(t, theta) == f2.at_chart(t, theta))
            out.push_back(theta);
    }
    return out;
}

inline Rational circular_distance(const Rational& a, const Rational& b)
{
    Rational d = fibrecoin::mod_one(a - b);
    return std::min(d, Rational(1) - d);
}

/// Number of connected coincidence circles of the standard maps of a pair
/// with q != 0, by tracing scanned roots across `slices` base slices and
/// joining the last slice to t = 0 through the domain gluing.
inline std::size_t traced_circle_count(const fibrecoin::MapPair& pair, std::int64_t slices)
{
    const fibrecoin::StandardMap f1(pair.f1());
    const fibrecoin::StandardMap f2(pair.f2());
    const std::int64_t n = std::llabs(pair.q());
    const std::int64_t denominator = 2 * n * slices;

    std::vector<std::vector<Rational>> roots;
    for (std::int64_t j = 0; j <= slices; ++j)
        roots.push_back(scan_roots(f1, f2, Rational(j, slices), denominator));

    std::vector<std::size_t> offset;
    std::size_t total = 0;
    for (std::int64_t j = 0; j < slices; ++j) {
        offset.push_back(total);
        total += roots[static_cast<std::size_t>(j)].size();
    }
    UnionFind uf(total);

    const auto nearest = [](const std::vector<Rational>& candidates, const Rational& x) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < candidates.size(); ++i)
            if (circular_distance(candidates[i], x) < circular_distance(candidates[best], x))
                best = i;
        return best;
    };

    for (std::int64_t j = 0; j < slices; ++j) {
        const auto& here = roots[static_cast<std::size_t>(j)];
        for (std::size_t i = 0; i < here.size(); ++i) {
            const std::size_t node = offset[static_cast<std::size_t>(j)] + i;
            if (j + 1 < slices) {
                const auto& next = roots[static_cast<std::size_t>(j + 1)];
                uf.unite(node, offset[static_cast<std::size_t>(j + 1)] + nearest(next, here[i]));
            } else {
                // Continue to chart t = 1, then glue back to t = 0.
                const auto& end = roots[static_cast<std::size_t>(slices)];
                const Rational at_end = end[nearest(end, here[i])];
                const Rational glued = fibrecoin::glue_angle(pair.domain(), at_end);
                uf.unite(node, nearest(roots[0], glued));
            }
        }
    }
    return uf.components();
}

}  // namespace oracle
