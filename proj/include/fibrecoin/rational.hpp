#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace fibrecoin {

/// Exact rational used for base coordinates and fibre angles.
using Rational = boost::rational<std::int64_t>;

/// Largest integer not exceeding x.
std::int64_t floor_of(const Rational& x);

/// Representative of x modulo 1 in [0, 1).
Rational mod_one(const Rational& x);

/// Representative of x modulo 1 in [-1/2, 1/2).
Rational centered_mod_one(const Rational& x);

/// Nonnegative residue of a modulo m (m > 0).
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

std::int64_t gcd_abs(std::int64_t a, std::int64_t b);

std::string to_string(const Rational& x);

}  // namespace fibrecoin
