#include "fibrecoin/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace fibrecoin {

std::int64_t floor_of(const Rational& x)
{
    // boost::rational keeps the denominator positive.
    const std::int64_t n = x.numerator();
    const std::int64_t d = x.denominator();
    std::int64_t q = n / d;
    if ((n % d != 0) && (n < 0))
        --q;
    return q;
}

Rational mod_one(const Rational& x)
{
    return x - Rational(floor_of(x));
}

Rational centered_mod_one(const Rational& x)
{
    const Rational half(1, 2);
    return mod_one(x + half) - half;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    if (m <= 0)
        throw std::invalid_argument("mod_floor: modulus must be positive");
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t gcd_abs(std::int64_t a, std::int64_t b)
{
    return std::gcd(a, b);
}

std::string to_string(const Rational& x)
{
    if (x.denominator() == 1)
        return std::to_string(x.numerator());
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

}  // namespace fibrecoin
