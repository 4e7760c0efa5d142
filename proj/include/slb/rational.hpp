#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace slb {

/// Exact rational in canonical form (GMP keeps numerator/denominator reduced).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "-p/q" or an integer. Throws InputError on malformed text or q = 0.
auto parse_rational(std::string_view text) -> Rational;

/// "p/q", or "p" when the denominator is 1.
auto to_string(const Rational& q) -> std::string;

/// p/q reduced; mpq_class(p, q) alone leaves the fraction uncanonicalized.
inline auto ratio(long p, long q) -> Rational
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline auto to_double(const Rational& q) -> double { return q.get_d(); }

/// Least common multiple of all denominators (1 for an empty range).
auto denominator_lcm(std::span<const Rational> values) -> Integer;

/// Scales a nonzero rational vector to a primitive integer vector with a
/// positive first nonzero entry.
auto primitive_integer_vector(std::span<const Rational> v) -> std::vector<Rational>;

}  // namespace slb
