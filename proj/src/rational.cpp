#include "slb/rational.hpp"

#include "slb/error.hpp"

#include <cctype>

namespace slb {

namespace {

auto is_integer_text(std::string_view s) -> bool
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

auto parse_integer(std::string_view s) -> Integer
{
    if (!is_integer_text(s))
        throw InputError("malformed rational '" + std::string(s) + "'");
    if (s[0] == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

auto parse_rational(std::string_view text) -> Rational
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

auto to_string(const Rational& q) -> std::string
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_str();
}

auto denominator_lcm(std::span<const Rational> values) -> Integer
{
    Integer l = 1;
    for (const auto& v : values)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

auto primitive_integer_vector(std::span<const Rational> v) -> std::vector<Rational>
{
    Integer l = denominator_lcm(v);
    Integer g = 0;
    std::vector<Integer> ints;
    ints.reserve(v.size());
    for (const auto& x : v) {
        Rational scaled = x * l;
        ints.push_back(scaled.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
    }
    std::vector<Rational> out;
    out.reserve(v.size());
    if (g == 0) {
        out.assign(v.size(), Rational(0));
        return out;
    }
    int sign = 0;
    for (const auto& x : ints)
        if (x != 0) {
            sign = sgn(x);
            break;
        }
    for (const auto& x : ints)
        out.emplace_back(Integer(x / g) * sign);
    return out;
}

}  // namespace slb
