#include "rational.hpp"

#include "errors.hpp"

#include <cctype>

namespace euclid8 {

std::string to_string(const Rational& r) {
    return r.get_str();
}

std::string to_string(const Integer& n) {
    return n.get_str();
}

namespace {

bool looks_like_number(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = slash == std::string_view::npos
                      ? Integer(1)
                      : parse_integer(s.substr(slash + 1));
    if (den == 0)
        fail(errkind::parse_error, "zero denominator: \"" + std::string(s) + "\"");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer parse_integer(std::string_view s) {
    if (!looks_like_number(s))
        fail(errkind::parse_error, "invalid integer: \"" + std::string(s) + "\"");
    std::string t(s[0] == '+' ? s.substr(1) : s);
    return Integer(t, 10);
}

Integer floor_div(const Integer& num, const Integer& den) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Integer ceil_div(const Integer& num, const Integer& den) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

} // namespace euclid8
