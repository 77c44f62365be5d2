#include "toricmld/rational.hpp"

#include <cctype>

namespace toricmld {

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

bool integer_token(const std::string& s) {
    if (s.empty()) return false;
    return s[0] == '-' ? all_digits(s.substr(1)) : all_digits(s);
}

}  // namespace

Integer parse_integer(const std::string& token) {
    if (!integer_token(token))
        throw ParseError("invalid integer literal '" + token + "'");
    return Integer(token);
}

Rational parse_rational(const std::string& token) {
    auto slash = token.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(token));
    std::string num = token.substr(0, slash);
    std::string den = token.substr(slash + 1);
    if (!integer_token(num) || !all_digits(den))
        throw ParseError("invalid rational literal '" + token + "'");
    Integer d(den);
    if (d == 0) throw ParseError("zero denominator in '" + token + "'");
    Rational r(Integer(num), d);
    r.canonicalize();
    return r;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
    r.canonicalize();
    return r;
}

Integer floor_int(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Integer ceil_int(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Rational frac(const Rational& r) { return r - Rational(floor_int(r)); }

bool is_integral(const Rational& r) { return r.get_den() == 1; }

Rational sum(const RatVec& v) {
    Rational s(0);
    for (const auto& x : v) s += x;
    return s;
}

bool lex_less(const RatVec& a, const RatVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
}

bool is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace toricmld
