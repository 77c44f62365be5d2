#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricmld {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVec = std::vector<Rational>;

/// Malformed textual input: CLI arguments, cone files, spectrum files.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rendering: "p/q", or plain "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts [-]digits or [-]digits/digits. Anything else, in particular a
/// floating-point literal, raises ParseError.
Rational parse_rational(const std::string& token);
Integer parse_integer(const std::string& token);

Rational make_rational(std::int64_t num, std::int64_t den);

Integer floor_int(const Rational& r);
Integer ceil_int(const Rational& r);

/// Fractional part r - floor(r), always in [0, 1).
Rational frac(const Rational& r);

bool is_integral(const Rational& r);

Rational sum(const RatVec& v);
bool lex_less(const RatVec& a, const RatVec& b);
bool is_zero(const RatVec& v);

}  // namespace toricmld
