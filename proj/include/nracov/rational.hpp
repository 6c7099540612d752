#ifndef NRACOV_RATIONAL_HPP
#define NRACOV_RATIONAL_HPP

#include <gmpxx.h>
#include <optional>
#include <string>

namespace nracov {

using Rational = mpq_class;
using Integer = mpz_class;

inline int sign_of(const Rational& q) { return sgn(q); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Integer rat_floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer rat_ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational rat_pow(const Rational& base, unsigned e) {
    Rational r(1);
    Rational b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

/// Parses "123", "-4/5" or a decimal literal like "3.25" into an exact
/// rational. Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

/// Prints without loss; integers print bare, other values as num/den.
std::string rational_str(const Rational& q);

} // namespace nracov

#endif
