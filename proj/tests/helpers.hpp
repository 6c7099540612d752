#ifndef NRACOV_TESTS_HELPERS_HPP
#define NRACOV_TESTS_HELPERS_HPP

#include <random>

#include "nracov/formula.hpp"
#include "nracov/poly.hpp"
#include "nracov/real.hpp"

namespace nracov::testing {

inline Polynomial pvar(unsigned i) { return Polynomial::variable(Var(i)); }
inline Polynomial pconst(int c) { return Polynomial(Rational(c)); }
inline Polynomial pconst(const Rational& c) { return Polynomial(c); }

/// Random polynomial in vars x1..xk, total degree <= deg, coefficients in
/// [-cmax, cmax].
inline Polynomial random_poly(std::mt19937_64& rng, unsigned k, unsigned deg, int cmax,
                              unsigned max_terms = 4) {
    std::uniform_int_distribution<int> coeff(-cmax, cmax);
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    std::uniform_int_distribution<unsigned> degd(0, deg);
    std::uniform_int_distribution<unsigned> vard(1, k);
    Polynomial p;
    unsigned n = nterms(rng);
    for (unsigned t = 0; t < n; ++t) {
        int c = coeff(rng);
        if (c == 0) continue;
        unsigned d = degd(rng);
        Monomial m = Monomial::one();
        for (unsigned j = 0; j < d; ++j) m = m * Monomial::var(Var(vard(rng)));
        Polynomial term;
        term.add_term(m, Rational(c));
        p += term;
    }
    return p;
}

inline Polynomial random_nonconst_poly(std::mt19937_64& rng, unsigned k, unsigned deg, int cmax,
                                       unsigned max_terms = 4) {
    while (true) {
        Polynomial p = random_poly(rng, k, deg, cmax, max_terms);
        if (!p.is_constant()) return p;
    }
}

} // namespace nracov::testing

#endif
