#ifndef NRACOV_POLYOPS_HPP
#define NRACOV_POLYOPS_HPP

#include <optional>
#include <set>
#include <vector>

#include "nracov/poly.hpp"

namespace nracov {

/// Exact quotient a/b, or nullopt when b does not divide a.
std::optional<Polynomial> exact_div(const Polynomial& a, const Polynomial& b);

/// Pseudo-remainder of a by b w.r.t. x: lc(b)^(da-db+1) * a = q*b + r.
Polynomial pseudo_rem(const Polynomial& a, const Polynomial& b, Var x);

/// Content of p w.r.t. x: gcd of the coefficients (a polynomial in the
/// remaining variables).
Polynomial content(const Polynomial& p, Var x);
Polynomial primitive_part(const Polynomial& p, Var x);

/// Multivariate gcd over Q, sign-normalized. gcd(0,0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Scales so coefficients are coprime integers and the leading coefficient
/// (canonical monomial order) is positive.
Polynomial normalize_sign(const Polynomial& p);
/// Same, also reporting the applied rational factor p_out = f * p_in (f != 0).
std::pair<Polynomial, Rational> normalize_sign_factor(const Polynomial& p);

/// Resultant of p and q w.r.t. x (subresultant PRS). Requires x in both.
Polynomial resultant(const Polynomial& p, const Polynomial& q, Var x);
/// Relaxed variant for internal elimination: allows deg 0 in x
/// (res(p,q) = q^deg_x(p) when deg_x(q) = 0).
Polynomial resultant_u(const Polynomial& p, const Polynomial& q, Var x);

/// Discriminant w.r.t. x. deg 1 returns 1 by convention; requires x in p.
Polynomial discriminant(const Polynomial& p, Var x);

/// Square-free part w.r.t. all variables.
Polynomial squarefree_part(const Polynomial& p);

/// Splits p into non-constant square-free primitive sign-normalized factors
/// (with multiplicities collapsed; full irreducibility is not guaranteed).
std::vector<Polynomial> squarefree_factors(const Polynomial& p);

/// Pairwise-coprime square-free basis: every input is, up to a rational
/// constant, a product of powers of basis members. Constants are dropped.
std::set<Polynomial> refine_basis(const std::set<Polynomial>& ps);

} // namespace nracov

#endif
