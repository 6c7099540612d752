#ifndef NRACOV_UPOLY_HPP
#define NRACOV_UPOLY_HPP

#include <vector>

#include "nracov/poly.hpp"
#include "nracov/rational.hpp"

namespace nracov {

/// Dense univariate polynomial over Q; coefficient k belongs to x^k.
/// Normalized: no trailing zero coefficients (zero poly is empty).
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> cs) : coeffs_(std::move(cs)) { trim(); }

    static UPoly from_poly(const Polynomial& p);  // p univariate in its main var
    Polynomial to_poly(Var v) const;

    bool is_zero() const { return coeffs_.empty(); }
    unsigned degree() const { return coeffs_.empty() ? 0 : static_cast<unsigned>(coeffs_.size() - 1); }
    const Rational& coeff(unsigned k) const { return coeffs_[k]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& lc() const { return coeffs_.back(); }

    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return sign_of(eval(x)); }

    UPoly derivative() const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly neg_x() const;  // p(-x)

    /// Quotient/remainder over Q.
    std::pair<UPoly, UPoly> divrem(const UPoly& d) const;

    /// Monic gcd over Q; gcd(0,0)=0.
    static UPoly gcd(UPoly a, UPoly b);

    UPoly squarefree_part() const;

    /// Divide out the factor (x - r); r must be a root.
    UPoly deflate_root(const Rational& r) const;

    /// Integer-primitive with positive leading coefficient.
    UPoly normalized() const;

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string str() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

/// Isolating intervals for all distinct real roots of p (square-free part is
/// taken internally), in increasing order. Each entry is either an exact
/// rational root or an open interval (lo,hi) with sign(p*(lo)) != sign(p*(hi))
/// containing exactly one root of the reported defining polynomial.
struct IsolatedRoot {
    bool exact = false;
    Rational value;   // when exact
    Rational lo, hi;  // when not exact; endpoints are not roots
    UPoly defining;   // square-free; has exactly one root in (lo,hi)
};

std::vector<IsolatedRoot> isolate_upoly_roots(const UPoly& p);

} // namespace nracov

#endif
