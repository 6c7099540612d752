#include "nracov/ran.hpp"

#include <sstream>

namespace nracov {

RealAlgebraicNumber RealAlgebraicNumber::algebraic(UPoly defining, Rational lo, Rational hi) {
    assert(!defining.is_zero() && defining.degree() >= 1);
    RealAlgebraicNumber r;
    r.rat_.reset();
    r.defining_ = defining.normalized();
    r.lo_ = std::move(lo);
    r.hi_ = std::move(hi);
    r.sign_lo_ = r.defining_.sign_at(r.lo_);
    assert(r.sign_lo_ != 0 && r.defining_.sign_at(r.hi_) != 0);
    assert(r.sign_lo_ != r.defining_.sign_at(r.hi_));
    if (r.defining_.degree() == 1) {
        Rational v = -r.defining_.coeff(0) / r.defining_.coeff(1);
        return RealAlgebraicNumber(v);
    }
    return r;
}

RealAlgebraicNumber RealAlgebraicNumber::from_isolated(const IsolatedRoot& r) {
    if (r.exact) return RealAlgebraicNumber(r.value);
    return algebraic(r.defining, r.lo, r.hi);
}

void RealAlgebraicNumber::refine() {
    if (is_rational()) return;
    Rational m = (lo_ + hi_) / 2;
    int s = defining_.sign_at(m);
    if (s == 0) {
        rat_ = m;
        return;
    }
    if (s == sign_lo_)
        lo_ = m;
    else
        hi_ = m;
}

void RealAlgebraicNumber::refine_below(const Rational& width) {
    while (!is_rational() && hi_ - lo_ >= width) refine();
}

int RealAlgebraicNumber::sign() const {
    if (is_rational()) return sign_of(*rat_);
    RealAlgebraicNumber c = *this;
    while (true) {
        if (c.is_rational()) return sign_of(*c.rat_);
        if (c.lo_ >= 0) return 1;
        if (c.hi_ <= 0) return -1;
        if (c.defining_.sign_at(Rational(0)) == 0) return 0;  // value is 0 iff 0 is the isolated root
        c.refine();
    }
}

double RealAlgebraicNumber::approx() const {
    if (is_rational()) return rat_->get_d();
    RealAlgebraicNumber c = *this;
    c.refine_below(Rational(1, 1 << 20));
    Rational mid = (c.lower() + c.upper()) / 2;
    return mid.get_d();
}

std::string RealAlgebraicNumber::str() const {
    if (is_rational()) return rational_str(*rat_);
    std::ostringstream os;
    os << "<" << defining_.str() << " in (" << rational_str(lo_) << "," << rational_str(hi_) << ")>";
    return os.str();
}

bool is_root_of(const UPoly& g, const RAN& a) {
    if (g.is_zero()) return true;
    if (a.is_rational()) return g.eval(a.rational_value()) == 0;
    UPoly h = UPoly::gcd(g, a.defining());
    if (h.degree() == 0) return false;
    // h divides the defining polynomial, so h has at most one root in the
    // isolating interval and the endpoints are not roots of h.
    return h.sign_at(a.lower()) != h.sign_at(a.upper());
}

int compare(const RAN& a, const Rational& b) {
    if (a.is_rational()) return cmp(a.rational_value(), b);
    if (b <= a.lower()) return 1;
    if (b >= a.upper()) return -1;
    if (a.defining().eval(b) == 0) return 0;  // b is the isolated root
    RAN c = a;
    while (c.lower() < b && b < c.upper()) {
        c.refine();
        if (c.is_rational()) return cmp(c.rational_value(), b);
    }
    return b <= c.lower() ? 1 : -1;
}

int compare(const RAN& a, const RAN& b) {
    if (b.is_rational()) return compare(a, b.rational_value());
    if (a.is_rational()) return -compare(b, a.rational_value());
    RAN x = a, y = b;
    UPoly h = UPoly::gcd(x.defining(), y.defining());
    if (h.degree() >= 1) {
        Rational lo = std::max(x.lower(), y.lower());
        Rational hi = std::min(x.upper(), y.upper());
        if (lo < hi) {
            // Any root of h in the overlap is simultaneously the isolated
            // root of both defining polynomials.
            if (h.sign_at(lo) != h.sign_at(hi)) return 0;
        }
    }
    while (true) {
        if (x.upper() <= y.lower()) return -1;
        if (y.upper() <= x.lower()) return 1;
        x.refine();
        y.refine();
        if (x.is_rational()) return -compare(y, x.rational_value());
        if (y.is_rational()) return compare(x, y.rational_value());
    }
}

Integer ran_floor(const RAN& a) {
    if (a.is_rational()) return rat_floor(a.rational_value());
    RAN c = a;
    while (true) {
        Integer fl = rat_floor(c.lower());
        if (compare(c, Rational(fl)) >= 0 && compare(c, Rational(fl + 1)) < 0) return fl;
        Integer fh = rat_floor(c.upper());
        if (compare(c, Rational(fh)) >= 0 && compare(c, Rational(fh + 1)) < 0) return fh;
        c.refine();
        if (c.is_rational()) return rat_floor(c.rational_value());
    }
}

Integer ran_ceil(const RAN& a) {
    Integer f = ran_floor(a);
    return compare(a, Rational(f)) == 0 ? f : f + 1;
}

std::string SamplePoint::str() const {
    std::string s = "(";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ", ";
        s += coords_[i].str();
    }
    return s + ")";
}

} // namespace nracov
