#include "nracov/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nracov {

UPoly UPoly::from_poly(const Polynomial& p) {
    if (p.is_zero()) return UPoly();
    unsigned lvl = p.level();
    if (lvl == 0) return UPoly({p.constant_value()});
    Var v(lvl);
    std::vector<Rational> cs(p.degree(v) + 1, Rational(0));
    for (auto& [m, c] : p.terms()) {
        assert(m.level() == 0 || (m.level() == lvl && m.deg(v) == m.total_degree()));
        cs[m.deg(v)] = c;
    }
    return UPoly(std::move(cs));
}

Polynomial UPoly::to_poly(Var v) const {
    Polynomial p;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        p.add_term(i == 0 ? Monomial::one() : Monomial::var(v, static_cast<uint32_t>(i)), coeffs_[i]);
    }
    return p;
}

Rational UPoly::eval(const Rational& x) const {
    Rational r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

UPoly UPoly::derivative() const {
    if (coeffs_.size() <= 1) return UPoly();
    std::vector<Rational> cs(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) cs[i - 1] = coeffs_[i] * static_cast<long>(i);
    return UPoly(std::move(cs));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rational> cs(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) cs[i + j] += coeffs_[i] * o.coeffs_[j];
    return UPoly(std::move(cs));
}

UPoly UPoly::operator-(const UPoly& o) const {
    std::vector<Rational> cs(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) cs[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) cs[i] -= o.coeffs_[i];
    return UPoly(std::move(cs));
}

UPoly UPoly::neg_x() const {
    std::vector<Rational> cs = coeffs_;
    for (size_t i = 1; i < cs.size(); i += 2) cs[i] = -cs[i];
    return UPoly(std::move(cs));
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& d) const {
    assert(!d.is_zero());
    std::vector<Rational> rem = coeffs_;
    size_t m = d.coeffs_.size();
    if (rem.size() < m) return {UPoly(), *this};
    std::vector<Rational> quot(rem.size() - m + 1, Rational(0));
    for (size_t qi = quot.size(); qi-- > 0;) {
        Rational f = rem[qi + m - 1] / d.lc();
        if (f == 0) continue;
        quot[qi] = f;
        for (size_t j = 0; j < m; ++j) rem[qi + j] -= f * d.coeffs_[j];
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    // monic
    std::vector<Rational> cs = a.coeffs_;
    Rational l = a.lc();
    for (auto& c : cs) c /= l;
    return UPoly(std::move(cs));
}

UPoly UPoly::squarefree_part() const {
    if (degree() <= 1) return normalized();
    UPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return normalized();
    return divrem(g).first.normalized();
}

UPoly UPoly::deflate_root(const Rational& r) const {
    assert(eval(r) == 0);
    // synthetic division by (x - r)
    std::vector<Rational> q(coeffs_.size() - 1, Rational(0));
    Rational carry(0);
    for (size_t i = coeffs_.size(); i-- > 1;) {
        carry = coeffs_[i] + carry * r;
        q[i - 1] = carry;
    }
    return UPoly(std::move(q));
}

UPoly UPoly::normalized() const {
    if (is_zero()) return *this;
    Integer den(1), num(0);
    for (auto& c : coeffs_) {
        Integer d = c.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    for (auto& c : coeffs_) {
        Integer n = c.get_num() * (den / c.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    }
    Rational f(den, num);
    f.canonicalize();
    if (lc() < 0) f = -f;
    std::vector<Rational> cs = coeffs_;
    for (auto& c : cs) {
        c *= f;
        c.canonicalize();
    }
    return UPoly(std::move(cs));
}

std::string UPoly::str() const { return to_poly(Var(1)).str(); }

// ---------------------------------------------------------------------------
// Root isolation (Descartes / Vincent-Collins-Akritas bisection)

namespace {

using ZPoly = std::vector<Integer>;  // index = degree

ZPoly to_zpoly(const UPoly& p) {
    UPoly n = p.normalized();
    ZPoly z(n.coeffs().size());
    for (size_t i = 0; i < z.size(); ++i) {
        assert(is_integer(n.coeff(static_cast<unsigned>(i))));
        z[i] = n.coeff(static_cast<unsigned>(i)).get_num();
    }
    return z;
}

int zsign(const Integer& v) { return sgn(v); }

Integer zeval_int(const ZPoly& p, long x) {
    Integer r(0);
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

// sum of coefficients = p(1)
Integer zeval_one(const ZPoly& p) {
    Integer r(0);
    for (auto& c : p) r += c;
    return r;
}

int sign_variations(const ZPoly& p) {
    int v = 0, last = 0;
    for (auto& c : p) {
        int s = zsign(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// p(x+1), in place
void taylor_shift1(ZPoly& p) {
    if (p.size() < 2) return;
    for (size_t k = 0; k + 1 < p.size(); ++k)
        for (size_t j = p.size() - 1; j-- > k;) p[j] += p[j + 1];
}

// Descartes test for roots in (0,1): variations of (1+t)^n p(1/(1+t)).
int descartes01(const ZPoly& p) {
    ZPoly r(p.rbegin(), p.rend());
    taylor_shift1(r);
    return sign_variations(r);
}

// 2^n p(x/2)
ZPoly half_scale(const ZPoly& p) {
    ZPoly r = p;
    size_t n = p.size() - 1;
    Integer pow(1);
    for (size_t i = n + 1; i-- > 0;) {
        r[i] *= pow;
        pow <<= 1;
    }
    return r;
}

struct MidpointRoot {
    Rational value;
};

void isolate01(const ZPoly& g, const Rational& a, const Rational& b,
               std::vector<std::pair<Rational, Rational>>& out, int depth) {
    if (depth > 4096) throw std::runtime_error("root isolation: excessive bisection depth");
    int v = descartes01(g);
    if (v == 0) return;
    if (v == 1) {
        out.emplace_back(a, b);
        return;
    }
    Rational m = (a + b) / 2;
    ZPoly g0 = half_scale(g);
    if (zeval_one(g0) == 0) throw MidpointRoot{m};
    ZPoly g1 = g0;
    taylor_shift1(g1);
    isolate01(g0, a, m, out, depth + 1);
    isolate01(g1, m, b, out, depth + 1);
}

// Divisors of |n| from a bounded trial-division factorization; best effort
// (may be incomplete when n has two prime factors beyond the bound).
std::vector<Integer> bounded_divisors(Integer n) {
    std::vector<std::pair<Integer, unsigned>> fact;
    n = abs(n);
    if (n == 0) return {};
    auto add = [&](const Integer& p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) fact.emplace_back(p, e);
    };
    add(Integer(2));
    for (Integer d(3); d * d <= n && d < 1000000; d += 2) add(d);
    if (n > 1) fact.emplace_back(n, 1);
    std::vector<Integer> divs{Integer(1)};
    for (auto& [p, e] : fact) {
        size_t base = divs.size();
        Integer pk(1);
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) {
                divs.push_back(divs[i] * pk);
                if (divs.size() > 2048) return divs;  // cap; detection stays best effort
            }
        }
    }
    return divs;
}

// All rational roots we can find cheaply; exact but possibly incomplete for
// huge coefficients (missed roots simply stay in algebraic form).
std::vector<Rational> rational_roots(UPoly& q) {
    std::vector<Rational> roots;
    // x = 0
    while (!q.is_zero() && q.coeff(0) == 0) {
        // q is square-free so this happens at most once
        std::vector<Rational> cs(q.coeffs().begin() + 1, q.coeffs().end());
        q = UPoly(std::move(cs));
        roots.push_back(Rational(0));
    }
    if (q.degree() == 0) return roots;
    if (q.degree() == 1) {
        roots.push_back(-q.coeff(0) / q.coeff(1));
        q = UPoly({Rational(1)});
        return roots;
    }
    ZPoly z = to_zpoly(q);
    auto nums = bounded_divisors(z.front());
    auto dens = bounded_divisors(z.back());
    for (auto& nu : nums) {
        for (auto& de : dens) {
            for (int s : {1, -1}) {
                Rational cand(s * nu, de);
                cand.canonicalize();
                if (q.is_zero() || q.degree() == 0) return roots;
                if (q.eval(cand) == 0) {
                    roots.push_back(cand);
                    q = q.deflate_root(cand);
                    if (q.degree() == 1) {
                        roots.push_back(-q.coeff(0) / q.coeff(1));
                        q = UPoly({Rational(1)});
                        return roots;
                    }
                }
            }
        }
    }
    return roots;
}

} // namespace

std::vector<IsolatedRoot> isolate_upoly_roots(const UPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_upoly_roots: zero polynomial");
    UPoly q = p.squarefree_part();
    std::vector<IsolatedRoot> out;
    if (q.degree() == 0) return out;

    std::vector<Rational> exact = rational_roots(q);

    std::vector<std::pair<Rational, Rational>> intervals;
    while (q.degree() >= 1) {
        if (q.degree() == 1) {
            exact.push_back(-q.coeff(0) / q.coeff(1));
            break;
        }
        ZPoly z = to_zpoly(q);
        // Cauchy bound, rounded up to a power of two
        Rational maxr(0);
        for (size_t i = 0; i + 1 < z.size(); ++i) {
            Rational r(abs(z[i]), abs(z.back()));
            r.canonicalize();
            maxr = std::max(maxr, r);
        }
        Rational bound = maxr + 1;
        Integer b2(1);
        while (Rational(b2) < bound) b2 <<= 1;

        // scale to (0,1): q(B*x) for the positive side, q(-B*x) for negative
        try {
            intervals.clear();
            ZPoly pos(z), neg(z);
            Integer pw(1);
            for (size_t i = 0; i < z.size(); ++i) {
                pos[i] *= pw;
                neg[i] *= pw;
                if (i % 2 == 1) neg[i] = -neg[i];
                pw *= b2;
            }
            std::vector<std::pair<Rational, Rational>> tmp;
            isolate01(neg, Rational(0), Rational(1), tmp, 0);
            // map (a,b) in (0,1) to (-B*b, -B*a)
            for (auto it = tmp.rbegin(); it != tmp.rend(); ++it)
                intervals.emplace_back(-Rational(b2) * it->second, -Rational(b2) * it->first);
            tmp.clear();
            isolate01(pos, Rational(0), Rational(1), tmp, 0);
            for (auto& [a, b] : tmp) intervals.emplace_back(Rational(b2) * a, Rational(b2) * b);
            break;
        } catch (const MidpointRoot& mr) {
            // exact root discovered at a bisection midpoint (scaled back)
            Rational r = mr.value;
            // mr.value is in the transformed (0,1) coordinates of one side; we
            // cannot tell which, so test both candidates.
            Rational c1 = Rational(b2) * r, c2 = -Rational(b2) * r;
            if (q.eval(c1) == 0) {
                exact.push_back(c1);
                q = q.deflate_root(c1);
            } else {
                assert(q.eval(c2) == 0);
                exact.push_back(c2);
                q = q.deflate_root(c2);
            }
            continue;
        }
    }

    // assemble & sort
    for (auto& r : exact) {
        IsolatedRoot ir;
        ir.exact = true;
        ir.value = r;
        out.push_back(std::move(ir));
    }
    for (auto& [a, b] : intervals) {
        IsolatedRoot ir;
        ir.exact = false;
        ir.lo = a;
        ir.hi = b;
        ir.defining = q;
        assert(q.sign_at(a) != 0 && q.sign_at(b) != 0);
        out.push_back(std::move(ir));
    }
    auto root_less = [](const IsolatedRoot& x, const IsolatedRoot& y) {
        auto upper = [](const IsolatedRoot& r) { return r.exact ? r.value : r.hi; };
        auto lower = [](const IsolatedRoot& r) { return r.exact ? r.value : r.lo; };
        if (x.exact && y.exact) return x.value < y.value;
        if (x.exact) {
            // x.value vs algebraic root in (y.lo, y.hi)
            if (x.value <= y.lo) return true;
            if (x.value >= y.hi) return false;
            return y.defining.sign_at(y.lo) == y.defining.sign_at(x.value);  // root above x.value
        }
        if (y.exact) {
            if (y.value <= x.lo) return false;
            if (y.value >= x.hi) return true;
            return x.defining.sign_at(x.lo) != x.defining.sign_at(y.value);  // root below y.value
        }
        // intervals of the same square-free polynomial are disjoint
        return upper(x) <= lower(y) || x.lo < y.lo;
    };
    std::sort(out.begin(), out.end(), root_less);
    return out;
}

} // namespace nracov
