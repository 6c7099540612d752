#include "nracov/polyops.hpp"

#include <deque>
#include <stdexcept>

namespace nracov {

std::optional<Polynomial> exact_div(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Polynomial::zero();
    Polynomial rem = a, quot;
    const auto& [lm, lc] = b.leading_term();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading_term();
        if (!lm.divides(rm)) return std::nullopt;
        Monomial qm = rm.divide(lm);
        Rational qc = rc / lc;
        Polynomial t;
        t.add_term(qm, qc);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

Polynomial pseudo_rem(const Polynomial& a, const Polynomial& b, Var x) {
    unsigned db = b.degree(x);
    assert(!b.is_zero() && db > 0);
    Polynomial r = a;
    if (r.degree(x) < db) return r;
    Polynomial lb = b.leading_coeff(x);
    long e = static_cast<long>(a.degree(x)) - static_cast<long>(db) + 1;
    while (!r.is_zero() && r.degree(x) >= db) {
        unsigned dr = r.degree(x);
        Polynomial lr = r.leading_coeff(x);
        r = r * lb - b * lr * Polynomial::variable(x).pow(dr - db);
        --e;
    }
    // Match the exact lc(b)^(da-db+1) pseudo-remainder definition.
    while (e-- > 0) r *= lb;
    return r;
}

Polynomial content(const Polynomial& p, Var x) {
    Polynomial c;
    for (const auto& coeff : p.coefficients(x)) {
        if (coeff.is_zero()) continue;
        c = poly_gcd(c, coeff);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c.is_zero() ? Polynomial::zero() : c;
}

Polynomial primitive_part(const Polynomial& p, Var x) {
    if (p.is_zero()) return p;
    Polynomial c = content(p, x);
    auto q = exact_div(p, c);
    assert(q);
    return *q;
}

namespace {

// PRS gcd of polynomials primitive w.r.t. x and of positive degree in x.
Polynomial prs_gcd(Polynomial a, Polynomial b, Var x) {
    if (a.degree(x) < b.degree(x)) std::swap(a, b);
    Polynomial g(1), h(1);
    while (true) {
        unsigned da = a.degree(x), db = b.degree(x);
        unsigned delta = da - db;
        Polynomial r = pseudo_rem(a, b, x);
        if (r.is_zero()) return primitive_part(b, x);
        if (r.degree(x) == 0 || !r.contains_var(x)) return Polynomial(1);
        a = b;
        Polynomial divisor = g * h.pow(delta);
        auto q = exact_div(r, divisor);
        assert(q);
        b = *q;
        g = a.leading_coeff(x);
        if (delta == 0) {
            // h unchanged when delta == 0 (h := h^{1-delta} g^delta = h)
        } else {
            auto nh = exact_div(g.pow(delta), h.pow(delta - 1));
            assert(nh);
            h = *nh;
        }
    }
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.is_zero() ? Polynomial::zero() : normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    if (a.is_constant() || b.is_constant()) return Polynomial(1);

    unsigned la = a.level(), lb = b.level();
    Var x(std::max(la, lb));
    if (la != lb) {
        // The lower-level one is x-free; common divisors divide the content.
        const Polynomial& lo = la < lb ? a : b;
        const Polynomial& hi = la < lb ? b : a;
        return poly_gcd(lo, content(hi, x));
    }
    Polynomial ca = content(a, x), cb = content(b, x);
    Polynomial c = poly_gcd(ca, cb);
    Polynomial pa = *exact_div(a, ca), pb = *exact_div(b, cb);
    Polynomial g = prs_gcd(pa, pb, x);
    return normalize_sign(c * g);
}

Polynomial normalize_sign(const Polynomial& p) {
    return normalize_sign_factor(p).first;
}

std::pair<Polynomial, Rational> normalize_sign_factor(const Polynomial& p) {
    if (p.is_zero()) return {p, Rational(1)};
    Integer den(1), num(0);
    for (auto& [m, c] : p.terms()) {
        Integer d = c.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    for (auto& [m, c] : p.terms()) {
        Integer n = c.get_num() * (den / c.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    }
    Rational f(den, num);
    f.canonicalize();
    if (p.leading_term().second < 0) f = -f;
    return {p * f, f};
}

namespace {

// Resultant via the subresultant PRS; a, b must have positive degree in x
// for the main loop. Handles degree-0 inputs by the power convention.
Polynomial resultant_impl(Polynomial a, Polynomial b, Var x) {
    unsigned da = a.degree(x), db = b.degree(x);
    if (a.is_zero() || b.is_zero()) return Polynomial::zero();
    if (da == 0 && db == 0) return Polynomial(1);
    if (da == 0) return a.pow(db);
    if (db == 0) return b.pow(da);

    int sign = 1;
    if (da < db) {
        std::swap(a, b);
        std::swap(da, db);
        if ((da & 1) && (db & 1)) sign = -sign;
    }
    // Pull out contents: res(c*A, B) = c^deg(B) res(A, B).
    Polynomial ca = content(a, x), cb = content(b, x);
    a = *exact_div(a, ca);
    b = *exact_div(b, cb);
    Polynomial t = ca.pow(db) * cb.pow(da);

    Polynomial g(1), h(1);
    while (true) {
        unsigned d1 = a.degree(x), d2 = b.degree(x);
        unsigned delta = d1 - d2;
        if ((d1 & 1) && (d2 & 1)) sign = -sign;
        Polynomial r = pseudo_rem(a, b, x);
        if (r.is_zero()) return Polynomial::zero();
        a = b;
        auto q = exact_div(r, g * h.pow(delta));
        assert(q);
        b = *q;
        g = a.leading_coeff(x);
        if (delta > 0) {
            auto nh = exact_div(g.pow(delta), h.pow(delta - 1));
            assert(nh);
            h = *nh;
        }
        if (b.degree(x) == 0) {
            unsigned d = a.degree(x);
            // res = h^{1-d} * b^d (b is x-free here)
            Polynomial res = b.pow(d);
            if (d > 1) {
                auto rr = exact_div(res, h.pow(d - 1));
                assert(rr);
                res = *rr;
            }
            res = res * t;
            return sign < 0 ? -res : res;
        }
    }
}

} // namespace

Polynomial resultant(const Polynomial& p, const Polynomial& q, Var x) {
    if (!p.contains_var(x) || !q.contains_var(x))
        throw std::invalid_argument("resultant: variable absent from an argument");
    return resultant_impl(p, q, x);
}

Polynomial resultant_u(const Polynomial& p, const Polynomial& q, Var x) {
    return resultant_impl(p, q, x);
}

Polynomial discriminant(const Polynomial& p, Var x) {
    unsigned d = p.degree(x);
    if (d == 0) throw std::invalid_argument("discriminant: variable absent");
    if (d == 1) return Polynomial(1);
    Polynomial dp = p.derivative(x);
    Polynomial r = resultant_impl(p, dp, x);
    auto q = exact_div(r, p.leading_coeff(x));
    assert(q);
    Polynomial res = *q;
    // disc = (-1)^{d(d-1)/2} res(p, p')/lc(p)
    if (((static_cast<unsigned long>(d) * (d - 1)) / 2) % 2 == 1) res = -res;
    return res;
}

namespace {

// Yun's algorithm w.r.t. the main variable of a primitive polynomial.
void yun_factors(const Polynomial& p, Var x, std::vector<Polynomial>& out) {
    Polynomial dp = p.derivative(x);
    Polynomial g = poly_gcd(p, dp);
    if (g.is_constant()) {
        out.push_back(p);
        return;
    }
    Polynomial c = *exact_div(p, g);
    Polynomial d = *exact_div(dp, g) - c.derivative(x);
    while (!c.is_constant()) {
        Polynomial a = poly_gcd(c, d);
        if (!a.is_constant()) out.push_back(a);
        c = *exact_div(c, a);
        d = *exact_div(d, a) - c.derivative(x);
    }
}

void squarefree_decompose(const Polynomial& p, std::vector<Polynomial>& out) {
    if (p.is_zero() || p.is_constant()) return;
    Var x = p.main_var();
    Polynomial c = content(p, x);
    Polynomial pp = *exact_div(p, c);
    squarefree_decompose(c, out);
    yun_factors(pp, x, out);
}

} // namespace

Polynomial squarefree_part(const Polynomial& p) {
    std::vector<Polynomial> fs;
    squarefree_decompose(p, fs);
    Polynomial r(1);
    for (auto& f : fs) r *= f;
    return normalize_sign(r);
}

std::vector<Polynomial> squarefree_factors(const Polynomial& p) {
    std::vector<Polynomial> fs;
    squarefree_decompose(p, fs);
    std::vector<Polynomial> out;
    for (auto& f : fs) {
        Polynomial n = normalize_sign(f);
        if (!n.is_constant()) out.push_back(n);
    }
    return out;
}

std::set<Polynomial> refine_basis(const std::set<Polynomial>& ps) {
    std::deque<Polynomial> queue;
    for (const auto& p : ps) {
        if (p.is_zero() || p.is_constant()) continue;
        for (auto& f : squarefree_factors(p)) queue.push_back(f);
    }
    std::vector<Polynomial> basis;
    while (!queue.empty()) {
        Polynomial f = queue.front();
        queue.pop_front();
        if (f.is_constant()) continue;
        for (size_t i = 0; i < basis.size() && !f.is_constant(); ++i) {
            Polynomial g = poly_gcd(f, basis[i]);
            if (g.is_constant()) continue;
            Polynomial b = basis[i];
            basis[i] = g;
            Polynomial rest = normalize_sign(*exact_div(b, g));
            if (!rest.is_constant()) basis.push_back(rest);
            f = normalize_sign(*exact_div(f, g));
        }
        if (!f.is_constant()) basis.push_back(f);
    }
    std::set<Polynomial> out;
    for (auto& b : basis) out.insert(normalize_sign(b));
    return out;
}

} // namespace nracov
