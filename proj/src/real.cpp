#include "nracov/real.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nracov {

namespace {

struct QInterval {
    Rational lo, hi;

    static QInterval point(const Rational& r) { return {r, r}; }

    QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    QInterval operator*(const QInterval& o) const {
        Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
    }
    QInterval pow(unsigned e) const {
        QInterval r = point(Rational(1));
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }
    bool sign_definite() const { return lo > 0 || hi < 0; }
    int sign() const { return lo > 0 ? 1 : -1; }
};

// Splits the sample into exact rational substitutions and algebraic coords.
struct SplitSample {
    std::map<unsigned, Rational> rationals;
    std::vector<std::pair<unsigned, RAN>> algebraics;  // var index, value
};

SplitSample split_sample(const SamplePoint& s) {
    SplitSample out;
    for (unsigned i = 1; i <= s.level(); ++i) {
        const RAN& c = s.coord(i);
        if (c.is_rational())
            out.rationals.emplace(i, c.rational_value());
        else
            out.algebraics.emplace_back(i, c);
    }
    return out;
}

QInterval eval_box(const Polynomial& p, const std::map<unsigned, QInterval>& box) {
    QInterval out = QInterval::point(Rational(0));
    for (auto& [m, c] : p.terms()) {
        QInterval t = QInterval::point(c);
        const auto& es = m.exponents();
        for (size_t i = 0; i < es.size(); ++i) {
            if (es[i] == 0) continue;
            t = t * box.at(static_cast<unsigned>(i + 1)).pow(es[i]);
        }
        out = out + t;
    }
    return out;
}

// Chain-eliminates a fresh variable z = p over the algebraic coordinates;
// the result is a nonzero univariate polynomial in z with p(s) among its
// roots. Never degenerates because z - p is monic in z and the defining
// polynomials have constant leading coefficients.
UPoly value_polynomial(const Polynomial& p, const std::vector<std::pair<unsigned, RAN>>& algs) {
    unsigned zidx = p.level() + 1;
    for (auto& [vi, a] : algs) zidx = std::max(zidx, vi + 1);
    Var z(zidx);
    Polynomial r = Polynomial::variable(z) - p;
    for (auto& [vi, a] : algs) {
        Var v(vi);
        if (!r.contains_var(v)) continue;
        Polynomial d = a.defining().to_poly(v);
        r = resultant_u(r, d, v);
        assert(!r.is_zero());
    }
    assert(r.level() == zidx || r.is_constant());
    // Remap z down to x1 for the univariate view.
    std::vector<unsigned> remap(zidx + 1, 0);
    remap[zidx] = 1;
    return UPoly::from_poly(r.remapped(remap));
}

} // namespace

Sign sign_at(const Polynomial& p, const SamplePoint& s) {
    assert(p.level() <= s.level());
    SplitSample sp = split_sample(s);
    Polynomial p1 = p.substitute(sp.rationals);
    if (p1.is_constant()) return sign_from_int(sign_of(p1.constant_value()));

    // Working copies of the algebraic coordinates that p1 actually uses.
    std::vector<std::pair<unsigned, RAN>> algs;
    for (auto& [vi, a] : sp.algebraics)
        if (p1.contains_var(Var(vi))) algs.emplace_back(vi, a);
    assert(!algs.empty());

    auto box_of = [&]() {
        std::map<unsigned, QInterval> box;
        for (auto& [vi, a] : algs) box.emplace(vi, QInterval{a.lower(), a.upper()});
        return box;
    };
    auto refine_all = [&]() {
        for (auto& [vi, a] : algs) a.refine();
    };

    for (int round = 0; round < 8; ++round) {
        QInterval v = eval_box(p1, box_of());
        if (v.sign_definite()) return sign_from_int(v.sign());
        refine_all();
    }

    UPoly R = value_polynomial(p1, algs).squarefree_part();
    if (R.eval(Rational(0)) != 0) {
        // The value is a nonzero root of R; refinement must separate it.
        while (true) {
            QInterval v = eval_box(p1, box_of());
            if (v.sign_definite()) return sign_from_int(v.sign());
            refine_all();
        }
    }
    UPoly Rhat = R.deflate_root(Rational(0));
    Rational delta(0);
    if (Rhat.degree() >= 1) {
        for (auto& root : isolate_upoly_roots(Rhat)) {
            RAN r = RAN::from_isolated(root);
            while (!r.is_rational() && !(r.lower() > 0 || r.upper() < 0)) r.refine();
            Rational d = r.is_rational() ? rat_abs(r.rational_value())
                                         : (r.lower() > 0 ? r.lower() : -r.upper());
            assert(d > 0);
            if (delta == 0 || d < delta) delta = d;
        }
    }
    while (true) {
        QInterval v = eval_box(p1, box_of());
        if (v.sign_definite()) return sign_from_int(v.sign());
        if (delta == 0 || (v.lo > -delta && v.hi < delta)) return Sign::Zero;
        refine_all();
    }
}

std::vector<RAN> isolate_real_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    if (p.is_constant()) throw std::invalid_argument("isolate_real_roots: constant polynomial");
    assert(p.level() >= 1);
    std::vector<RAN> out;
    for (auto& r : isolate_upoly_roots(UPoly::from_poly(p))) out.push_back(RAN::from_isolated(r));
    return out;
}

std::optional<std::vector<RAN>> isolate_roots_at(const Polynomial& p, const SamplePoint& s) {
    unsigned i = p.level();
    assert(i == s.level() + 1);
    Var xi(i);
    SplitSample sp = split_sample(s);
    Polynomial p1 = p.substitute(sp.rationals);

    std::vector<std::pair<unsigned, RAN>> algs;
    for (auto& [vi, a] : sp.algebraics)
        if (p1.contains_var(Var(vi))) algs.emplace_back(vi, a);

    if (algs.empty()) {
        if (p1.is_zero()) return std::nullopt;
        if (p1.is_constant()) return std::vector<RAN>{};
        return isolate_real_roots(p1);
    }

    // Nullification: every coefficient of x_i vanishes at s.
    bool all_zero = true;
    for (auto& c : p1.coefficients(xi)) {
        if (c.is_zero()) continue;
        if (sign_at(c, s) != Sign::Zero) {
            all_zero = false;
            break;
        }
    }
    if (all_zero) return std::nullopt;

    // Candidate polynomial by triangular elimination; try coordinate
    // permutations if an elimination order degenerates.
    std::vector<size_t> perm(algs.size());
    for (size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    std::optional<Polynomial> elim;
    do {
        Polynomial r = p1;
        bool ok = true;
        for (size_t k : perm) {
            Var v(algs[k].first);
            const RAN& a = algs[k].second;
            if (!r.contains_var(v)) continue;
            Polynomial d = a.defining().to_poly(v);
            while (true) {
                Polynomial res = resultant_u(r, d, v);
                if (!res.is_zero()) {
                    r = res;
                    break;
                }
                Polynomial g = poly_gcd(r, d);
                assert(!g.is_constant());
                if (is_root_of(UPoly::from_poly(g), a)) {
                    ok = false;  // substituting a annihilates r
                    break;
                }
                auto rest = exact_div(d, g);
                assert(rest);
                d = *rest;
                if (!d.contains_var(v)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) {
            elim = r;
            break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!elim)
        throw std::runtime_error("isolate_roots_at: degenerate algebraic sample point");

    std::vector<RAN> out;
    if (elim->is_constant()) return out;  // no real roots
    for (auto& cand : isolate_real_roots(*elim)) {
        if (sign_at(p, s.extended(cand)) == Sign::Zero) out.push_back(cand);
    }
    return out;
}

EvalPartial eval_partial(const Polynomial& p, const SamplePoint& s) {
    unsigned j = s.level();
    if (j >= p.level()) return {EvalPartial::Tag::Sig, Polynomial(), sign_at(p, s)};
    SplitSample sp = split_sample(s);
    Polynomial p1 = p.substitute(sp.rationals);
    bool has_alg = false;
    for (auto& [vi, a] : sp.algebraics)
        if (p1.contains_var(Var(vi))) has_alg = true;
    if (!has_alg) {
        if (p1.is_zero()) return {EvalPartial::Tag::Nullified, Polynomial(), Sign::Zero};
        return {EvalPartial::Tag::Poly, p1, Sign::Zero};
    }
    // Group by the part of each monomial above level j and test whether all
    // coefficients vanish.
    std::map<Monomial, Polynomial> groups;
    for (auto& [m, c] : p1.terms()) {
        std::vector<uint32_t> up(m.exponents()), down(m.exponents());
        for (size_t k = 0; k < up.size(); ++k) {
            if (k < j)
                up[k] = 0;
            else
                down[k] = 0;
        }
        groups[Monomial(up)].add_term(Monomial(down), c);
    }
    for (auto& [um, coeff] : groups) {
        if (sign_at(coeff, s) != Sign::Zero)
            return {EvalPartial::Tag::NonRational, Polynomial(), Sign::Zero};
    }
    return {EvalPartial::Tag::Nullified, Polynomial(), Sign::Zero};
}

std::string Bound::str() const {
    switch (kind) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "+inf";
        default: return value.str();
    }
}

int bound_cmp(const Bound& a, const Bound& b) {
    if (a.kind == Bound::Kind::NegInf) return b.kind == Bound::Kind::NegInf ? 0 : -1;
    if (a.kind == Bound::Kind::PosInf) return b.kind == Bound::Kind::PosInf ? 0 : 1;
    if (b.kind == Bound::Kind::NegInf) return 1;
    if (b.kind == Bound::Kind::PosInf) return -1;
    return compare(a.value, b.value);
}

int bound_cmp_value(const Bound& a, const RAN& v) {
    if (a.kind == Bound::Kind::NegInf) return -1;
    if (a.kind == Bound::Kind::PosInf) return 1;
    return compare(a.value, v);
}

bool RInterval::contains(const RAN& v) const {
    if (section) return compare(lo.value, v) == 0;
    return bound_cmp_value(lo, v) < 0 && bound_cmp_value(hi, v) > 0;
}

bool RInterval::subset_of(const RInterval& o) const {
    if (o.section) return section && compare(lo.value, o.lo.value) == 0;
    if (section) return o.contains(lo.value);
    return bound_cmp(o.lo, lo) <= 0 && bound_cmp(hi, o.hi) <= 0;
}

std::string RInterval::str() const {
    if (section) return "[" + lo.value.str() + "]";
    return "(" + lo.str() + ", " + hi.str() + ")";
}

Rational pick_value_in(const Bound& lo, const Bound& hi) {
    if (bound_cmp(lo, hi) >= 0) throw std::invalid_argument("pick_value_in: empty range");
    RAN zero(0);
    if (bound_cmp_value(lo, zero) < 0 && bound_cmp_value(hi, zero) > 0) return Rational(0);

    if (lo.kind == Bound::Kind::NegInf) {
        // hi <= 0 here; the largest integer strictly below hi
        Integer n = ran_floor(hi.value);
        if (compare(hi.value, Rational(n)) == 0) n -= 1;
        return Rational(n);
    }
    if (hi.kind == Bound::Kind::PosInf) {
        Integer n = ran_ceil(lo.value);
        if (compare(lo.value, Rational(n)) == 0) n += 1;
        return Rational(n);
    }
    // smallest integer > lo and largest integer < hi
    Integer n0 = ran_floor(lo.value) + 1;
    if (compare(lo.value, Rational(n0)) >= 0) n0 += 1;
    Integer n1 = ran_ceil(hi.value) - 1;
    if (compare(hi.value, Rational(n1)) <= 0) n1 -= 1;
    if (n0 <= n1) {
        if (n0 > 0) return Rational(n0);
        if (n1 < 0) return Rational(n1);
        return Rational(0);  // unreachable: 0 handled above
    }
    // Stern-Brocot walk inside a unit interval
    Integer base = ran_floor(lo.value);
    Integer an = base, ad = 1, bn = base + 1, bd = 1;
    while (true) {
        Integer mn = an + bn, md = ad + bd;
        Rational m(mn, md);
        m.canonicalize();
        if (compare(lo.value, m) >= 0) {
            an = mn;
            ad = md;
        } else if (compare(hi.value, m) <= 0) {
            bn = mn;
            bd = md;
        } else {
            return m;
        }
    }
}

} // namespace nracov
