#include <doctest.h>

#include "helpers.hpp"
#include "nracov/polyops.hpp"
#include "nracov/real.hpp"
#include "oracles.hpp"

using namespace nracov;
using namespace nracov::testing;

namespace {
Polynomial x1 = pvar(1);
Polynomial x2 = pvar(2);

bool proportional(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return normalize_sign(a) == normalize_sign(b);
}
} // namespace

TEST_CASE("level and degree") {
    CHECK(level_and_degree(pconst(7), Var(1)) == std::pair<unsigned, unsigned>{0, 0});
    Polynomial p = x1 * x1 * x2 - pconst(1);
    CHECK(level_and_degree(p, Var(1)) == std::pair<unsigned, unsigned>{2, 2});
    Polynomial q = x1 * x1 + x2 * x2 - pconst(2);
    CHECK(level_and_degree(q, Var(2)) == std::pair<unsigned, unsigned>{2, 2});
}

TEST_CASE("eval_partial basics") {
    SamplePoint s0(std::vector<RAN>{RAN(0)});
    auto r = eval_partial(x1 * x2, s0);
    CHECK(r.tag == EvalPartial::Tag::Nullified);

    auto r2 = eval_partial(x1 * x1 + x2 * x2 - pconst(2), s0);
    REQUIRE(r2.tag == EvalPartial::Tag::Poly);
    CHECK(r2.poly == x2 * x2 - pconst(2));

    SamplePoint s15(std::vector<RAN>{RAN(1), RAN(5)});
    auto r3 = eval_partial(x1 - pconst(1), s15);
    REQUIRE(r3.tag == EvalPartial::Tag::Sig);
    CHECK(r3.sign == Sign::Zero);
}

TEST_CASE("resultant examples") {
    Polynomial y = pvar(1);
    CHECK(resultant(y - pconst(1), y + pconst(1), Var(1)) == pconst(2));

    Polynomial circle = x1 * x1 + x2 * x2 - pconst(2);
    Polynomial line = x2 + pconst(1);
    Polynomial r = resultant(circle, line, Var(2));
    CHECK(proportional(r, x1 * x1 - pconst(1)));

    // the two parabolas from the running 2-variable example
    Polynomial p1 = x2 - pconst(Rational(7, 2)) + pconst(2) * (x1 - pconst(4)).pow(2);
    Polynomial p3 = x2 - pconst(3) - pconst(Rational(1, 4)) * (x1 - pconst(4)).pow(2);
    Polynomial res = resultant(p1, p3, Var(2));
    auto roots = isolate_real_roots(res);
    REQUIRE(roots.size() == 2);
    // exact endpoints 4 +- sqrt(2)/3, i.e. roots of 9x^2-72x+142
    Polynomial target = pconst(9) * x1 * x1 - pconst(72) * x1 + pconst(142);
    CHECK(sign_at(target, SamplePoint({roots[0]})) == Sign::Zero);
    CHECK(sign_at(target, SamplePoint({roots[1]})) == Sign::Zero);
}

TEST_CASE("resultant errors") {
    CHECK_THROWS(resultant(x1, x2, Var(2)));
    CHECK_THROWS(resultant(pconst(3), x1, Var(1)));
}

TEST_CASE("discriminant examples") {
    // a*x3^2 + b*x3 + c with a=x1, b=x2, c=1
    Polynomial x3 = pvar(3);
    Polynomial p = x1 * x3 * x3 + x2 * x3 + pconst(1);
    Polynomial d = discriminant(p, Var(3));
    CHECK(proportional(d, x2 * x2 - pconst(4) * x1));

    CHECK(discriminant(x1 * x1 - pconst(2), Var(1)) == pconst(8));

    Polynomial circ = (x1 - pconst(2)).pow(2) + (x2 - pconst(2)).pow(2) - pconst(1);
    Polynomial dc = discriminant(circ, Var(2));
    auto roots = isolate_real_roots(dc);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == RAN(1));
    CHECK(roots[1] == RAN(3));

    CHECK(discriminant(x2 + x1 * x1, Var(2)) == pconst(1));  // degree-1 convention
    CHECK_THROWS(discriminant(x1, Var(2)));
}

TEST_CASE("coefficients and derivative") {
    Polynomial p = x2 * x2 + (x1 * x1 - pconst(2));
    auto cs = p.coefficients(Var(2));
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == pconst(1));
    CHECK(cs[1].is_zero());
    CHECK(cs[2] == x1 * x1 - pconst(2));

    auto cs2 = (x1 * x2 + pconst(1)).coefficients(Var(2));
    REQUIRE(cs2.size() == 2);
    CHECK(cs2[0] == x1);
    CHECK(cs2[1] == pconst(1));

    auto cs3 = pconst(5).coefficients(Var(1));
    REQUIRE(cs3.size() == 1);
    CHECK(cs3[0] == pconst(5));

    CHECK((x2 * x2 - pconst(2)).derivative(Var(2)) == pconst(2) * x2);
    CHECK((x1 * x2).derivative(Var(1)) == x2);
    CHECK(pconst(7).derivative(Var(1)).is_zero());
}

TEST_CASE("refine_basis examples") {
    auto b1 = refine_basis({x1 * x1 - pconst(2) * x1 + pconst(1)});
    REQUIRE(b1.size() == 1);
    CHECK(*b1.begin() == x1 - pconst(1));

    auto b2 = refine_basis({x1 * x1 - pconst(1), x1 - pconst(1)});
    REQUIRE(b2.size() == 2);
    CHECK(b2.count(x1 - pconst(1)) == 1);
    CHECK(b2.count(x1 + pconst(1)) == 1);

    std::set<Polynomial> ps{x2 + pconst(1), x1 * x1 + x2 * x2 - pconst(2), x1 - pconst(1)};
    auto b3 = refine_basis(ps);
    CHECK(b3 == ps);
}

TEST_CASE("resultant matches Sylvester oracle") {
    std::mt19937_64 rng(20240901);
    for (int it = 0; it < 300; ++it) {
        Polynomial p = random_nonconst_poly(rng, 2, 3, 4);
        Polynomial q = random_nonconst_poly(rng, 2, 3, 4);
        Var x(2);
        if (p.degree(x) == 0 || q.degree(x) == 0) continue;
        Polynomial prs = resultant(p, q, x);
        Polynomial syl = sylvester_resultant(p, q, x);
        CHECK(prs == syl);
    }
}

TEST_CASE("resultant symmetry up to sign") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 200; ++it) {
        Polynomial p = random_nonconst_poly(rng, 2, 3, 4);
        Polynomial q = random_nonconst_poly(rng, 2, 3, 4);
        Var x(2);
        if (p.degree(x) == 0 || q.degree(x) == 0) continue;
        Polynomial a = resultant(p, q, x);
        Polynomial b = resultant(q, p, x);
        CHECK((a == b || a == -b));
    }
}

TEST_CASE("resultant root property at rational points") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 10);
    int checked = 0;
    for (int it = 0; checked < 100 && it < 1200; ++it) {
        Polynomial p = random_nonconst_poly(rng, 2, 3, 3);
        Polynomial q = random_nonconst_poly(rng, 2, 3, 3);
        Var x(2);
        if (p.degree(x) == 0 || q.degree(x) == 0) continue;
        Polynomial res = resultant(p, q, x);
        Rational r(num(rng), den(rng));
        r.canonicalize();
        std::map<unsigned, Rational> sub{{1, r}};
        Polynomial pr = p.substitute(sub), qr = q.substitute(sub);
        Polynomial resr = res.substitute(sub);
        bool res_vanishes = resr.is_zero() || (resr.is_constant() && resr.constant_value() == 0);

        bool lead_both_vanish =
            p.leading_coeff(x).substitute(sub).constant_value() == 0 &&
            q.leading_coeff(x).substitute(sub).constant_value() == 0;
        bool gcd_nonconst;
        if (pr.is_zero())
            gcd_nonconst = !qr.is_constant() || qr.is_zero();
        else if (qr.is_zero())
            gcd_nonconst = !pr.is_constant();
        else if (pr.is_constant() || qr.is_constant())
            gcd_nonconst = false;
        else
            gcd_nonconst = !poly_gcd(pr, qr).is_constant();
        CHECK(res_vanishes == (gcd_nonconst || lead_both_vanish));
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("refine_basis properties") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 120; ++it) {
        std::set<Polynomial> ps;
        int k = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) ps.insert(random_nonconst_poly(rng, 2, 2, 3));
        auto basis = refine_basis(ps);
        // pairwise coprime + square-free (members are primitive in their main
        // variable, so the main-variable derivative test is decisive)
        for (auto it1 = basis.begin(); it1 != basis.end(); ++it1) {
            CHECK(poly_gcd(*it1, it1->derivative(it1->main_var())).is_constant());
            for (auto it2 = std::next(it1); it2 != basis.end(); ++it2)
                CHECK(poly_gcd(*it1, *it2).is_constant());
        }
        // every input is a product of powers of basis members, up to constant
        for (auto& p : ps) {
            Polynomial rem = p;
            bool changed = true;
            while (changed && !rem.is_constant()) {
                changed = false;
                for (auto& b : basis) {
                    if (auto q = exact_div(rem, b)) {
                        rem = *q;
                        changed = true;
                    }
                }
            }
            CHECK(rem.is_constant());
        }
    }
}

TEST_CASE("eval_partial commutes with multiplication") {
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<int> val(-5, 5);
    for (int it = 0; it < 100; ++it) {
        Polynomial p = random_poly(rng, 2, 2, 3);
        Polynomial q = random_poly(rng, 2, 2, 3);
        SamplePoint s(std::vector<RAN>{RAN(Rational(val(rng)))});
        auto rp = eval_partial(p, s);
        auto rq = eval_partial(q, s);
        auto rpq = eval_partial(p * q, s);
        auto as_poly = [](const EvalPartial& e) {
            switch (e.tag) {
                case EvalPartial::Tag::Poly: return e.poly;
                case EvalPartial::Tag::Nullified: return Polynomial::zero();
                default: return Polynomial::zero();
            }
        };
        if (rp.tag != EvalPartial::Tag::Sig && rq.tag != EvalPartial::Tag::Sig &&
            rpq.tag != EvalPartial::Tag::Sig) {
            CHECK(as_poly(rpq) == as_poly(rp) * as_poly(rq));
        }
    }
}
