#include <doctest.h>

#include "helpers.hpp"
#include "nracov/real.hpp"
#include "oracles.hpp"

using namespace nracov;
using namespace nracov::testing;

namespace {
Polynomial x1 = pvar(1);
Polynomial x2 = pvar(2);

RAN sqrt2() {
    auto roots = isolate_real_roots(x1 * x1 - pconst(2));
    REQUIRE(roots.size() == 2);
    return roots[1];
}
} // namespace

TEST_CASE("isolate_real_roots examples") {
    auto r = isolate_real_roots(x1 * x1 - pconst(2));
    REQUIRE(r.size() == 2);
    CHECK(r[0] < r[1]);
    CHECK(r[0].sign() < 0);
    CHECK(r[1].sign() > 0);
    CHECK_FALSE(r[1].is_rational());
    CHECK(compare(r[1], Rational(1)) > 0);
    CHECK(compare(r[1], Rational(2)) < 0);

    CHECK(isolate_real_roots(x1 * x1 + pconst(1)).empty());

    auto dbl = isolate_real_roots(x1 * x1 - pconst(2) * x1 + pconst(1));
    REQUIRE(dbl.size() == 1);
    CHECK(dbl[0].is_rational());
    CHECK(dbl[0].rational_value() == 1);

    CHECK_THROWS(isolate_real_roots(Polynomial::zero()));
}

TEST_CASE("isolate_real_roots rational roots in rational form") {
    // (3x-1)(x^2-2)
    Polynomial p = (pconst(3) * x1 - pconst(1)) * (x1 * x1 - pconst(2));
    auto r = isolate_real_roots(p);
    REQUIRE(r.size() == 3);
    CHECK(r[1].is_rational());
    CHECK(r[1].rational_value() == Rational(1, 3));
    CHECK_FALSE(r[0].is_rational());
    CHECK_FALSE(r[2].is_rational());
}

TEST_CASE("root count agrees with Sturm oracle") {
    std::mt19937_64 rng(314159);
    for (int it = 0; it < 200; ++it) {
        Polynomial p = random_nonconst_poly(rng, 1, 4, 6, 5);
        if (!p.contains_var(Var(1))) continue;
        auto roots = isolate_real_roots(p);
        UPoly u = UPoly::from_poly(p);
        CHECK(static_cast<int>(roots.size()) == sturm_count_all(u));
        // isolating intervals: defining sign changes across the interval
        for (auto& r : roots) {
            if (r.is_rational()) continue;
            CHECK(r.defining().sign_at(r.lower()) != r.defining().sign_at(r.upper()));
        }
        // strictly increasing
        for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(compare(roots[i], roots[i + 1]) < 0);
    }
}

TEST_CASE("isolate_roots_at examples") {
    SamplePoint s0(std::vector<RAN>{RAN(0)});
    auto r = isolate_roots_at(x1 * x1 + x2 * x2 - pconst(2), s0);
    REQUIRE(r);
    REQUIRE(r->size() == 2);
    CHECK((*r)[0].sign() < 0);
    CHECK((*r)[1] == sqrt2());

    auto r2 = isolate_roots_at(x2 + pconst(1), s0);
    REQUIRE(r2);
    REQUIRE(r2->size() == 1);
    CHECK((*r2)[0].is_rational());
    CHECK((*r2)[0].rational_value() == -1);

    auto r3 = isolate_roots_at(x1 * x2, s0);
    CHECK_FALSE(r3.has_value());
}

TEST_CASE("isolate_roots_at over algebraic sample") {
    // roots of x2^2 - x1 at x1 = sqrt(2): +-2^(1/4)
    RAN s2 = sqrt2();
    SamplePoint s(std::vector<RAN>{s2});
    auto r = isolate_roots_at(x2 * x2 - x1, s);
    REQUIRE(r);
    REQUIRE(r->size() == 2);
    // fourth root of 2: root of x^4 - 2
    Polynomial quartic = x1 * x1 * x1 * x1 - pconst(2);
    CHECK(sign_at(quartic, SamplePoint({(*r)[1]})) == Sign::Zero);
    CHECK(compare((*r)[0], (*r)[1]) < 0);

    // linear in x2 with coefficient vanishing nowhere: x2*3 - x1
    auto r4 = isolate_roots_at(pconst(3) * x2 - x1, s);
    REQUIRE(r4);
    REQUIRE(r4->size() == 1);
    // root is sqrt(2)/3, a root of 9x^2-2
    CHECK(sign_at(pconst(9) * x1 * x1 - pconst(2), SamplePoint({(*r4)[0]})) == Sign::Zero);
}

TEST_CASE("isolate_roots_at agrees with direct substitution on rational samples") {
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<int> val(-4, 4);
    int done = 0;
    for (int it = 0; done < 100 && it < 500; ++it) {
        Polynomial p = random_nonconst_poly(rng, 2, 2, 4);
        if (p.level() != 2) continue;
        Rational v(val(rng));
        SamplePoint s(std::vector<RAN>{RAN(v)});
        auto via_at = isolate_roots_at(p, s);
        Polynomial sub = p.substitute({{1, v}});
        if (sub.is_zero()) {
            CHECK_FALSE(via_at.has_value());
            ++done;
            continue;
        }
        REQUIRE(via_at);
        std::vector<RAN> direct;
        if (!sub.is_constant()) direct = isolate_real_roots(sub);
        REQUIRE(via_at->size() == direct.size());
        for (size_t i = 0; i < direct.size(); ++i) CHECK(compare((*via_at)[i], direct[i]) == 0);
        ++done;
    }
    CHECK(done == 100);
}

TEST_CASE("sign_at examples") {
    RAN s2 = sqrt2();
    CHECK(sign_at(x1 * x1 - pconst(2), SamplePoint({s2})) == Sign::Zero);
    CHECK(sign_at(x1 - pconst(1), SamplePoint({s2})) == Sign::Positive);
    CHECK(sign_at(x1 * x2, SamplePoint({RAN(0), RAN(5)})) == Sign::Zero);
}

TEST_CASE("sign_at with two algebraic coordinates") {
    RAN s2 = sqrt2();
    auto roots3 = isolate_real_roots(x1 * x1 - pconst(3));
    RAN s3 = roots3[1];
    SamplePoint s(std::vector<RAN>{s2, s3});
    // sqrt(2)*sqrt(3) = sqrt(6): x1*x2 - sqrt(6) sign tests
    CHECK(sign_at(x1 * x2 * x1 * x2 - pconst(6), s) == Sign::Zero);
    CHECK(sign_at(x1 * x2 - pconst(2), s) == Sign::Positive);   // sqrt(6) > 2
    CHECK(sign_at(x1 * x2 - pconst(3), s) == Sign::Negative);   // sqrt(6) < 3
    CHECK(sign_at(x1 + x2, s) == Sign::Positive);
}

TEST_CASE("compare") {
    RAN s2 = sqrt2();
    CHECK(compare(s2, Rational(3, 2)) < 0);
    auto other = isolate_real_roots((x1 * x1 - pconst(2)) * (x1 - pconst(5)));
    // independently constructed sqrt(2)
    RAN s2b = other[1];
    CHECK(compare(s2, s2b) == 0);
    CHECK(compare(RAN(-1), s2) < 0);
    // numbers from coprime defining polynomials
    auto r3 = isolate_real_roots(x1 * x1 - pconst(3));
    CHECK(compare(s2, r3[1]) < 0);
    CHECK(compare(r3[0], s2) < 0);
}

TEST_CASE("compare is refinement-stable") {
    RAN a = sqrt2();
    RAN b = a;
    for (int i = 0; i < 10; ++i) b.refine();
    CHECK(compare(a, b) == 0);
    auto r3 = isolate_real_roots(x1 * x1 - pconst(3));
    RAN c = r3[1], d = r3[1];
    for (int i = 0; i < 12; ++i) d.refine();
    CHECK(compare(a, c) == compare(b, d));
}

TEST_CASE("pick_value_in") {
    CHECK(pick_value_in(Bound::neg_inf(), Bound::pos_inf()) == Rational(0));
    RAN s2 = sqrt2();
    CHECK(pick_value_in(Bound::at(RAN(-1)), Bound::at(s2)) == Rational(0));
    CHECK(pick_value_in(Bound::at(s2), Bound::at(RAN(2))) == Rational(3, 2));
    CHECK(pick_value_in(Bound::neg_inf(), Bound::at(RAN(Rational(-7, 2)))) == Rational(-4));
    CHECK(pick_value_in(Bound::at(RAN(5)), Bound::pos_inf()) == Rational(6));
    CHECK(pick_value_in(Bound::at(RAN(Rational(1, 3))), Bound::at(RAN(Rational(2, 5)))) ==
          Rational(3, 8));
    CHECK_THROWS(pick_value_in(Bound::at(RAN(1)), Bound::at(RAN(1))));

    std::mt19937_64 rng(55);
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 12);
    for (int it = 0; it < 200; ++it) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        a.canonicalize();
        b.canonicalize();
        if (a == b) continue;
        if (b < a) std::swap(a, b);
        Rational v = pick_value_in(Bound::at(RAN(a)), Bound::at(RAN(b)));
        CHECK(a < v);
        CHECK(v < b);
    }
}

TEST_CASE("ran floor/ceil") {
    RAN s2 = sqrt2();
    CHECK(ran_floor(s2) == 1);
    CHECK(ran_ceil(s2) == 2);
    CHECK(ran_floor(RAN(Rational(-3, 2))) == -2);
    CHECK(ran_ceil(RAN(Rational(-3, 2))) == -1);
    CHECK(ran_floor(RAN(4)) == 4);
    CHECK(ran_ceil(RAN(4)) == 4);
}
