#include <doctest.h>

#include "helpers.hpp"
#include "nracov/engine.hpp"

using namespace nracov;
using namespace nracov::testing;

namespace {
Polynomial x1 = pvar(1);
Polynomial x2 = pvar(2);

Formula ex(Var v, Formula body) { return Formula::quantified(Quantifier::Exists, v, body); }
Formula fa(Var v, Formula body) { return Formula::quantified(Quantifier::Forall, v, body); }

// the two-parabola/circle instance
Formula running_sentence() {
    Polynomial c1 = x2 - pconst(Rational(7, 2)) + pconst(2) * (x1 - pconst(4)).pow(2);
    Polynomial c2 = (x1 - pconst(2)).pow(2) + (x2 - pconst(2)).pow(2) - pconst(1);
    Polynomial c3 = x2 - pconst(3) - pconst(Rational(1, 4)) * (x1 - pconst(4)).pow(2);
    Formula matrix = Formula::conjunction(
        {Formula::atom(c1, Rel::Gt), Formula::atom(c2, Rel::Gt), Formula::atom(c3, Rel::Lt)});
    return fa(Var(1), ex(Var(2), matrix));
}
} // namespace

TEST_CASE("check_truth basics") {
    Engine e1;
    CHECK(e1.check_truth(ex(Var(1), Formula::atom(x1 * x1, Rel::Lt))).status ==
          SolverStatus::Unsat);
    Engine e2;
    CHECK(e2.check_truth(fa(Var(1), Formula::atom(x1 * x1, Rel::Ge))).status ==
          SolverStatus::Sat);
    Engine e3;
    CHECK(e3.check_truth(fa(Var(1), ex(Var(2), Formula::atom(x2 - x1, Rel::Gt)))).status ==
          SolverStatus::Sat);
    Engine e4;
    CHECK(e4.check_truth(running_sentence()).status == SolverStatus::Unsat);
}

TEST_CASE("worked example with forced samples") {
    EngineConfig cfg;
    Trace trace;
    cfg.trace = &trace;
    cfg.forced_samples[1] = {Rational(2), Rational(16, 5), Rational(4)};
    cfg.forced_samples[2] = {Rational(7, 2), Rational(11, 4), Rational(4), Rational(2)};
    Engine e(cfg);
    auto res = e.check_truth(running_sentence());
    CHECK(res.status == SolverStatus::Unsat);

    // expected events:
    //  1. sat cell (1,3) at level 1 (from exists at x1=2)
    //  2. sat cell (3, 4-sqrt2/3) at level 1 (x1=3.2)
    //  3. covering {(-inf,7/2),(3,inf)} at level 1 with result (4-sqrt2/3, 4+sqrt2/3)
    REQUIRE(trace.events.size() == 3);
    Polynomial endpoints = pconst(9) * x1 * x1 - pconst(72) * x1 + pconst(142);

    const auto& e1 = trace.events[0];
    CHECK(e1.kind == TraceEvent::Kind::CellProjected);
    CHECK(e1.sat);
    CHECK(bound_cmp_value(e1.interval.lo, RAN(1)) == 0);
    CHECK(bound_cmp_value(e1.interval.hi, RAN(3)) == 0);

    const auto& e2 = trace.events[1];
    CHECK(e2.kind == TraceEvent::Kind::CellProjected);
    CHECK(e2.sat);
    CHECK(bound_cmp_value(e2.interval.lo, RAN(3)) == 0);
    REQUIRE(e2.interval.hi.kind == Bound::Kind::Value);
    CHECK(sign_at(endpoints, SamplePoint({e2.interval.hi.value})) == Sign::Zero);
    CHECK(compare(e2.interval.hi.value, Rational(4)) < 0);  // the 4 - sqrt2/3 root

    const auto& e3 = trace.events[2];
    CHECK(e3.kind == TraceEvent::Kind::CoveringProjected);
    REQUIRE(e3.covering.size() == 2);
    CHECK(e3.covering[0].lo.kind == Bound::Kind::NegInf);
    CHECK(bound_cmp_value(e3.covering[0].hi, RAN(Rational(7, 2))) == 0);
    CHECK(bound_cmp_value(e3.covering[1].lo, RAN(3)) == 0);
    CHECK(e3.covering[1].hi.kind == Bound::Kind::PosInf);
    REQUIRE(e3.interval.lo.kind == Bound::Kind::Value);
    REQUIRE(e3.interval.hi.kind == Bound::Kind::Value);
    CHECK(sign_at(endpoints, SamplePoint({e3.interval.lo.value})) == Sign::Zero);
    CHECK(sign_at(endpoints, SamplePoint({e3.interval.hi.value})) == Sign::Zero);
    CHECK(compare(e3.interval.lo.value, Rational(4)) < 0);
    CHECK(compare(e3.interval.hi.value, Rational(4)) > 0);
}

TEST_CASE("sample_outside preferences") {
    Engine e;
    CHECK(e.sample_outside({}, 1).value().rational_value() == 0);

    auto mk = [&](Bound lo, Bound hi) {
        ImplicitCell c;
        c.s = SamplePoint(std::vector<RAN>{RAN(0)});
        c.I = RInterval::sector(lo, hi);
        return c;
    };
    // {(-inf,0),(0,inf)}: only the point 0 remains
    auto v = e.sample_outside({mk(Bound::neg_inf(), Bound::at(RAN(0))),
                               mk(Bound::at(RAN(0)), Bound::pos_inf())}, 1);
    REQUIRE(v);
    CHECK(v->rational_value() == 0);

    // {(-1, sqrt2)}: -1 is the largest integer below the interval
    RAN s2 = isolate_real_roots(x1 * x1 - pconst(2))[1];
    auto v2 = e.sample_outside({mk(Bound::at(RAN(-1)), Bound::at(s2))}, 1);
    REQUIRE(v2);
    CHECK(v2->rational_value() == -1);

    // covered line -> nullopt
    auto v3 = e.sample_outside({mk(Bound::neg_inf(), Bound::at(RAN(1))),
                                mk(Bound::at(RAN(0)), Bound::pos_inf())}, 1);
    CHECK_FALSE(v3.has_value());

    // algebraic point gap, forced
    ImplicitCell a = mk(Bound::neg_inf(), Bound::at(s2));
    ImplicitCell b = mk(Bound::at(s2), Bound::pos_inf());
    auto v4 = e.sample_outside({a, b}, 1);
    REQUIRE(v4);
    CHECK_FALSE(v4->is_rational());
    CHECK(compare(*v4, s2) == 0);
}

TEST_CASE("duality on random sentences") {
    std::mt19937_64 rng(600613);
    Rel rels[] = {Rel::Eq, Rel::Neq, Rel::Lt, Rel::Le, Rel::Gt, Rel::Ge};
    int done = 0;
    for (int it = 0; it < 100 && done < 60; ++it) {
        unsigned nv = 1 + static_cast<unsigned>(rng() % 2);
        Formula matrix = Formula::disjunction(
            {Formula::atom(random_nonconst_poly(rng, nv, 2, 3), rels[rng() % 6]),
             Formula::conjunction(
                 {Formula::atom(random_nonconst_poly(rng, nv, 2, 3), rels[rng() % 6]),
                  Formula::atom(random_nonconst_poly(rng, nv, 2, 3), rels[rng() % 6])})});
        if (matrix.is_true() || matrix.is_false()) continue;
        Formula f = matrix;
        for (unsigned i = nv; i >= 1; --i)
            f = Formula::quantified(rng() % 2 ? Quantifier::Exists : Quantifier::Forall, Var(i), f);
        Engine e1, e2;
        auto r1 = e1.check_truth(f);
        auto r2 = e2.check_truth(Formula::negation(f));
        if (r1.status == SolverStatus::Unknown || r2.status == SolverStatus::Unknown) continue;
        ++done;
        CHECK(r1.status != r2.status);
    }
    CHECK(done >= 50);
}

TEST_CASE("termination progress and statistics sanity") {
    EngineConfig cfg;
    Engine e(cfg);
    auto res = e.check_truth(running_sentence());
    CHECK(res.status == SolverStatus::Unsat);
    CHECK(e.stats().implicants_used <= e.stats().implicants_generated);
    CHECK(e.stats().samples_tried >= 3);
    CHECK(e.stats().cells_characterized > 0);
}

TEST_CASE("simplify_tree") {
    auto leaf = [&](Formula f, bool label) {
        CoveringTree t;
        t.interval_formula = std::move(f);
        t.leaf = label;
        return t;
    };
    Polynomial p = x1 * x1 - pconst(2);
    Formula lo = Formula::xatom(ExtendedAtom{Var(1), Rel::Gt, IndexedRootExpr{p, 1}});
    Formula hi = Formula::xatom(ExtendedAtom{Var(1), Rel::Lt, IndexedRootExpr{p, 2}});

    // [(-inf,r1) F][(r1,r2) F][(r2,inf) T] -> merged F + T
    CoveringTree root;
    root.interval_formula = Formula::make_true();
    root.children = {leaf(hi, false),
                     leaf(Formula::conjunction({lo, hi}), false),
                     leaf(lo, true)};
    // give the middle child bounds: lower=lo (r1<x), upper=hi (x<r2)
    root.children[0].interval_formula = Formula::xatom(ExtendedAtom{Var(1), Rel::Lt, IndexedRootExpr{p, 1}});
    CoveringTree s = simplify_tree(root);
    REQUIRE(s.children.size() == 2);
    CHECK(*s.children[0].leaf == false);
    // merged lower bounds come from the first child (none), upper from second
    CHECK(s.children[0].interval_formula == hi);
    CHECK(*s.children[1].leaf == true);

    // single leaf child: adopt label
    CoveringTree one;
    one.interval_formula = lo;
    one.children = {leaf(Formula::make_true(), true)};
    CoveringTree s2 = simplify_tree(one);
    CHECK(s2.is_leaf());
    CHECK(*s2.leaf == true);
    CHECK(s2.interval_formula == lo);

    // alternating labels: unchanged
    CoveringTree alt;
    alt.interval_formula = Formula::make_true();
    alt.children = {leaf(hi, true), leaf(Formula::conjunction({lo, hi}), false), leaf(lo, true)};
    CoveringTree s3 = simplify_tree(alt);
    CHECK(s3.children.size() == 3);
}

TEST_CASE("encode_tree") {
    Polynomial p = x1 * x1 - pconst(2);
    Formula lo = Formula::xatom(ExtendedAtom{Var(1), Rel::Gt, IndexedRootExpr{p, 1}});
    auto leaf = [&](Formula f, bool label) {
        CoveringTree t;
        t.interval_formula = std::move(f);
        t.leaf = label;
        return t;
    };

    // single true leaf under root: the leaf's interval formula
    CoveringTree root;
    root.interval_formula = Formula::make_true();
    root.children = {leaf(lo, true), leaf(Formula::negation(lo), false)};
    // nT == nF: encode the true side
    Formula enc = encode_tree(root);
    CHECK(enc == lo);

    // 3 true leaves, 1 false leaf: negated encoding of the false leaf
    Formula a1 = Formula::xatom(ExtendedAtom{Var(1), Rel::Lt, IndexedRootExpr{p, 1}});
    Formula a2 = Formula::xatom(ExtendedAtom{Var(1), Rel::Eq, IndexedRootExpr{p, 1}});
    Formula a3 = Formula::xatom(ExtendedAtom{Var(1), Rel::Gt, IndexedRootExpr{p, 2}});
    CoveringTree root2;
    root2.interval_formula = Formula::make_true();
    root2.children = {leaf(a1, true), leaf(a2, true), leaf(a3, true), leaf(lo, false)};
    Formula enc2 = encode_tree(root2);
    CHECK(enc2 == Formula::negation(lo));

    // leaf true at root -> true
    CoveringTree lt;
    lt.interval_formula = Formula::make_true();
    lt.leaf = true;
    CHECK(encode_tree(lt).is_true());
    CoveringTree lf;
    lf.interval_formula = Formula::make_true();
    lf.leaf = false;
    CHECK(encode_tree(lf).is_false());
}
