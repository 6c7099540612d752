#ifndef NRACOV_REAL_HPP
#define NRACOV_REAL_HPP

#include <optional>
#include <vector>

#include "nracov/polyops.hpp"
#include "nracov/ran.hpp"

namespace nracov {

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_from_int(int s) { return s < 0 ? Sign::Negative : s > 0 ? Sign::Positive : Sign::Zero; }

/// Exact sign of p at s; every variable of p must be assigned.
Sign sign_at(const Polynomial& p, const SamplePoint& s);

/// Distinct real roots of a nonzero non-constant univariate polynomial,
/// strictly increasing; rational roots come back in rational form.
std::vector<RAN> isolate_real_roots(const Polynomial& p);

/// Distinct real roots of p(s, x_i) where level(p) = level(s)+1.
/// nullopt means p is nullified over s.
std::optional<std::vector<RAN>> isolate_roots_at(const Polynomial& p, const SamplePoint& s);

/// Partial evaluation of a polynomial at a sample prefix.
struct EvalPartial {
    enum class Tag { Poly, Sig, Nullified, NonRational } tag;
    Polynomial poly;  // when Poly
    Sign sign;        // when Sig
};
EvalPartial eval_partial(const Polynomial& p, const SamplePoint& s);

/// Interval endpoint.
struct Bound {
    enum class Kind { NegInf, Value, PosInf } kind = Kind::NegInf;
    RAN value;

    static Bound neg_inf() { return {Kind::NegInf, RAN(0)}; }
    static Bound pos_inf() { return {Kind::PosInf, RAN(0)}; }
    static Bound at(RAN v) { return {Kind::Value, std::move(v)}; }

    bool is_inf() const { return kind != Kind::Value; }
    std::string str() const;
};

/// -1/0/1 comparison of bounds as extended reals (NegInf < values < PosInf).
int bound_cmp(const Bound& a, const Bound& b);
int bound_cmp_value(const Bound& a, const RAN& v);

/// A maximal sign-invariant interval: open sector or point section.
struct RInterval {
    Bound lo, hi;
    bool section = false;

    static RInterval full() { return {Bound::neg_inf(), Bound::pos_inf(), false}; }
    static RInterval sector(Bound l, Bound h) { return {std::move(l), std::move(h), false}; }
    static RInterval point(RAN v) { return {Bound::at(v), Bound::at(std::move(v)), true}; }

    bool contains(const RAN& v) const;
    /// Interval containment (respecting open/closed semantics).
    bool subset_of(const RInterval& o) const;
    bool is_full() const { return lo.kind == Bound::Kind::NegInf && hi.kind == Bound::Kind::PosInf; }
    std::string str() const;
};

/// A rational strictly between the bounds, preferring 0, then the integer of
/// smallest absolute value, then the rational of smallest denominator.
Rational pick_value_in(const Bound& lo, const Bound& hi);

} // namespace nracov

#endif
