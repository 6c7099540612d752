#ifndef NRACOV_RAN_HPP
#define NRACOV_RAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "nracov/upoly.hpp"

namespace nracov {

/// Exact real algebraic number: either a rational, or a square-free
/// defining polynomial together with an open isolating interval whose
/// endpoints are not roots. Values are plain copies; refinement narrows the
/// local copy only (copy-on-refine).
class RealAlgebraicNumber {
public:
    RealAlgebraicNumber() : rat_(Rational(0)) {}
    /* implicit */ RealAlgebraicNumber(Rational r) : rat_(std::move(r)) {}
    /* implicit */ RealAlgebraicNumber(int i) : rat_(Rational(i)) {}

    static RealAlgebraicNumber algebraic(UPoly defining, Rational lo, Rational hi);
    static RealAlgebraicNumber from_isolated(const IsolatedRoot& r);

    bool is_rational() const { return rat_.has_value(); }
    const Rational& rational_value() const { return *rat_; }

    const UPoly& defining() const { return defining_; }
    Rational lower() const { return is_rational() ? *rat_ : lo_; }
    Rational upper() const { return is_rational() ? *rat_ : hi_; }

    /// One bisection step; may collapse to rational when the midpoint hits
    /// the root.
    void refine();
    void refine_below(const Rational& width);

    int sign() const;
    double approx() const;

    std::string str() const;

private:
    std::optional<Rational> rat_;
    UPoly defining_;  // square-free, integer-primitive, positive lc
    Rational lo_, hi_;
    int sign_lo_ = 0;  // sign of defining at lo_
};

using RAN = RealAlgebraicNumber;

/// Exact three-way comparison.
int compare(const RAN& a, const RAN& b);
int compare(const RAN& a, const Rational& b);

inline bool operator==(const RAN& a, const RAN& b) { return compare(a, b) == 0; }
inline bool operator<(const RAN& a, const RAN& b) { return compare(a, b) < 0; }
inline bool operator<=(const RAN& a, const RAN& b) { return compare(a, b) <= 0; }
inline bool operator>(const RAN& a, const RAN& b) { return compare(a, b) > 0; }
inline bool operator>=(const RAN& a, const RAN& b) { return compare(a, b) >= 0; }
inline bool operator!=(const RAN& a, const RAN& b) { return compare(a, b) != 0; }

Integer ran_floor(const RAN& a);
Integer ran_ceil(const RAN& a);

/// Exact test whether a is a root of the (univariate, rational) polynomial g.
bool is_root_of(const UPoly& g, const RAN& a);

/// Partial sample point; coordinate k (0-based storage) assigns x_{k+1}.
class SamplePoint {
public:
    SamplePoint() = default;
    explicit SamplePoint(std::vector<RAN> coords) : coords_(std::move(coords)) {}

    unsigned level() const { return static_cast<unsigned>(coords_.size()); }
    const RAN& coord(unsigned var_idx) const { return coords_.at(var_idx - 1); }
    const std::vector<RAN>& coords() const { return coords_; }

    SamplePoint prefix(unsigned j) const {
        assert(j <= level());
        return SamplePoint(std::vector<RAN>(coords_.begin(), coords_.begin() + j));
    }
    SamplePoint extended(RAN v) const {
        auto c = coords_;
        c.push_back(std::move(v));
        return SamplePoint(std::move(c));
    }

    bool all_rational() const {
        for (auto& c : coords_)
            if (!c.is_rational()) return false;
        return true;
    }

    std::string str() const;

private:
    std::vector<RAN> coords_;
};

} // namespace nracov

#endif
