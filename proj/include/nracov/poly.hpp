#ifndef NRACOV_POLY_HPP
#define NRACOV_POLY_HPP

#include <cassert>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nracov/rational.hpp"

namespace nracov {

/// A variable is a 1-based position in the global ordering x1 < ... < xn.
struct Var {
    unsigned idx = 0;

    Var() = default;
    explicit Var(unsigned i) : idx(i) { assert(i >= 1); }

    friend bool operator==(Var a, Var b) { return a.idx == b.idx; }
    friend bool operator!=(Var a, Var b) { return a.idx != b.idx; }
    friend bool operator<(Var a, Var b) { return a.idx < b.idx; }
};

/// Exponent vector; entry k-1 is the power of x_k. Trailing zeros are
/// trimmed so equal monomials have equal representations.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<uint32_t> exps) : exps_(std::move(exps)) { trim(); }

    static Monomial one() { return Monomial(); }
    static Monomial var(Var v, uint32_t e = 1) {
        std::vector<uint32_t> es(v.idx, 0);
        es[v.idx - 1] = e;
        return Monomial(std::move(es));
    }

    unsigned level() const { return static_cast<unsigned>(exps_.size()); }
    bool is_one() const { return exps_.empty(); }

    uint32_t deg(Var v) const { return v.idx <= exps_.size() ? exps_[v.idx - 1] : 0; }

    uint32_t total_degree() const {
        uint32_t t = 0;
        for (auto e : exps_) t += e;
        return t;
    }

    Monomial operator*(const Monomial& o) const {
        std::vector<uint32_t> es(std::max(exps_.size(), o.exps_.size()), 0);
        for (size_t i = 0; i < exps_.size(); ++i) es[i] += exps_[i];
        for (size_t i = 0; i < o.exps_.size(); ++i) es[i] += o.exps_[i];
        return Monomial(std::move(es));
    }

    bool divides(const Monomial& o) const {
        if (exps_.size() > o.exps_.size()) return false;
        for (size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    Monomial divide(const Monomial& o) const {  // *this / o, must be divisible
        std::vector<uint32_t> es(exps_);
        for (size_t i = 0; i < o.exps_.size(); ++i) es[i] -= o.exps_[i];
        return Monomial(std::move(es));
    }

    /// Sets the power of v to zero.
    Monomial without(Var v) const {
        std::vector<uint32_t> es(exps_);
        if (v.idx <= es.size()) es[v.idx - 1] = 0;
        return Monomial(std::move(es));
    }

    /// Renumbers variables: entry for x_k moves to x_{remap[k]}.
    Monomial remapped(const std::vector<unsigned>& remap) const;

    /// Lexicographic with higher variables more significant, so the leading
    /// monomial carries the main variable.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        size_t n = std::max(a.exps_.size(), b.exps_.size());
        for (size_t i = n; i-- > 0;) {
            uint32_t ea = i < a.exps_.size() ? a.exps_[i] : 0;
            uint32_t eb = i < b.exps_.size() ? b.exps_[i] : 0;
            if (ea != eb) return ea < eb;
        }
        return false;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    const std::vector<uint32_t>& exponents() const { return exps_; }

private:
    void trim() {
        while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
    }
    std::vector<uint32_t> exps_;
};

/// Sparse multivariate polynomial over exact rationals. Terms are kept in
/// the canonical monomial order, so structural equality is mathematical
/// equality.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(const Rational& c) {
        if (c != 0) terms_[Monomial::one()] = c;
    }
    Polynomial(int c) : Polynomial(Rational(c)) {}

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const Rational& c) { return Polynomial(c); }
    static Polynomial variable(Var v) {
        Polynomial p;
        p.terms_[Monomial::var(v)] = 1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    Rational constant_value() const {
        assert(is_constant());
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }

    /// Index of the main variable; 0 for constants.
    unsigned level() const {
        unsigned l = 0;
        for (auto& [m, c] : terms_) l = std::max(l, m.level());
        return l;
    }
    Var main_var() const {
        assert(level() >= 1);
        return Var(level());
    }

    unsigned degree(Var v) const {
        unsigned d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, (unsigned)m.deg(v));
        return d;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, (unsigned)m.total_degree());
        return d;
    }

    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Leading term under the canonical monomial order.
    const std::pair<const Monomial, Rational>& leading_term() const {
        assert(!terms_.empty());
        return *terms_.rbegin();
    }

    bool contains_var(Var v) const {
        for (auto& [m, c] : terms_)
            if (m.deg(v) > 0) return true;
        return false;
    }

    std::vector<Var> vars() const {
        std::vector<Var> out;
        unsigned l = level();
        for (unsigned i = 1; i <= l; ++i)
            if (contains_var(Var(i))) out.push_back(Var(i));
        return out;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r;
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) const_cast<Rational&>(v) *= c;
        return *this;
    }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    Polynomial pow(unsigned e) const {
        Polynomial r(1);
        Polynomial b = *this;
        while (e) {
            if (e & 1) r *= b;
            if (e > 1) b *= b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    friend bool operator<(const Polynomial& a, const Polynomial& b);

    /// Coefficients as univariate in v, highest degree first.
    std::vector<Polynomial> coefficients(Var v) const;
    /// Coefficient of v^k.
    Polynomial coeff_of(Var v, unsigned k) const;
    /// Leading coefficient w.r.t. v.
    Polynomial leading_coeff(Var v) const { return coeff_of(v, degree(v)); }

    Polynomial derivative(Var v) const;

    /// Substitutes rational values for the given variables.
    Polynomial substitute(const std::map<unsigned, Rational>& values) const;
    /// Substitutes a polynomial for one variable.
    Polynomial substitute(Var v, const Polynomial& value) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    Polynomial remapped(const std::vector<unsigned>& remap) const;

    std::string str() const;  // debug form, e.g. "2*x1^2*x2 - 1"

private:
    TermMap terms_;
};

std::pair<unsigned, unsigned> level_and_degree(const Polynomial& p, Var x);

} // namespace nracov

#endif
