#include "nracov/poly.hpp"

#include <algorithm>
#include <sstream>

namespace nracov {

Monomial Monomial::remapped(const std::vector<unsigned>& remap) const {
    std::vector<uint32_t> es;
    for (size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        unsigned nv = remap.at(i + 1);
        if (es.size() < nv) es.resize(nv, 0);
        es[nv - 1] += exps_[i];
    }
    return Monomial(std::move(es));
}

bool operator<(const Polynomial& a, const Polynomial& b) {
    auto ia = a.terms_.rbegin(), ib = b.terms_.rbegin();
    for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms_.rend() && ib != b.terms_.rend();
}

std::vector<Polynomial> Polynomial::coefficients(Var v) const {
    unsigned d = degree(v);
    std::vector<Polynomial> out(d + 1);
    for (auto& [m, c] : terms_) out[d - m.deg(v)].add_term(m.without(v), c);
    return out;
}

Polynomial Polynomial::coeff_of(Var v, unsigned k) const {
    Polynomial out;
    for (auto& [m, c] : terms_)
        if (m.deg(v) == k) out.add_term(m.without(v), c);
    return out;
}

Polynomial Polynomial::derivative(Var v) const {
    Polynomial out;
    for (auto& [m, c] : terms_) {
        uint32_t e = m.deg(v);
        if (e == 0) continue;
        Monomial m2 = m.divide(Monomial::var(v));
        out.add_term(m2, c * e);
    }
    return out;
}

Polynomial Polynomial::substitute(const std::map<unsigned, Rational>& values) const {
    Polynomial out;
    for (auto& [m, c] : terms_) {
        Rational coeff = c;
        std::vector<uint32_t> rest(m.exponents());
        for (size_t i = 0; i < rest.size(); ++i) {
            auto it = values.find(static_cast<unsigned>(i + 1));
            if (it != values.end() && rest[i] > 0) {
                coeff *= rat_pow(it->second, rest[i]);
                rest[i] = 0;
            }
        }
        out.add_term(Monomial(std::move(rest)), coeff);
    }
    return out;
}

Polynomial Polynomial::substitute(Var v, const Polynomial& value) const {
    Polynomial out;
    for (auto& [m, c] : terms_) {
        uint32_t e = m.deg(v);
        Polynomial t;
        t.add_term(m.without(v), c);
        if (e > 0) t *= value.pow(e);
        out += t;
    }
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    Rational out(0);
    for (auto& [m, c] : terms_) {
        Rational t = c;
        const auto& es = m.exponents();
        for (size_t i = 0; i < es.size(); ++i) {
            assert(i < point.size());
            if (es[i] > 0) t *= rat_pow(point[i], es[i]);
        }
        out += t;
    }
    return out;
}

Polynomial Polynomial::remapped(const std::vector<unsigned>& remap) const {
    Polynomial out;
    for (auto& [m, c] : terms_) out.add_term(m.remapped(remap), c);
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    // print in graded order: total degree descending, then lexicographic
    // with x1 most significant
    std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.first.total_degree() != b.first.total_degree())
            return a.first.total_degree() > b.first.total_degree();
        const auto& ea = a.first.exponents();
        const auto& eb = b.first.exponents();
        size_t n = std::max(ea.size(), eb.size());
        for (size_t i = 0; i < n; ++i) {
            uint32_t xa = i < ea.size() ? ea[i] : 0;
            uint32_t xb = i < eb.size() ? eb[i] : 0;
            if (xa != xb) return xa > xb;
        }
        return false;
    });
    std::ostringstream os;
    bool first = true;
    for (auto it = ordered.begin(); it != ordered.end(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool printed_coeff = false;
        if (a != 1 || m.is_one()) {
            os << rational_str(a);
            printed_coeff = true;
        }
        const auto& es = m.exponents();
        bool first_var = true;
        for (size_t i = 0; i < es.size(); ++i) {
            if (es[i] == 0) continue;
            if (printed_coeff || !first_var) os << "*";
            os << "x" << (i + 1);
            if (es[i] > 1) os << "^" << es[i];
            first_var = false;
        }
    }
    return os.str();
}

std::pair<unsigned, unsigned> level_and_degree(const Polynomial& p, Var x) {
    return {p.level(), p.degree(x)};
}

} // namespace nracov
