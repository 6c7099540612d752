#include "nracov/formula.hpp"

#include <algorithm>
#include <sstream>

#include "nracov/polyops.hpp"

namespace nracov {

Rel negate_rel(Rel r) {
    switch (r) {
        case Rel::Eq: return Rel::Neq;
        case Rel::Neq: return Rel::Eq;
        case Rel::Lt: return Rel::Ge;
        case Rel::Le: return Rel::Gt;
        case Rel::Gt: return Rel::Le;
        case Rel::Ge: return Rel::Lt;
    }
    return Rel::Eq;
}

Rel mirror_rel(Rel r) {
    switch (r) {
        case Rel::Lt: return Rel::Gt;
        case Rel::Le: return Rel::Ge;
        case Rel::Gt: return Rel::Lt;
        case Rel::Ge: return Rel::Le;
        default: return r;
    }
}

bool rel_holds(Rel r, Sign s) {
    switch (r) {
        case Rel::Eq: return s == Sign::Zero;
        case Rel::Neq: return s != Sign::Zero;
        case Rel::Lt: return s == Sign::Negative;
        case Rel::Le: return s != Sign::Positive;
        case Rel::Gt: return s == Sign::Positive;
        case Rel::Ge: return s != Sign::Negative;
    }
    return false;
}

std::string rel_str(Rel r) {
    switch (r) {
        case Rel::Eq: return "=";
        case Rel::Neq: return "!=";
        case Rel::Lt: return "<";
        case Rel::Le: return "<=";
        case Rel::Gt: return ">";
        case Rel::Ge: return ">=";
    }
    return "?";
}

Constraint::Constraint(Polynomial p, Rel r) {
    auto [np, factor] = normalize_sign_factor(p);
    poly = std::move(np);
    rel = factor < 0 ? mirror_rel(r) : r;
}

std::string Constraint::str() const { return poly.str() + " " + rel_str(rel) + " 0"; }

std::string IndexedRootExpr::str() const {
    std::ostringstream os;
    os << "root(" << poly.str() << ", " << index << ")";
    return os.str();
}

std::string ExtendedAtom::str() const {
    // lower bounds read "root < x", upper bounds "x < root"
    if (rel == Rel::Gt || rel == Rel::Ge) {
        return root.str() + " " + rel_str(mirror_rel(rel)) + " x" + std::to_string(var.idx);
    }
    return "x" + std::to_string(var.idx) + " " + rel_str(rel) + " " + root.str();
}

TruthValue3 tv3_not(TruthValue3 v) {
    switch (v) {
        case TruthValue3::True: return TruthValue3::False;
        case TruthValue3::False: return TruthValue3::True;
        default: return TruthValue3::Undef;
    }
}

Formula Formula::make_true() {
    auto n = std::make_shared<Node>();
    n->kind = FKind::True;
    return Formula(n);
}

Formula Formula::make_false() {
    auto n = std::make_shared<Node>();
    n->kind = FKind::False;
    return Formula(n);
}

Formula Formula::atom(const Polynomial& p, Rel r) {
    if (p.is_constant()) {
        Sign s = sign_from_int(sign_of(p.is_zero() ? Rational(0) : p.constant_value()));
        return boolean(rel_holds(r, s));
    }
    return atom(Constraint(p, r));
}

Formula Formula::atom(Constraint c) {
    assert(!c.poly.is_constant());
    auto n = std::make_shared<Node>();
    n->kind = FKind::Atom;
    n->constraint = std::move(c);
    return Formula(n);
}

Formula Formula::xatom(ExtendedAtom a) {
    auto n = std::make_shared<Node>();
    n->kind = FKind::XAtom;
    n->xatom = std::move(a);
    return Formula(n);
}

Formula Formula::negation(Formula f) {
    if (f.is_true()) return make_false();
    if (f.is_false()) return make_true();
    if (f.kind() == FKind::Not) return f.children()[0];
    auto n = std::make_shared<Node>();
    n->kind = FKind::Not;
    n->children.push_back(std::move(f));
    return Formula(n);
}

Formula Formula::conjunction(FormulaList fs) {
    FormulaList kids;
    for (auto& f : fs) {
        if (f.is_false()) return make_false();
        if (f.is_true()) continue;
        if (f.kind() == FKind::And) {
            for (auto& k : f.children()) kids.push_back(k);
        } else {
            kids.push_back(std::move(f));
        }
    }
    if (kids.empty()) return make_true();
    if (kids.size() == 1) return kids[0];
    auto n = std::make_shared<Node>();
    n->kind = FKind::And;
    n->children = std::move(kids);
    return Formula(n);
}

Formula Formula::disjunction(FormulaList fs) {
    FormulaList kids;
    for (auto& f : fs) {
        if (f.is_true()) return make_true();
        if (f.is_false()) continue;
        if (f.kind() == FKind::Or) {
            for (auto& k : f.children()) kids.push_back(k);
        } else {
            kids.push_back(std::move(f));
        }
    }
    if (kids.empty()) return make_false();
    if (kids.size() == 1) return kids[0];
    auto n = std::make_shared<Node>();
    n->kind = FKind::Or;
    n->children = std::move(kids);
    return Formula(n);
}

Formula Formula::quantified(Quantifier q, Var v, Formula body) {
    auto n = std::make_shared<Node>();
    n->kind = q == Quantifier::Exists ? FKind::Exists : FKind::Forall;
    n->qvar = v;
    n->children.push_back(std::move(body));
    return Formula(n);
}

Formula Formula::implies(Formula a, Formula b) {
    return disjunction({negation(std::move(a)), std::move(b)});
}

Formula Formula::exclusive_or(Formula a, Formula b) {
    return disjunction({conjunction({a, negation(b)}), conjunction({negation(a), b})});
}

unsigned Formula::max_var() const {
    unsigned m = 0;
    switch (kind()) {
        case FKind::Atom: m = constraint().poly.level(); break;
        case FKind::XAtom: m = std::max(xatom_value().var.idx, xatom_value().root.poly.level()); break;
        case FKind::Exists:
        case FKind::Forall: m = std::max(qvar().idx, children()[0].max_var()); break;
        default:
            for (auto& k : children()) m = std::max(m, k.max_var());
    }
    return m;
}

void Formula::collect_free_vars(std::vector<bool>& seen) const {
    switch (kind()) {
        case FKind::Atom:
            for (auto v : constraint().poly.vars())
                if (v.idx < seen.size()) seen[v.idx] = true;
            break;
        case FKind::XAtom:
            if (xatom_value().var.idx < seen.size()) seen[xatom_value().var.idx] = true;
            for (auto v : xatom_value().root.poly.vars())
                if (v.idx < seen.size()) seen[v.idx] = true;
            break;
        case FKind::Exists:
        case FKind::Forall: {
            std::vector<bool> inner(seen.size(), false);
            children()[0].collect_free_vars(inner);
            if (qvar().idx < inner.size()) inner[qvar().idx] = false;
            for (size_t i = 0; i < seen.size(); ++i)
                if (inner[i]) seen[i] = true;
            break;
        }
        default:
            for (auto& k : children()) k.collect_free_vars(seen);
    }
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case FKind::True:
        case FKind::False: return true;
        case FKind::Atom: return a.constraint() == b.constraint();
        case FKind::XAtom: return a.xatom_value() == b.xatom_value();
        case FKind::Exists:
        case FKind::Forall:
            if (a.qvar() != b.qvar()) return false;
            return a.children()[0] == b.children()[0];
        default:
            if (a.children().size() != b.children().size()) return false;
            for (size_t i = 0; i < a.children().size(); ++i)
                if (!(a.children()[i] == b.children()[i])) return false;
            return true;
    }
}

bool operator<(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return false;
    if (a.kind() != b.kind()) return static_cast<int>(a.kind()) < static_cast<int>(b.kind());
    switch (a.kind()) {
        case FKind::True:
        case FKind::False: return false;
        case FKind::Atom: return a.constraint() < b.constraint();
        case FKind::XAtom: {
            auto key = [](const ExtendedAtom& x) {
                return std::make_tuple(x.var.idx, static_cast<int>(x.rel), x.root.index);
            };
            if (key(a.xatom_value()) != key(b.xatom_value()))
                return key(a.xatom_value()) < key(b.xatom_value());
            return a.xatom_value().root.poly < b.xatom_value().root.poly;
        }
        case FKind::Exists:
        case FKind::Forall:
            if (a.qvar().idx != b.qvar().idx) return a.qvar().idx < b.qvar().idx;
            return a.children()[0] < b.children()[0];
        default: {
            if (a.children().size() != b.children().size())
                return a.children().size() < b.children().size();
            for (size_t i = 0; i < a.children().size(); ++i) {
                if (a.children()[i] == b.children()[i]) continue;
                return a.children()[i] < b.children()[i];
            }
            return false;
        }
    }
}

std::string Formula::str() const {
    switch (kind()) {
        case FKind::True: return "true";
        case FKind::False: return "false";
        case FKind::Atom: return constraint().str();
        case FKind::XAtom: return xatom_value().str();
        case FKind::Not: return "!(" + children()[0].str() + ")";
        case FKind::And:
        case FKind::Or: {
            std::string sep = kind() == FKind::And ? " and " : " or ";
            std::string s = "(";
            for (size_t i = 0; i < children().size(); ++i) {
                if (i) s += sep;
                s += children()[i].str();
            }
            return s + ")";
        }
        case FKind::Exists:
        case FKind::Forall: {
            std::string q = kind() == FKind::Exists ? "exists" : "forall";
            return q + " x" + std::to_string(qvar().idx) + ". (" + children()[0].str() + ")";
        }
    }
    return "?";
}

} // namespace nracov
