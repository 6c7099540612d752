#ifndef NRACOV_FORMULA_HPP
#define NRACOV_FORMULA_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nracov/poly.hpp"
#include "nracov/real.hpp"

namespace nracov {

enum class Rel { Eq, Neq, Lt, Le, Gt, Ge };

Rel negate_rel(Rel r);
Rel mirror_rel(Rel r);  // relation after multiplying the polynomial by -1
bool rel_holds(Rel r, Sign s);
std::string rel_str(Rel r);

/// Polynomial constraint p ~ 0 with a sign-normalized, integer-primitive
/// polynomial. Constant constraints must be folded away by the caller.
struct Constraint {
    Polynomial poly;
    Rel rel;

    Constraint() : rel(Rel::Eq) {}
    Constraint(Polynomial p, Rel r);

    Constraint negated() const { return {poly, negate_rel(rel)}; }

    friend bool operator==(const Constraint& a, const Constraint& b) {
        return a.rel == b.rel && a.poly == b.poly;
    }
    friend bool operator<(const Constraint& a, const Constraint& b) {
        if (a.poly != b.poly) return a.poly < b.poly;
        return static_cast<int>(a.rel) < static_cast<int>(b.rel);
    }
    std::string str() const;
};

/// The function mapping lower-level points to the index-th real root of
/// poly in its main variable.
struct IndexedRootExpr {
    Polynomial poly;  // level i
    unsigned index;   // 1-based

    friend bool operator==(const IndexedRootExpr& a, const IndexedRootExpr& b) {
        return a.index == b.index && a.poly == b.poly;
    }
    std::string str() const;
};

/// var <rel> root(poly, index); used in quantifier-elimination output.
struct ExtendedAtom {
    Var var;
    Rel rel;
    IndexedRootExpr root;

    friend bool operator==(const ExtendedAtom& a, const ExtendedAtom& b) {
        return a.var == b.var && a.rel == b.rel && a.root == b.root;
    }
    std::string str() const;
};

enum class TruthValue3 { False, True, Undef };
TruthValue3 tv3_not(TruthValue3 v);

enum class Quantifier { Exists, Forall };

class Formula;
using FormulaList = std::vector<Formula>;

enum class FKind { True, False, Atom, XAtom, Not, And, Or, Exists, Forall };

/// Immutable formula tree with cheap copies.
class Formula {
public:
    Formula() : Formula(make_true()) {}

    static Formula make_true();
    static Formula make_false();
    static Formula boolean(bool b) { return b ? make_true() : make_false(); }
    /// Builds an atom; constant polynomials fold to True/False.
    static Formula atom(const Polynomial& p, Rel r);
    static Formula atom(Constraint c);
    static Formula xatom(ExtendedAtom a);
    static Formula negation(Formula f);
    static Formula conjunction(FormulaList fs);
    static Formula disjunction(FormulaList fs);
    static Formula quantified(Quantifier q, Var v, Formula body);
    static Formula implies(Formula a, Formula b);
    static Formula exclusive_or(Formula a, Formula b);

    FKind kind() const { return node_->kind; }
    bool is_true() const { return kind() == FKind::True; }
    bool is_false() const { return kind() == FKind::False; }

    const Constraint& constraint() const { return node_->constraint; }
    const ExtendedAtom& xatom_value() const { return node_->xatom; }
    const FormulaList& children() const { return node_->children; }
    Var qvar() const { return node_->qvar; }

    /// Highest variable index occurring anywhere (atoms and binders).
    unsigned max_var() const;
    void collect_free_vars(std::vector<bool>& seen) const;

    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator<(const Formula& a, const Formula& b);

    std::string str() const;

private:
    struct Node {
        FKind kind;
        Constraint constraint;  // Atom
        ExtendedAtom xatom;     // XAtom
        FormulaList children;   // Not/And/Or (>=1), Exists/Forall (1)
        Var qvar;               // Exists/Forall
    };
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

} // namespace nracov

#endif
