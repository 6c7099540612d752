#ifndef NRACOV_IMPLICANTS_HPP
#define NRACOV_IMPLICANTS_HPP

#include <set>
#include <vector>

#include "nracov/formula.hpp"
#include "nracov/formula_ops.hpp"

namespace nracov {

enum class BooleanMode { Eval, Propagate, Explore };
enum class SelectionMetric { Size, Sotd, ReverseSotd, FeatureBased };

/// One conjunct of an implicant: a matrix atom, possibly negated. The
/// normalized view folds the negation into the relation.
struct Literal {
    Constraint base;
    bool negated = false;

    Constraint normalized() const { return negated ? base.negated() : base; }

    friend bool operator==(const Literal& a, const Literal& b) {
        return a.negated == b.negated && a.base == b.base;
    }
    friend bool operator<(const Literal& a, const Literal& b) {
        if (!(a.base == b.base)) return a.base < b.base;
        return a.negated < b.negated;
    }
    std::string str() const { return normalized().str(); }
};

/// Conjunction of literals, kept sorted and duplicate-free.
using Implicant = std::vector<Literal>;

std::string implicant_str(const Implicant& imp);
std::set<Polynomial> implicant_polynomials(const Implicant& imp);

/// Evaluation-only implicants (no Boolean reasoning). target_false selects
/// whether the computed sets certify the matrix being False or True at s.
std::vector<Implicant> implicants_eval(const Formula& matrix, const SamplePoint& s,
                                       bool target_false);

/// A decided subformula: the formula plus a negation flag.
using Decision = std::pair<Formula, bool>;

/// Boolean propagation over the subformula reason sets; a non-empty result
/// with D=(matrix) certifies matrix[s] == False, with D=(not matrix) True.
std::vector<Implicant> implicants_propagate(const Formula& matrix, const std::vector<Decision>& D,
                                            const SamplePoint& s, size_t budget = 0);

/// Propagation plus case splitting on undecided subformulas.
std::vector<Implicant> implicants_explore(const Formula& matrix, const std::vector<Decision>& D,
                                          const SamplePoint& s, size_t budget = 0);

/// Picks one implicant by the configured metric (deterministic).
const Implicant& select_implicant(const std::vector<Implicant>& cands, SelectionMetric metric);

struct DecideResult {
    TruthValue3 value = TruthValue3::Undef;
    Implicant implicant;        // meaningful when value != Undef
    size_t candidates = 0;      // candidate implicants generated
};

/// Decides the matrix at s with the chosen amount of Boolean reasoning and
/// returns a certifying implicant.
DecideResult decide_and_explain(const Formula& matrix, const SamplePoint& s, BooleanMode mode,
                                SelectionMetric metric, size_t budget = 0);

} // namespace nracov

#endif
