#ifndef NRACOV_FORMULA_OPS_HPP
#define NRACOV_FORMULA_OPS_HPP

#include <vector>

#include "nracov/formula.hpp"

namespace nracov {

/// Negation normal form: pushes negations into atoms via relation flips and
/// quantifier duality; the result contains no Not nodes.
Formula to_nnf(const Formula& f);

struct PrenexForm {
    std::vector<std::pair<Quantifier, Var>> prefix;
    Formula matrix;  // quantifier-free
};

/// Prenex normal form of an NNF-able formula. Bound variables must be
/// distinct from each other and from free variables (the parser guarantees
/// this); quantifiers are hoisted left to right.
PrenexForm to_prenex(const Formula& f);

/// Kleene three-valued evaluation: constraints of level <= level(s) are
/// decided exactly, higher ones are Undef.
TruthValue3 evaluate_partial(const Formula& f, const SamplePoint& s);

enum class VarOrderHeuristic { MaxUnivariate, FeatureBased };

/// A permutation of all variables of the problem: parameters first, then
/// each quantifier block internally reordered; block boundaries preserved.
/// Returns the ordered list of original variable indices.
std::vector<unsigned> variable_order(const PrenexForm& pf, unsigned num_vars,
                                     VarOrderHeuristic h);

} // namespace nracov

#endif
