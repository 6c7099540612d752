#ifndef NRACOV_ENGINE_HPP
#define NRACOV_ENGINE_HPP

#include <deque>
#include <map>
#include <optional>

#include "nracov/cells.hpp"
#include "nracov/formula_ops.hpp"
#include "nracov/stats.hpp"

namespace nracov {

enum class SolverStatus { Sat, Unsat, Unknown };
std::string status_str(SolverStatus s);

struct SolverResult {
    SolverStatus status = SolverStatus::Unknown;
    // for Unknown: the nullified polynomial and the sample prefix
    std::string reason;
};

/// Tree of symbolic intervals labelled True/False or carrying children
/// ordered as a covering sequence.
struct CoveringTree {
    Formula interval_formula;  // conjunction of extended atoms
    std::optional<bool> leaf;  // engaged: leaf labelled True/False
    std::vector<CoveringTree> children;

    bool is_leaf() const { return leaf.has_value(); }
    std::string str() const;
};

/// Rule 1: merge adjacent same-label leaf children; rule 2: collapse single
/// leaf children into their parent. Applied to a fixed point.
CoveringTree simplify_tree(CoveringTree t);

/// Encodes the tree into a formula over the parameters, preferring whichever
/// of the True/False leaf sides is smaller at each node. describe_unsat
/// selects which side of the space the result describes.
Formula encode_tree(const CoveringTree& t, bool describe_unsat = false);

/// Trace of projection events for inspection in tests.
struct TraceEvent {
    enum class Kind { CellProjected, CoveringProjected } kind;
    unsigned level;                    // level of the projected (result) cell
    bool sat = false;                  // verdict carried by the cell
    RInterval interval;                // resulting interval
    std::vector<RInterval> covering;   // input intervals (CoveringProjected)
};
struct Trace {
    std::vector<TraceEvent> events;
};

struct EngineConfig {
    BooleanMode boolean_mode = BooleanMode::Propagate;
    SelectionMetric selection = SelectionMetric::Sotd;
    VarOrderHeuristic var_order = VarOrderHeuristic::MaxUnivariate;
    size_t candidate_budget = 0;
    uint64_t random_seed = 0;
    /// Test hook: pre-set sample values per level (consumed in order).
    std::map<unsigned, std::deque<Rational>> forced_samples;
    Trace* trace = nullptr;
};

struct QEResult {
    SolverStatus status = SolverStatus::Sat;  // Unknown on nullification
    Formula solution;                         // over the parameters
    CoveringTree tree;
    std::string reason;
};

/// The recursive covering solver. One instance per query.
class Engine {
public:
    explicit Engine(EngineConfig cfg = {});

    /// Truth of a sentence (all variables quantified).
    SolverResult check_truth(const Formula& sentence);

    /// Quantifier elimination; free variables are the parameters.
    QEResult eliminate_quantifiers(const Formula& formula);

    /// A value outside the union of the excluded intervals, or nullopt when
    /// they cover the real line.
    std::optional<RAN> sample_outside(const std::vector<ImplicitCell>& excluded, unsigned level);

    const Stats& stats() const { return stats_; }

private:
    struct Outcome {
        bool sat;
        ImplicitCell cell;
    };

    void preprocess(const Formula& f);
    Outcome recurse(const SamplePoint& s);
    Outcome exists_level(const SamplePoint& s);
    Outcome forall_level(const SamplePoint& s);
    std::pair<std::vector<CoveringTree>, ImplicitCell> parameter_level(const SamplePoint& s);

    DecideResult decide(const SamplePoint& s);
    ImplicitCell enclose(const DecideResult& d, const SamplePoint& s);
    ImplicitCell characterize(const SamplePoint& s, const ImplicitCell& cell, bool sat);
    ImplicitCell characterize_cover(const SamplePoint& s, const std::vector<ImplicitCell>& cells);

    EngineConfig cfg_;
    Stats stats_;
    Formula matrix_;
    std::vector<Quantifier> quant_;  // per level k+1..n (index level-1)
    unsigned num_params_ = 0;
    unsigned num_vars_ = 0;
    std::vector<unsigned> to_original_;  // new index -> original index
};

} // namespace nracov

#endif
