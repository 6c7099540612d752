#ifndef NRACOV_CELLS_HPP
#define NRACOV_CELLS_HPP

#include <set>
#include <variant>
#include <vector>

#include "nracov/implicants.hpp"
#include "nracov/stats.hpp"

namespace nracov {

/// (P, s, I): the interval I around s_i on which the polynomials P are
/// sign-invariant over the prefix of s.
struct ImplicitCell {
    std::set<Polynomial> P;  // pairwise-coprime square-free basis, level <= level(s)
    SamplePoint s;
    RInterval I;

    unsigned level() const { return s.level(); }
    std::string str() const;
};

/// McCallum failure: a polynomial vanished identically over a sample prefix.
struct Nullified {
    Polynomial poly;
    SamplePoint prefix;
};

using IntervalOrNull = std::variant<RInterval, Nullified>;
using CellOrNull = std::variant<ImplicitCell, Nullified>;

/// The maximal interval around s_i in which the level-i members of P have no
/// root over the prefix; a point section when s_i is itself a root.
IntervalOrNull compute_cell(const SamplePoint& s, const std::set<Polynomial>& P,
                            Stats* stats = nullptr);

/// Cell around s built from the factored polynomials of an implicant.
CellOrNull cell_from_implicant(const Implicant& imp, const SamplePoint& s, Stats* stats = nullptr);

/// Decides the matrix at s and generalizes the sample to a truth-invariant
/// implicit cell. The matrix must evaluate to a truth value at s.
CellOrNull get_enclosing_cell(const Formula& matrix, const SamplePoint& s, BooleanMode mode,
                              SelectionMetric metric, size_t budget = 0, Stats* stats = nullptr);

/// McCallum-style projection of a single level-(i+1) cell to level i.
CellOrNull characterize_cell(const SamplePoint& s, const ImplicitCell& cell,
                             Stats* stats = nullptr);

/// Redundancy-free covering sequence sorted by lower bound. Throws
/// std::invalid_argument when the intervals do not cover the real line.
std::vector<ImplicitCell> compute_cover(std::vector<ImplicitCell> cells);

/// Projection of a covering of the real line above s to a level-i cell.
CellOrNull characterize_covering(const SamplePoint& s, const std::vector<ImplicitCell>& cells,
                                 Stats* stats = nullptr);

/// Symbolic description of the cell's interval as a conjunction of
/// indexed-root atoms.
Formula indexed_root_formula(const ImplicitCell& cell);

} // namespace nracov

#endif
