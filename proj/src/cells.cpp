#include "nracov/cells.hpp"

#include <algorithm>
#include <stdexcept>

namespace nracov {

std::string ImplicitCell::str() const {
    std::string out = "({";
    bool first = true;
    for (auto& p : P) {
        if (!first) out += ", ";
        out += p.str();
        first = false;
    }
    return out + "}, " + s.str() + ", " + I.str() + ")";
}

IntervalOrNull compute_cell(const SamplePoint& s, const std::set<Polynomial>& P, Stats*) {
    unsigned i = s.level();
    assert(i >= 1);
    const RAN& si = s.coord(i);
    SamplePoint prefix = s.prefix(i - 1);

    std::vector<RAN> roots;
    for (auto& p : P) {
        if (p.level() != i) continue;
        auto r = isolate_roots_at(p, prefix);
        if (!r) return Nullified{p, prefix};
        for (auto& root : *r) roots.push_back(root);
    }

    Bound lo = Bound::neg_inf(), hi = Bound::pos_inf();
    for (auto& r : roots) {
        int c = compare(r, si);
        if (c == 0) return RInterval::point(si);
        if (c < 0) {
            if (lo.is_inf() || compare(r, lo.value) > 0) lo = Bound::at(r);
        } else {
            if (hi.is_inf() || compare(r, hi.value) < 0) hi = Bound::at(r);
        }
    }
    return RInterval::sector(lo, hi);
}

CellOrNull cell_from_implicant(const Implicant& imp, const SamplePoint& s, Stats* stats) {
    ImplicitCell cell;
    cell.P = refine_basis(implicant_polynomials(imp));
    cell.s = s;
    auto iv = compute_cell(s, cell.P, stats);
    if (auto* n = std::get_if<Nullified>(&iv)) return *n;
    cell.I = std::get<RInterval>(iv);
    return cell;
}

CellOrNull get_enclosing_cell(const Formula& matrix, const SamplePoint& s, BooleanMode mode,
                              SelectionMetric metric, size_t budget, Stats* stats) {
    DecideResult r = decide_and_explain(matrix, s, mode, metric, budget);
    assert(r.value != TruthValue3::Undef);
    if (stats) {
        stats->implicants_generated += r.candidates;
        stats->implicants_used += 1;
    }
    return cell_from_implicant(r.implicant, s, stats);
}

namespace {

// Roots of each level-(i+1) member of P over s, for bound classification.
struct RootTable {
    std::vector<std::pair<Polynomial, std::vector<RAN>>> entries;

    const std::vector<RAN>* roots_of(const Polynomial& p) const {
        for (auto& [q, r] : entries)
            if (q == p) return &r;
        return nullptr;
    }
};

bool vanishes_at(const std::vector<RAN>& roots, const RAN& v) {
    for (auto& r : roots)
        if (compare(r, v) == 0) return true;
    return false;
}

bool has_root_leq(const std::vector<RAN>& roots, const RAN& v) {
    return !roots.empty() && compare(roots.front(), v) <= 0;
}

bool has_root_geq(const std::vector<RAN>& roots, const RAN& v) {
    return !roots.empty() && compare(roots.back(), v) >= 0;
}

Polynomial res_counted(const Polynomial& p, const Polynomial& q, Var x, Stats* stats) {
    if (stats) ++stats->resultants_computed;
    return resultant(p, q, x);
}

// Coefficients added to the projection: from the top until one that cannot
// vanish over the cell (decided at the sample).
void add_required_coefficients(std::set<Polynomial>& acc, const Polynomial& p, Var x,
                               const SamplePoint& s) {
    for (auto& c : p.coefficients(x)) {
        if (c.is_zero()) continue;
        if (c.is_constant()) break;
        acc.insert(c);
        if (sign_at(c, s) != Sign::Zero) break;
    }
}

struct Projection {
    std::set<Polynomial> polys;
    std::optional<Nullified> nullified;
};

Projection project_cell(const SamplePoint& s, const ImplicitCell& cell, Stats* stats) {
    Projection out;
    unsigned hi_level = s.level() + 1;
    Var x(hi_level);

    std::vector<Polynomial> high;
    for (auto& p : cell.P) {
        if (p.level() == hi_level)
            high.push_back(p);
        else
            out.polys.insert(p);  // pass-through of lower-level members
    }

    RootTable table;
    for (auto& p : high) {
        auto roots = isolate_roots_at(p, s);
        if (!roots) {
            out.nullified = Nullified{p, s};
            return out;
        }
        table.entries.emplace_back(p, std::move(*roots));
    }

    for (auto& p : high) {
        if (p.degree(x) >= 2) out.polys.insert(discriminant(p, x));
        add_required_coefficients(out.polys, p, x, s);
    }

    auto bound_resultants = [&](const Bound& b, bool lower) {
        if (b.is_inf()) return;
        const RAN& v = b.value;
        for (auto& [p, proots] : table.entries) {
            if (!vanishes_at(proots, v)) continue;
            for (auto& [q, qroots] : table.entries) {
                if (q == p) continue;
                bool reaches = lower ? has_root_leq(qroots, v) : has_root_geq(qroots, v);
                if (reaches) out.polys.insert(res_counted(p, q, x, stats));
            }
        }
    };
    bound_resultants(cell.I.lo, true);
    bound_resultants(cell.I.hi, false);
    if (!cell.I.lo.is_inf() && !cell.I.hi.is_inf()) {
        for (auto& [p, proots] : table.entries) {
            if (!vanishes_at(proots, cell.I.lo.value)) continue;
            for (auto& [q, qroots] : table.entries) {
                if (q == p) continue;
                if (vanishes_at(qroots, cell.I.hi.value))
                    out.polys.insert(res_counted(p, q, x, stats));
            }
        }
    }
    return out;
}

CellOrNull finish_projection(const SamplePoint& s, std::set<Polynomial> polys, Stats* stats) {
    ImplicitCell out;
    out.P = refine_basis(polys);
    out.s = s;
    if (s.level() == 0) {
        // root-level placeholder cell
        out.I = RInterval::full();
        return out;
    }
    auto iv = compute_cell(s, out.P, stats);
    if (auto* n = std::get_if<Nullified>(&iv)) return *n;
    out.I = std::get<RInterval>(iv);
    return out;
}

} // namespace

CellOrNull characterize_cell(const SamplePoint& s, const ImplicitCell& cell, Stats* stats) {
    assert(cell.level() == s.level() + 1);
    if (stats) ++stats->cells_characterized;
    Projection proj = project_cell(s, cell, stats);
    if (proj.nullified) return *proj.nullified;
    return finish_projection(s, std::move(proj.polys), stats);
}

namespace {

Rational poly_set_sotd(const std::set<Polynomial>& ps) {
    Rational t(0);
    for (auto& p : ps)
        for (auto& [m, c] : p.terms()) t += static_cast<long>(m.total_degree());
    return t;
}

// sort key: lower bound ascending; at equal lower bounds sections first
bool cover_order(const ImplicitCell& a, const ImplicitCell& b) {
    int c = bound_cmp(a.I.lo, b.I.lo);
    if (c != 0) return c < 0;
    if (a.I.section != b.I.section) return a.I.section;
    int cu = bound_cmp(a.I.hi, b.I.hi);
    if (cu != 0) return cu < 0;
    return a.P < b.P;
}

} // namespace

std::vector<ImplicitCell> compute_cover(std::vector<ImplicitCell> cells) {
    if (cells.empty()) throw std::invalid_argument("compute_cover: empty input");
    std::sort(cells.begin(), cells.end(), cover_order);

    // drop redundant cells: contained in another (ties by smaller sotd of P)
    std::vector<bool> dead(cells.size(), false);
    for (size_t i = 0; i < cells.size(); ++i) {
        if (dead[i]) continue;
        for (size_t j = 0; j < cells.size(); ++j) {
            if (i == j || dead[j] || dead[i]) continue;
            bool i_in_j = cells[i].I.subset_of(cells[j].I);
            bool j_in_i = cells[j].I.subset_of(cells[i].I);
            if (i_in_j && j_in_i) {
                // identical intervals: keep the cheaper projection
                if (poly_set_sotd(cells[i].P) <= poly_set_sotd(cells[j].P))
                    dead[j] = true;
                else
                    dead[i] = true;
            } else if (i_in_j) {
                dead[i] = true;
            } else if (j_in_i) {
                dead[j] = true;
            }
        }
    }
    std::vector<ImplicitCell> out;
    for (size_t i = 0; i < cells.size(); ++i)
        if (!dead[i]) out.push_back(std::move(cells[i]));

    // validate that the sequence covers the real line
    if (out.front().I.lo.kind != Bound::Kind::NegInf)
        throw std::invalid_argument("compute_cover: input does not cover the real line");
    Bound reach = out.front().I.hi;
    bool reach_closed = out.front().I.section;
    for (size_t j = 1; j < out.size(); ++j) {
        const RInterval& iv = out[j].I;
        int c = bound_cmp(iv.lo, reach);
        bool connects = c < 0 || (c == 0 && (reach_closed || iv.section));
        if (!connects)
            throw std::invalid_argument("compute_cover: input does not cover the real line");
        int cu = bound_cmp(iv.hi, reach);
        if (cu > 0) {
            reach = iv.hi;
            reach_closed = iv.section;
        } else if (cu == 0 && iv.section) {
            reach_closed = true;
        }
    }
    if (reach.kind != Bound::Kind::PosInf)
        throw std::invalid_argument("compute_cover: input does not cover the real line");
    return out;
}

CellOrNull characterize_covering(const SamplePoint& s, const std::vector<ImplicitCell>& cells,
                                 Stats* stats) {
    if (stats) ++stats->cells_characterized;
    std::vector<ImplicitCell> seq = compute_cover(cells);
    Var x(s.level() + 1);

    std::set<Polynomial> polys;
    for (auto& c : seq) {
        Projection proj = project_cell(s, c, stats);
        if (proj.nullified) return *proj.nullified;
        for (auto& p : proj.polys) polys.insert(p);
        if (stats) ++stats->cells_characterized;
    }

    // boundary resultants between consecutive cells
    for (size_t j = 0; j + 1 < seq.size(); ++j) {
        const ImplicitCell& a = seq[j];
        const ImplicitCell& b = seq[j + 1];
        assert(!a.I.hi.is_inf() && !b.I.lo.is_inf());
        for (auto& p : a.P) {
            if (p.level() != s.level() + 1) continue;
            auto pr = isolate_roots_at(p, s);
            if (!pr) return Nullified{p, s};
            if (!vanishes_at(*pr, a.I.hi.value)) continue;
            for (auto& q : b.P) {
                if (q.level() != s.level() + 1 || q == p) continue;
                auto qr = isolate_roots_at(q, s);
                if (!qr) return Nullified{q, s};
                if (!vanishes_at(*qr, b.I.lo.value)) continue;
                polys.insert(res_counted(p, q, x, stats));
            }
        }
    }
    return finish_projection(s, std::move(polys), stats);
}

Formula indexed_root_formula(const ImplicitCell& cell) {
    unsigned i = cell.level();
    assert(i >= 1);
    Var xi(i);
    SamplePoint prefix = cell.s.prefix(i - 1);

    auto root_index = [&](const Polynomial& p, const RAN& v) -> std::optional<unsigned> {
        auto roots = isolate_roots_at(p, prefix);
        if (!roots) return std::nullopt;
        for (size_t k = 0; k < roots->size(); ++k)
            if (compare((*roots)[k], v) == 0) return static_cast<unsigned>(k + 1);
        return std::nullopt;
    };

    FormulaList atoms;
    auto add_bound_atoms = [&](const Bound& b, Rel rel) {
        if (b.is_inf()) return;
        for (auto& p : cell.P) {
            if (p.level() != i) continue;
            auto idx = root_index(p, b.value);
            if (!idx) continue;
            atoms.push_back(Formula::xatom(ExtendedAtom{xi, rel, IndexedRootExpr{p, *idx}}));
        }
    };
    if (cell.I.section) {
        add_bound_atoms(cell.I.lo, Rel::Eq);
    } else {
        add_bound_atoms(cell.I.lo, Rel::Gt);  // root < x_i
        add_bound_atoms(cell.I.hi, Rel::Lt);  // x_i < root
    }
    return Formula::conjunction(std::move(atoms));
}

} // namespace nracov
