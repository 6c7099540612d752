#include "nracov/engine.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace nracov {

std::string status_str(SolverStatus s) {
    switch (s) {
        case SolverStatus::Sat: return "sat";
        case SolverStatus::Unsat: return "unsat";
        default: return "unknown";
    }
}

namespace {

struct NullificationError {
    Polynomial poly;
    SamplePoint prefix;
};

[[noreturn]] void raise(const Nullified& n) { throw NullificationError{n.poly, n.prefix}; }

// covered components of the real line with endpoint inclusion flags
struct Component {
    Bound lo, hi;
    bool lo_closed = false, hi_closed = false;
};

std::vector<Component> merge_components(std::vector<ImplicitCell> cells) {
    std::sort(cells.begin(), cells.end(), [](const ImplicitCell& a, const ImplicitCell& b) {
        int c = bound_cmp(a.I.lo, b.I.lo);
        if (c != 0) return c < 0;
        if (a.I.section != b.I.section) return a.I.section;
        return bound_cmp(a.I.hi, b.I.hi) < 0;
    });
    std::vector<Component> comps;
    for (auto& cell : cells) {
        Component next{cell.I.lo, cell.I.hi, cell.I.section, cell.I.section};
        if (!comps.empty()) {
            Component& cur = comps.back();
            int c = bound_cmp(next.lo, cur.hi);
            bool connects = c < 0 || (c == 0 && (cur.hi_closed || next.lo_closed));
            if (connects) {
                int cu = bound_cmp(next.hi, cur.hi);
                if (cu > 0) {
                    cur.hi = next.hi;
                    cur.hi_closed = next.hi_closed;
                } else if (cu == 0) {
                    cur.hi_closed = cur.hi_closed || next.hi_closed;
                }
                continue;
            }
        }
        comps.push_back(next);
    }
    return comps;
}

bool component_contains(const Component& c, const RAN& v) {
    int cl = bound_cmp_value(c.lo, v);
    int ch = bound_cmp_value(c.hi, v);
    if (cl > 0 || ch < 0) return false;
    if (cl == 0 && !c.lo_closed) return false;
    if (ch == 0 && !c.hi_closed) return false;
    return true;
}

} // namespace

Engine::Engine(EngineConfig cfg) : cfg_(std::move(cfg)), matrix_(Formula::make_true()) {}

void Engine::preprocess(const Formula& f) {
    PrenexForm pf = to_prenex(f);
    unsigned maxv = f.max_var();
    num_vars_ = maxv;

    std::vector<unsigned> order = variable_order(pf, num_vars_, cfg_.var_order);
    std::vector<unsigned> remap(num_vars_ + 1, 0);
    to_original_.assign(num_vars_ + 1, 0);
    for (size_t pos = 0; pos < order.size(); ++pos) {
        remap[order[pos]] = static_cast<unsigned>(pos + 1);
        to_original_[pos + 1] = order[pos];
    }

    std::map<unsigned, Quantifier> qmap;
    for (auto& [q, v] : pf.prefix) qmap[remap[v.idx]] = q;
    num_params_ = num_vars_ - static_cast<unsigned>(pf.prefix.size());

    quant_.assign(num_vars_, Quantifier::Exists);
    for (unsigned lvl = num_params_ + 1; lvl <= num_vars_; ++lvl) {
        auto it = qmap.find(lvl);
        assert(it != qmap.end());
        quant_[lvl - 1] = it->second;
    }

    // remap matrix polynomials to the elimination order
    std::function<Formula(const Formula&)> remap_f = [&](const Formula& g) -> Formula {
        switch (g.kind()) {
            case FKind::Atom:
                return Formula::atom(Constraint(g.constraint().poly.remapped(remap),
                                                g.constraint().rel));
            case FKind::And:
            case FKind::Or: {
                FormulaList kids;
                for (auto& k : g.children()) kids.push_back(remap_f(k));
                return g.kind() == FKind::And ? Formula::conjunction(std::move(kids))
                                              : Formula::disjunction(std::move(kids));
            }
            default: return g;
        }
    };
    matrix_ = remap_f(pf.matrix);
}

DecideResult Engine::decide(const SamplePoint& s) {
    DecideResult d = decide_and_explain(matrix_, s, cfg_.boolean_mode, cfg_.selection,
                                        cfg_.candidate_budget);
    stats_.implicants_generated += d.candidates;
    return d;
}

ImplicitCell Engine::enclose(const DecideResult& d, const SamplePoint& s) {
    stats_.implicants_used += 1;
    auto r = cell_from_implicant(d.implicant, s, &stats_);
    if (auto* n = std::get_if<Nullified>(&r)) raise(*n);
    return std::get<ImplicitCell>(r);
}

ImplicitCell Engine::characterize(const SamplePoint& s, const ImplicitCell& cell, bool sat) {
    auto r = characterize_cell(s, cell, &stats_);
    if (auto* n = std::get_if<Nullified>(&r)) raise(*n);
    ImplicitCell out = std::get<ImplicitCell>(r);
    if (cfg_.trace)
        cfg_.trace->events.push_back(
            {TraceEvent::Kind::CellProjected, s.level(), sat, out.I, {}});
    return out;
}

ImplicitCell Engine::characterize_cover(const SamplePoint& s,
                                        const std::vector<ImplicitCell>& cells) {
    auto r = characterize_covering(s, cells, &stats_);
    if (auto* n = std::get_if<Nullified>(&r)) raise(*n);
    ImplicitCell out = std::get<ImplicitCell>(r);
    if (cfg_.trace) {
        TraceEvent ev{TraceEvent::Kind::CoveringProjected, s.level(), false, out.I, {}};
        for (auto& c : compute_cover(cells)) ev.covering.push_back(c.I);
        cfg_.trace->events.push_back(std::move(ev));
    }
    return out;
}

std::optional<RAN> Engine::sample_outside(const std::vector<ImplicitCell>& excluded,
                                          unsigned level) {
    auto forced = cfg_.forced_samples.find(level);
    if (forced != cfg_.forced_samples.end() && !forced->second.empty()) {
        Rational v = forced->second.front();
        forced->second.pop_front();
        for (auto& c : excluded) assert(!c.I.contains(RAN(v)));
        return RAN(v);
    }

    if (excluded.empty()) return RAN(0);
    std::vector<Component> comps = merge_components(excluded);

    // 0 when uncovered
    RAN zero(0);
    bool zero_covered = false;
    for (auto& c : comps)
        if (component_contains(c, zero)) zero_covered = true;
    if (!zero_covered) return zero;

    // integer below all intervals
    if (comps.front().lo.kind == Bound::Kind::Value) {
        const RAN& v = comps.front().lo.value;
        Integer n = ran_floor(v);
        bool on_boundary = compare(v, Rational(n)) == 0;
        if (on_boundary && comps.front().lo_closed) n -= 1;
        return RAN(Rational(n));
    }
    // integer above all intervals
    if (comps.back().hi.kind == Bound::Kind::Value) {
        const RAN& v = comps.back().hi.value;
        Integer n = ran_ceil(v);
        bool on_boundary = compare(v, Rational(n)) == 0;
        if (on_boundary && comps.back().hi_closed) n += 1;
        return RAN(Rational(n));
    }

    // interior gaps
    struct Gap {
        RAN lo, hi;       // hi meaningful unless point
        bool lo_in, hi_in;
        bool point;
    };
    std::vector<Gap> gaps;
    for (size_t i = 0; i + 1 < comps.size(); ++i) {
        const Component& a = comps[i];
        const Component& b = comps[i + 1];
        assert(a.hi.kind == Bound::Kind::Value && b.lo.kind == Bound::Kind::Value);
        int c = compare(a.hi.value, b.lo.value);
        if (c == 0) {
            gaps.push_back({a.hi.value, a.hi.value, true, true, true});
        } else {
            gaps.push_back({a.hi.value, b.lo.value, !a.hi_closed, !b.lo_closed, false});
        }
    }
    if (gaps.empty()) return std::nullopt;

    std::optional<Rational> best;
    auto nicer = [](const Rational& a, const Rational& b) {
        bool ia = is_integer(a), ib = is_integer(b);
        if (ia != ib) return ia;
        if (ia) return rat_abs(a) != rat_abs(b) ? rat_abs(a) < rat_abs(b) : a < b;
        if (a.get_den() != b.get_den()) return a.get_den() < b.get_den();
        return rat_abs(a) != rat_abs(b) ? rat_abs(a) < rat_abs(b) : a < b;
    };
    auto offer = [&](const Rational& v) {
        if (!best || nicer(v, *best)) best = v;
    };
    for (auto& g : gaps) {
        if (g.point) {
            if (g.lo.is_rational()) offer(g.lo.rational_value());
            continue;
        }
        offer(pick_value_in(Bound::at(g.lo), Bound::at(g.hi)));
        if (g.lo_in && g.lo.is_rational()) offer(g.lo.rational_value());
        if (g.hi_in && g.hi.is_rational()) offer(g.hi.rational_value());
    }
    if (best) return RAN(*best);
    // algebraic gap point, only when forced
    for (auto& g : gaps)
        if (g.point) return g.lo;
    for (auto& g : gaps) {
        if (g.lo_in) return g.lo;
        if (g.hi_in) return g.hi;
    }
    return std::nullopt;  // unreachable for well-formed gaps
}

Engine::Outcome Engine::recurse(const SamplePoint& s) {
    unsigned i = s.level() + 1;
    assert(i <= num_vars_);
    return quant_[i - 1] == Quantifier::Exists ? exists_level(s) : forall_level(s);
}

Engine::Outcome Engine::exists_level(const SamplePoint& s) {
    unsigned i = s.level() + 1;
    std::vector<ImplicitCell> unsat_cells;
    while (auto v = sample_outside(unsat_cells, i)) {
        ++stats_.samples_tried;
        SamplePoint si = s.extended(*v);
        DecideResult d = decide(si);
        bool sat;
        ImplicitCell cell;
        if (d.value != TruthValue3::Undef) {
            sat = d.value == TruthValue3::True;
            cell = enclose(d, si);
        } else {
            assert(i < num_vars_);
            Outcome o = recurse(si);
            sat = o.sat;
            cell = std::move(o.cell);
        }
        if (sat) return {true, characterize(s, cell, true)};
        unsat_cells.push_back(std::move(cell));
    }
    return {false, characterize_cover(s, unsat_cells)};
}

Engine::Outcome Engine::forall_level(const SamplePoint& s) {
    unsigned i = s.level() + 1;
    std::vector<ImplicitCell> sat_cells;
    while (auto v = sample_outside(sat_cells, i)) {
        ++stats_.samples_tried;
        SamplePoint si = s.extended(*v);
        DecideResult d = decide(si);
        bool sat;
        ImplicitCell cell;
        if (d.value != TruthValue3::Undef) {
            sat = d.value == TruthValue3::True;
            cell = enclose(d, si);
        } else {
            assert(i < num_vars_);
            Outcome o = recurse(si);
            sat = o.sat;
            cell = std::move(o.cell);
        }
        if (!sat) return {false, characterize(s, cell, false)};
        sat_cells.push_back(std::move(cell));
    }
    return {true, characterize_cover(s, sat_cells)};
}

SolverResult Engine::check_truth(const Formula& sentence) {
    preprocess(sentence);
    if (matrix_.is_true()) return {SolverStatus::Sat, ""};
    if (matrix_.is_false()) return {SolverStatus::Unsat, ""};
    if (num_params_ != 0)
        throw std::invalid_argument("check_truth: input is not a sentence");
    try {
        Outcome o = recurse(SamplePoint{});
        return {o.sat ? SolverStatus::Sat : SolverStatus::Unsat, ""};
    } catch (const NullificationError& e) {
        Polynomial orig = e.poly.remapped(to_original_);
        return {SolverStatus::Unknown,
                "nullified polynomial " + orig.str() + " over sample prefix " + e.prefix.str()};
    }
}

// ---------------------------------------------------------------------------
// Quantifier elimination

std::pair<std::vector<CoveringTree>, ImplicitCell> Engine::parameter_level(const SamplePoint& s) {
    unsigned i = s.level() + 1;
    std::vector<ImplicitCell> cells;
    std::vector<CoveringTree> payload;
    while (auto v = sample_outside(cells, i)) {
        ++stats_.samples_tried;
        SamplePoint si = s.extended(*v);
        DecideResult d = decide(si);
        CoveringTree node;
        ImplicitCell cell;
        if (d.value != TruthValue3::Undef) {
            cell = enclose(d, si);
            node.leaf = d.value == TruthValue3::True;
        } else if (i < num_params_) {
            auto [kids, c] = parameter_level(si);
            node.children = std::move(kids);
            cell = std::move(c);
        } else {
            assert(i < num_vars_);
            Outcome o = recurse(si);
            node.leaf = o.sat;
            cell = std::move(o.cell);
        }
        node.interval_formula = indexed_root_formula(cell);
        cells.push_back(cell);
        payload.push_back(std::move(node));
    }
    // order and prune the children like the covering sequence
    std::vector<CoveringTree> ordered;
    {
        std::vector<ImplicitCell> kept = compute_cover(cells);
        std::vector<bool> used(cells.size(), false);
        for (auto& k : kept) {
            for (size_t idx = 0; idx < cells.size(); ++idx) {
                if (used[idx]) continue;
                if (cells[idx].P == k.P && cells[idx].I.section == k.I.section &&
                    bound_cmp(cells[idx].I.lo, k.I.lo) == 0 &&
                    bound_cmp(cells[idx].I.hi, k.I.hi) == 0) {
                    used[idx] = true;
                    ordered.push_back(std::move(payload[idx]));
                    break;
                }
            }
        }
    }
    return {std::move(ordered), characterize_cover(s, cells)};
}

namespace {

// split an interval formula into lower-bound and upper-bound atoms
void split_bounds(const Formula& f, FormulaList& lower, FormulaList& upper) {
    auto visit = [&](const Formula& atom) {
        assert(atom.kind() == FKind::XAtom);
        ExtendedAtom a = atom.xatom_value();
        switch (a.rel) {
            case Rel::Gt:
            case Rel::Ge: lower.push_back(atom); break;
            case Rel::Lt:
            case Rel::Le: upper.push_back(atom); break;
            case Rel::Eq: {
                ExtendedAtom lo = a, hi = a;
                lo.rel = Rel::Ge;
                hi.rel = Rel::Le;
                lower.push_back(Formula::xatom(lo));
                upper.push_back(Formula::xatom(hi));
                break;
            }
            default: assert(false);
        }
    };
    if (f.is_true()) return;
    if (f.kind() == FKind::XAtom) {
        visit(f);
        return;
    }
    assert(f.kind() == FKind::And);
    for (auto& k : f.children()) visit(k);
}

} // namespace

std::string CoveringTree::str() const {
    std::string s = "[" + interval_formula.str();
    if (is_leaf()) {
        s += *leaf ? " -> true" : " -> false";
    } else {
        s += " : ";
        for (size_t i = 0; i < children.size(); ++i) {
            if (i) s += ", ";
            s += children[i].str();
        }
    }
    return s + "]";
}

CoveringTree simplify_tree(CoveringTree t) {
    if (t.is_leaf()) return t;
    for (auto& c : t.children) c = simplify_tree(std::move(c));

    // rule 1: merge neighboring leaf children with equal labels
    std::vector<CoveringTree> merged;
    for (auto& c : t.children) {
        if (!merged.empty() && merged.back().is_leaf() && c.is_leaf() &&
            *merged.back().leaf == *c.leaf) {
            FormulaList lower, upper, ignored;
            split_bounds(merged.back().interval_formula, lower, ignored);
            split_bounds(c.interval_formula, ignored, upper);
            CoveringTree m;
            m.leaf = *c.leaf;
            FormulaList atoms = lower;
            for (auto& u : upper) atoms.push_back(u);
            m.interval_formula = Formula::conjunction(std::move(atoms));
            merged.back() = std::move(m);
        } else {
            merged.push_back(std::move(c));
        }
    }
    t.children = std::move(merged);

    // rule 2: adopt a single leaf child's label
    if (t.children.size() == 1 && t.children[0].is_leaf()) {
        t.leaf = *t.children[0].leaf;
        t.children.clear();
    }
    return t;
}

Formula encode_tree(const CoveringTree& t, bool describe_unsat) {
    if (t.is_leaf()) {
        bool match = *t.leaf != describe_unsat;
        return match ? t.interval_formula : Formula::make_false();
    }
    size_t n_true = 0, n_false = 0;
    for (auto& c : t.children) {
        if (!c.is_leaf()) continue;
        (*c.leaf ? n_true : n_false)++;
    }
    bool encode_true_side = n_true <= n_false;
    FormulaList parts;
    for (auto& c : t.children) {
        if (c.is_leaf()) {
            if (*c.leaf == encode_true_side) parts.push_back(c.interval_formula);
        } else {
            parts.push_back(encode_tree(c, !encode_true_side));
        }
    }
    Formula dis = Formula::disjunction(std::move(parts));
    if (encode_true_side == describe_unsat) dis = Formula::negation(std::move(dis));
    return Formula::conjunction({t.interval_formula, std::move(dis)});
}

QEResult Engine::eliminate_quantifiers(const Formula& f) {
    QEResult out;
    preprocess(f);
    if (matrix_.is_true() || matrix_.is_false()) {
        out.status = SolverStatus::Sat;
        out.solution = matrix_;
        out.tree.interval_formula = Formula::make_true();
        out.tree.leaf = matrix_.is_true();
        return out;
    }
    try {
        if (num_params_ == 0) {
            Outcome o = recurse(SamplePoint{});
            out.solution = Formula::boolean(o.sat);
            out.tree.interval_formula = Formula::make_true();
            out.tree.leaf = o.sat;
            return out;
        }
        auto [kids, cell] = parameter_level(SamplePoint{});
        CoveringTree root;
        root.interval_formula = Formula::make_true();
        root.children = std::move(kids);
        root = simplify_tree(std::move(root));
        Formula enc = to_nnf(encode_tree(root));
        // back to the caller's variable indexing (restricted to parameters,
        // whose relative order is preserved)
        std::function<Formula(const Formula&)> unmap = [&](const Formula& g) -> Formula {
            switch (g.kind()) {
                case FKind::Atom:
                    return Formula::atom(
                        Constraint(g.constraint().poly.remapped(to_original_), g.constraint().rel));
                case FKind::XAtom: {
                    ExtendedAtom a = g.xatom_value();
                    a.var = Var(to_original_[a.var.idx]);
                    a.root.poly = a.root.poly.remapped(to_original_);
                    return Formula::xatom(a);
                }
                case FKind::Not: return Formula::negation(unmap(g.children()[0]));
                case FKind::And:
                case FKind::Or: {
                    FormulaList kids2;
                    for (auto& k : g.children()) kids2.push_back(unmap(k));
                    return g.kind() == FKind::And ? Formula::conjunction(std::move(kids2))
                                                  : Formula::disjunction(std::move(kids2));
                }
                default: return g;
            }
        };
        std::function<CoveringTree(const CoveringTree&)> unmap_tree =
            [&](const CoveringTree& node) {
                CoveringTree m;
                m.interval_formula = unmap(node.interval_formula);
                m.leaf = node.leaf;
                for (auto& c : node.children) m.children.push_back(unmap_tree(c));
                return m;
            };
        out.solution = unmap(enc);
        out.tree = unmap_tree(root);
        return out;
    } catch (const NullificationError& e) {
        out.status = SolverStatus::Unknown;
        Polynomial orig = e.poly.remapped(to_original_);
        out.reason =
            "nullified polynomial " + orig.str() + " over sample prefix " + e.prefix.str();
        out.solution = Formula::make_false();
        return out;
    }
}

} // namespace nracov
