#include "nracov/implicants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace nracov {

std::string implicant_str(const Implicant& imp) {
    std::string s = "{";
    for (size_t i = 0; i < imp.size(); ++i) {
        if (i) s += ", ";
        s += imp[i].str();
    }
    return s + "}";
}

std::set<Polynomial> implicant_polynomials(const Implicant& imp) {
    std::set<Polynomial> out;
    for (auto& l : imp) out.insert(l.base.poly);
    return out;
}

namespace {

// ---- atom canonicalization -------------------------------------------------
// Atoms are keyed by (polynomial, base relation) with base in {Lt, Gt, Eq};
// the other relations are negations of these, so an atom and its negation
// share one key.

struct AtomRef {
    int id;
    bool neg;
};

std::pair<Constraint, bool> canonical_literal(const Constraint& c) {
    switch (c.rel) {
        case Rel::Ge: return {Constraint{c.poly, Rel::Lt}, true};
        case Rel::Le: return {Constraint{c.poly, Rel::Gt}, true};
        case Rel::Neq: return {Constraint{c.poly, Rel::Eq}, true};
        default: return {c, false};
    }
}

// ---- reason sets ------------------------------------------------------------
// A reason is a set of literals encoded as sorted vectors of (atom_id*2+neg).
// Sets of reasons are kept subsumption-minimal.

using Reason = std::vector<int>;
using ReasonSet = std::vector<Reason>;

bool subset_of(const Reason& a, const Reason& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool insert_reduced(ReasonSet& rs, Reason r, size_t budget) {
    for (auto& e : rs)
        if (subset_of(e, r)) return false;
    size_t removed = 0;
    for (size_t i = 0; i < rs.size();) {
        if (subset_of(r, rs[i])) {
            rs.erase(rs.begin() + i);
            ++removed;
        } else {
            ++i;
        }
    }
    if (budget && removed == 0 && rs.size() >= budget) return false;
    rs.push_back(std::move(r));
    return true;
}

Reason merge_reasons(const Reason& a, const Reason& b) {
    Reason out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// target ∪= a × b (pairwise unions)
bool union_cross(ReasonSet& target, const ReasonSet& a, const ReasonSet& b, size_t budget) {
    bool changed = false;
    for (auto& x : a)
        for (auto& y : b) changed |= insert_reduced(target, merge_reasons(x, y), budget);
    return changed;
}

bool union_into(ReasonSet& target, const ReasonSet& a, size_t budget) {
    bool changed = false;
    for (auto& x : a) changed |= insert_reduced(target, x, budget);
    return changed;
}

// ---- propagation context ----------------------------------------------------

struct PropContext {
    struct Node {
        FKind kind;                     // Atom, And, Or
        std::vector<AtomRef> kids;      // for And/Or: child node refs
        int atom_id = -1;               // for Atom
        size_t size = 1;                // node count (for exploration picks)
        size_t preorder = 0;            // leftmost-first tie-break
        bool in_formula = false;        // belongs to the matrix (not a clause)
        ReasonSet T, F;
    };

    std::vector<Constraint> atoms;            // canonical bases
    std::map<Constraint, int> atom_ids;       // base -> atom_id
    std::vector<int> atom_nodes;              // atom_id -> node id
    std::vector<Node> nodes;
    std::map<std::pair<int, std::vector<long>>, int> structural;  // (kind, kid keys) -> node
    std::vector<int> clause_ids;
    int root = -1;
    size_t budget = 0;
    size_t preorder_counter = 0;

    int atom_node(const Constraint& base) {
        auto it = atom_ids.find(base);
        if (it != atom_ids.end()) return atom_nodes[it->second];
        int aid = static_cast<int>(atoms.size());
        atoms.push_back(base);
        atom_ids.emplace(base, aid);
        Node n;
        n.kind = FKind::Atom;
        n.atom_id = aid;
        n.preorder = preorder_counter++;
        nodes.push_back(std::move(n));
        atom_nodes.push_back(static_cast<int>(nodes.size() - 1));
        return atom_nodes.back();
    }

    AtomRef build(const Formula& f) {
        switch (f.kind()) {
            case FKind::Atom: {
                auto [base, neg] = canonical_literal(f.constraint());
                return {atom_node(base), neg};
            }
            case FKind::Not: {
                AtomRef r = build(f.children()[0]);
                return {r.id, !r.neg};
            }
            case FKind::And:
            case FKind::Or: {
                std::vector<AtomRef> kids;
                std::vector<long> key;
                size_t sz = 1;
                for (auto& k : f.children()) {
                    AtomRef r = build(k);
                    kids.push_back(r);
                    key.push_back(r.id * 2 + (r.neg ? 1 : 0));
                    sz += nodes[r.id].size;
                }
                auto mk = std::make_pair(static_cast<int>(f.kind()), key);
                auto it = structural.find(mk);
                if (it != structural.end()) return {it->second, false};
                Node n;
                n.kind = f.kind();
                n.kids = std::move(kids);
                n.size = sz;
                n.preorder = preorder_counter++;
                nodes.push_back(std::move(n));
                int id = static_cast<int>(nodes.size() - 1);
                structural.emplace(mk, id);
                return {id, false};
            }
            default:
                throw std::logic_error("implicants: matrix must be quantifier-free NNF without "
                                       "constants");
        }
    }

    ReasonSet& tset(AtomRef r) { return r.neg ? nodes[r.id].F : nodes[r.id].T; }
    ReasonSet& fset(AtomRef r) { return r.neg ? nodes[r.id].T : nodes[r.id].F; }
};

// Mutual-exclusion clauses among base relations over a shared polynomial,
// e.g. not(p<0) or not(p>0). Added as Or-nodes decided True.
std::vector<int> add_exclusion_clauses(PropContext& ctx) {
    std::map<Polynomial, std::vector<int>> by_poly;  // atom node ids
    size_t natoms = ctx.nodes.size();
    for (size_t i = 0; i < natoms; ++i)
        if (ctx.nodes[i].kind == FKind::Atom)
            by_poly[ctx.atoms[ctx.nodes[i].atom_id].poly].push_back(static_cast<int>(i));
    std::vector<int> clauses;
    for (auto& [p, ids] : by_poly) {
        for (size_t i = 0; i < ids.size(); ++i) {
            for (size_t j = i + 1; j < ids.size(); ++j) {
                PropContext::Node n;
                n.kind = FKind::Or;
                n.kids = {{ids[i], true}, {ids[j], true}};
                n.preorder = ctx.preorder_counter++;
                ctx.nodes.push_back(std::move(n));
                clauses.push_back(static_cast<int>(ctx.nodes.size() - 1));
            }
        }
    }
    return clauses;
}

void init_atom_evals(PropContext& ctx, const SamplePoint& s) {
    for (auto& n : ctx.nodes) {
        if (n.kind != FKind::Atom) continue;
        const Constraint& c = ctx.atoms[n.atom_id];
        if (c.poly.level() > s.level()) continue;
        bool val = rel_holds(c.rel, sign_at(c.poly, s));
        int lit = n.atom_id * 2 + (val ? 0 : 1);
        if (val)
            insert_reduced(n.T, {lit}, ctx.budget);
        else
            insert_reduced(n.F, {lit}, ctx.budget);
    }
}

bool sweep(PropContext& ctx) {
    bool changed = false;
    size_t b = ctx.budget;
    for (auto& n : ctx.nodes) {
        if (n.kind == FKind::Atom) continue;
        // evaluate
        if (n.kind == FKind::And) {
            ReasonSet prod{{}};
            bool feasible = true;
            for (auto& k : n.kids) {
                ReasonSet next;
                if (ctx.tset(k).empty()) {
                    feasible = false;
                    break;
                }
                union_cross(next, prod, ctx.tset(k), 0);
                prod = std::move(next);
            }
            if (feasible) changed |= union_into(n.T, prod, b);
            for (auto& k : n.kids) changed |= union_into(n.F, ctx.fset(k), b);
        } else {
            ReasonSet prod{{}};
            bool feasible = true;
            for (auto& k : n.kids) {
                ReasonSet next;
                if (ctx.fset(k).empty()) {
                    feasible = false;
                    break;
                }
                union_cross(next, prod, ctx.fset(k), 0);
                prod = std::move(next);
            }
            if (feasible) changed |= union_into(n.F, prod, b);
            for (auto& k : n.kids) changed |= union_into(n.T, ctx.tset(k), b);
        }
        // propagate
        if (n.kind == FKind::And) {
            for (size_t j = 0; j < n.kids.size(); ++j) {
                changed |= union_into(ctx.tset(n.kids[j]), n.T, b);
                // F(kid_j) ∪= F(node) × prod_{l != j} T(kid_l)
                ReasonSet prod = n.F;
                bool feasible = !prod.empty();
                for (size_t l = 0; l < n.kids.size() && feasible; ++l) {
                    if (l == j) continue;
                    if (ctx.tset(n.kids[l]).empty()) {
                        feasible = false;
                        break;
                    }
                    ReasonSet next;
                    union_cross(next, prod, ctx.tset(n.kids[l]), 0);
                    prod = std::move(next);
                }
                if (feasible) changed |= union_into(ctx.fset(n.kids[j]), prod, b);
            }
        } else {
            for (size_t j = 0; j < n.kids.size(); ++j) {
                changed |= union_into(ctx.fset(n.kids[j]), n.F, b);
                ReasonSet prod = n.T;
                bool feasible = !prod.empty();
                for (size_t l = 0; l < n.kids.size() && feasible; ++l) {
                    if (l == j) continue;
                    if (ctx.fset(n.kids[l]).empty()) {
                        feasible = false;
                        break;
                    }
                    ReasonSet next;
                    union_cross(next, prod, ctx.fset(n.kids[l]), 0);
                    prod = std::move(next);
                }
                if (feasible) changed |= union_into(ctx.tset(n.kids[j]), prod, b);
            }
        }
    }
    return changed;
}

ReasonSet collect_conflicts(PropContext& ctx) {
    ReasonSet out;
    for (auto& n : ctx.nodes) {
        if (n.T.empty() || n.F.empty()) continue;
        union_cross(out, n.T, n.F, ctx.budget);
    }
    return out;
}

std::vector<Implicant> to_implicants(const PropContext& ctx, const ReasonSet& rs) {
    std::vector<Implicant> out;
    for (auto& r : rs) {
        Implicant imp;
        for (int lit : r) imp.push_back(Literal{ctx.atoms[lit / 2], lit % 2 == 1});
        std::sort(imp.begin(), imp.end());
        out.push_back(std::move(imp));
    }
    // deterministic order
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ReasonSet run_propagation(PropContext& ctx, const std::vector<AtomRef>& decisions,
                          const SamplePoint& s) {
    for (auto& n : ctx.nodes) {
        n.T.clear();
        n.F.clear();
    }
    init_atom_evals(ctx, s);
    for (auto d : decisions) insert_reduced(ctx.tset(d), Reason{}, ctx.budget);
    // clause nodes are valid, hence unconditionally true
    for (int c : ctx.clause_ids) insert_reduced(ctx.nodes[c].T, Reason{}, ctx.budget);
    int rounds = 0;
    while (sweep(ctx)) {
        if (++rounds > 10000) throw std::runtime_error("implicants: propagation did not converge");
    }
    return collect_conflicts(ctx);
}

ReasonSet explore_rec(PropContext& ctx, std::vector<AtomRef> decisions, const SamplePoint& s,
                      int depth) {
    ReasonSet res = run_propagation(ctx, decisions, s);
    if (!res.empty()) return res;
    if (depth > 64) return {};
    // undecided subformula of the matrix with the smallest size, leftmost
    int pick = -1;
    for (size_t i = 0; i < ctx.nodes.size(); ++i) {
        auto& n = ctx.nodes[i];
        if (!n.in_formula) continue;
        if (!n.T.empty() || !n.F.empty()) continue;
        if (pick < 0 || n.size < ctx.nodes[pick].size ||
            (n.size == ctx.nodes[pick].size && n.preorder < ctx.nodes[pick].preorder))
            pick = static_cast<int>(i);
    }
    if (pick < 0) return {};
    auto dpos = decisions;
    dpos.push_back({pick, false});
    ReasonSet a = explore_rec(ctx, dpos, s, depth + 1);
    if (a.empty()) return {};
    auto dneg = decisions;
    dneg.push_back({pick, true});
    ReasonSet b = explore_rec(ctx, dneg, s, depth + 1);
    if (b.empty()) return {};
    ReasonSet out;
    union_cross(out, a, b, ctx.budget);
    return out;
}

PropContext make_context(const Formula& matrix, size_t budget) {
    PropContext ctx;
    ctx.budget = budget;
    AtomRef root = ctx.build(matrix);
    ctx.root = root.id;
    for (auto& n : ctx.nodes) n.in_formula = true;
    ctx.clause_ids = add_exclusion_clauses(ctx);
    return ctx;
}

std::vector<AtomRef> resolve_decisions(PropContext& ctx, const std::vector<Decision>& D) {
    std::vector<AtomRef> out;
    for (auto& [f, neg] : D) {
        AtomRef r = ctx.build(f);
        out.push_back({r.id, r.neg != neg});
    }
    return out;
}

} // namespace

std::vector<Implicant> implicants_eval(const Formula& matrix, const SamplePoint& s,
                                       bool target_false) {
    std::function<std::vector<Implicant>(const Formula&, bool)> rec =
        [&](const Formula& f, bool want_false) -> std::vector<Implicant> {
        switch (f.kind()) {
            case FKind::True: return want_false ? std::vector<Implicant>{} : std::vector<Implicant>{{}};
            case FKind::False: return want_false ? std::vector<Implicant>{{}} : std::vector<Implicant>{};
            case FKind::Atom: {
                const Constraint& c = f.constraint();
                if (c.poly.level() > s.level()) return {};
                bool val = rel_holds(c.rel, sign_at(c.poly, s));
                auto [base, neg] = canonical_literal(c);
                if (want_false && !val) return {{Literal{base, !neg}}};
                if (!want_false && val) return {{Literal{base, neg}}};
                return {};
            }
            case FKind::Not: return rec(f.children()[0], !want_false);
            case FKind::And:
            case FKind::Or: {
                bool cross = (f.kind() == FKind::Or) == want_false;
                std::vector<std::vector<Implicant>> kid_sets;
                for (auto& k : f.children()) kid_sets.push_back(rec(k, want_false));
                if (cross) {
                    std::vector<Implicant> acc{{}};
                    for (auto& ks : kid_sets) {
                        if (ks.empty()) return {};
                        std::vector<Implicant> next;
                        for (auto& a : acc)
                            for (auto& b : ks) {
                                Implicant m;
                                std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                                               std::back_inserter(m));
                                next.push_back(std::move(m));
                            }
                        acc = std::move(next);
                    }
                    std::sort(acc.begin(), acc.end());
                    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
                    return acc;
                }
                std::vector<Implicant> acc;
                for (auto& ks : kid_sets)
                    for (auto& i : ks) acc.push_back(i);
                std::sort(acc.begin(), acc.end());
                acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
                return acc;
            }
            default: throw std::logic_error("implicants_eval: unexpected node");
        }
    };
    return rec(matrix, target_false);
}

std::vector<Implicant> implicants_propagate(const Formula& matrix, const std::vector<Decision>& D,
                                            const SamplePoint& s, size_t budget) {
    PropContext ctx = make_context(matrix, budget);
    auto ds = resolve_decisions(ctx, D);
    return to_implicants(ctx, run_propagation(ctx, ds, s));
}

std::vector<Implicant> implicants_explore(const Formula& matrix, const std::vector<Decision>& D,
                                          const SamplePoint& s, size_t budget) {
    PropContext ctx = make_context(matrix, budget);
    auto ds = resolve_decisions(ctx, D);
    return to_implicants(ctx, explore_rec(ctx, ds, s, 0));
}

namespace {

Rational sotd(const Implicant& imp) {
    Rational t(0);
    for (auto& l : imp)
        for (auto& [m, c] : l.base.poly.terms()) t += static_cast<long>(m.total_degree());
    return t;
}

std::tuple<Rational, Rational, Rational> feature_key(const Implicant& imp) {
    Rational sum_avg(0), all_sum(0);
    long all_count = 0;
    for (auto& l : imp) {
        Rational psum(0);
        long pcount = 0;
        for (auto& [m, c] : l.base.poly.terms()) {
            psum += static_cast<long>(m.total_degree());
            ++pcount;
        }
        if (pcount) sum_avg += psum / pcount;
        all_sum += psum;
        all_count += pcount;
    }
    Rational avg_all = all_count ? Rational(all_sum / all_count) : Rational(0);
    return {sum_avg, avg_all, all_sum};
}

} // namespace

const Implicant& select_implicant(const std::vector<Implicant>& cands, SelectionMetric metric) {
    if (cands.empty()) throw std::invalid_argument("select_implicant: empty candidate set");
    auto better = [&](const Implicant& a, const Implicant& b) {
        switch (metric) {
            case SelectionMetric::Size:
                if (a.size() != b.size()) return a.size() < b.size();
                break;
            case SelectionMetric::Sotd: {
                Rational sa = sotd(a), sb = sotd(b);
                if (sa != sb) return sa < sb;
                if (a.size() != b.size()) return a.size() < b.size();
                break;
            }
            case SelectionMetric::ReverseSotd: {
                Rational sa = sotd(a), sb = sotd(b);
                if (sa != sb) return sa > sb;
                if (a.size() != b.size()) return a.size() < b.size();
                break;
            }
            case SelectionMetric::FeatureBased: {
                auto ka = feature_key(a), kb = feature_key(b);
                if (ka != kb) return ka < kb;
                break;
            }
        }
        return a < b;  // deterministic tie-break
    };
    const Implicant* best = &cands[0];
    for (auto& c : cands)
        if (better(c, *best)) best = &c;
    return *best;
}

DecideResult decide_and_explain(const Formula& matrix, const SamplePoint& s, BooleanMode mode,
                                SelectionMetric metric, size_t budget) {
    DecideResult res;
    if (matrix.is_true()) {
        res.value = TruthValue3::True;
        res.candidates = 1;
        return res;
    }
    if (matrix.is_false()) {
        res.value = TruthValue3::False;
        res.candidates = 1;
        return res;
    }
    auto run = [&](bool target_false) -> std::vector<Implicant> {
        switch (mode) {
            case BooleanMode::Eval: return implicants_eval(matrix, s, target_false);
            case BooleanMode::Propagate:
                return implicants_propagate(matrix, {{matrix, !target_false}}, s, budget);
            case BooleanMode::Explore:
                return implicants_explore(matrix, {{matrix, !target_false}}, s, budget);
        }
        return {};
    };
    auto cand_false = run(true);
    res.candidates += cand_false.size();
    if (!cand_false.empty()) {
        res.value = TruthValue3::False;
        res.implicant = select_implicant(cand_false, metric);
        return res;
    }
    auto cand_true = run(false);
    res.candidates += cand_true.size();
    if (!cand_true.empty()) {
        res.value = TruthValue3::True;
        res.implicant = select_implicant(cand_true, metric);
        return res;
    }
    res.value = TruthValue3::Undef;
    return res;
}

} // namespace nracov
