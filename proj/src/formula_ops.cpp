#include "nracov/formula_ops.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nracov {

namespace {

Formula nnf(const Formula& f, bool positive) {
    switch (f.kind()) {
        case FKind::True: return Formula::boolean(positive);
        case FKind::False: return Formula::boolean(!positive);
        case FKind::Atom:
            return positive ? f : Formula::atom(f.constraint().negated());
        case FKind::XAtom: {
            if (positive) return f;
            ExtendedAtom a = f.xatom_value();
            a.rel = negate_rel(a.rel);
            return Formula::xatom(a);
        }
        case FKind::Not: return nnf(f.children()[0], !positive);
        case FKind::And:
        case FKind::Or: {
            FormulaList kids;
            for (auto& k : f.children()) kids.push_back(nnf(k, positive));
            bool conj = (f.kind() == FKind::And) == positive;
            return conj ? Formula::conjunction(std::move(kids)) : Formula::disjunction(std::move(kids));
        }
        case FKind::Exists:
        case FKind::Forall: {
            bool ex = (f.kind() == FKind::Exists) == positive;
            return Formula::quantified(ex ? Quantifier::Exists : Quantifier::Forall, f.qvar(),
                                       nnf(f.children()[0], positive));
        }
    }
    return f;
}

void prenex_collect(const Formula& f, std::vector<std::pair<Quantifier, Var>>& prefix,
                    Formula& matrix_out) {
    switch (f.kind()) {
        case FKind::Exists:
        case FKind::Forall: {
            prefix.emplace_back(f.kind() == FKind::Exists ? Quantifier::Exists : Quantifier::Forall,
                                f.qvar());
            prenex_collect(f.children()[0], prefix, matrix_out);
            return;
        }
        case FKind::And:
        case FKind::Or: {
            FormulaList mats;
            for (auto& k : f.children()) {
                Formula m;
                prenex_collect(k, prefix, m);
                mats.push_back(std::move(m));
            }
            matrix_out = f.kind() == FKind::And ? Formula::conjunction(std::move(mats))
                                                : Formula::disjunction(std::move(mats));
            return;
        }
        default: matrix_out = f; return;
    }
}

void collect_atom_polys(const Formula& f, std::vector<Polynomial>& out) {
    switch (f.kind()) {
        case FKind::Atom: out.push_back(f.constraint().poly); break;
        case FKind::XAtom: out.push_back(f.xatom_value().root.poly); break;
        default:
            for (auto& k : f.children()) collect_atom_polys(k, out);
    }
}

} // namespace

Formula to_nnf(const Formula& f) { return nnf(f, true); }

PrenexForm to_prenex(const Formula& f) {
    Formula n = to_nnf(f);
    PrenexForm pf;
    prenex_collect(n, pf.prefix, pf.matrix);
    return pf;
}

TruthValue3 evaluate_partial(const Formula& f, const SamplePoint& s) {
    switch (f.kind()) {
        case FKind::True: return TruthValue3::True;
        case FKind::False: return TruthValue3::False;
        case FKind::Atom: {
            const Constraint& c = f.constraint();
            if (c.poly.level() > s.level()) return TruthValue3::Undef;
            return rel_holds(c.rel, sign_at(c.poly, s)) ? TruthValue3::True : TruthValue3::False;
        }
        case FKind::XAtom: return TruthValue3::Undef;
        case FKind::Not: return tv3_not(evaluate_partial(f.children()[0], s));
        case FKind::And: {
            bool undef = false;
            for (auto& k : f.children()) {
                TruthValue3 v = evaluate_partial(k, s);
                if (v == TruthValue3::False) return TruthValue3::False;
                if (v == TruthValue3::Undef) undef = true;
            }
            return undef ? TruthValue3::Undef : TruthValue3::True;
        }
        case FKind::Or: {
            bool undef = false;
            for (auto& k : f.children()) {
                TruthValue3 v = evaluate_partial(k, s);
                if (v == TruthValue3::True) return TruthValue3::True;
                if (v == TruthValue3::Undef) undef = true;
            }
            return undef ? TruthValue3::Undef : TruthValue3::False;
        }
        default:
            assert(false && "evaluate_partial: quantifier in matrix");
            return TruthValue3::Undef;
    }
}

std::vector<unsigned> variable_order(const PrenexForm& pf, unsigned num_vars,
                                     VarOrderHeuristic h) {
    std::vector<Polynomial> polys;
    collect_atom_polys(pf.matrix, polys);

    // blocks: parameters first, then runs of equal quantifiers
    std::set<unsigned> quantified;
    for (auto& [q, v] : pf.prefix) quantified.insert(v.idx);
    std::vector<std::vector<unsigned>> blocks;
    std::vector<unsigned> params;
    for (unsigned i = 1; i <= num_vars; ++i)
        if (!quantified.count(i)) params.push_back(i);
    if (!params.empty()) blocks.push_back(params);
    for (size_t k = 0; k < pf.prefix.size(); ++k) {
        if (k == 0 || pf.prefix[k].first != pf.prefix[k - 1].first) blocks.push_back({});
        blocks.back().push_back(pf.prefix[k].second.idx);
    }

    auto order_block_features = [&](std::vector<unsigned>& block) {
        auto features = [&](unsigned vi) {
            Var v(vi);
            unsigned maxdeg = 0, maxtd = 0, nterms = 0;
            for (auto& p : polys) {
                for (auto& [m, c] : p.terms()) {
                    if (m.deg(v) == 0) continue;
                    maxdeg = std::max<unsigned>(maxdeg, m.deg(v));
                    maxtd = std::max<unsigned>(maxtd, m.total_degree());
                    ++nterms;
                }
            }
            return std::make_tuple(maxdeg, maxtd, nterms, vi);
        };
        std::stable_sort(block.begin(), block.end(),
                         [&](unsigned a, unsigned b) { return features(a) < features(b); });
    };

    std::set<unsigned> chosen;  // variables placed so far, across blocks
    auto order_block_max_univariate = [&](std::vector<unsigned>& block) {
        std::vector<unsigned> out;
        std::vector<unsigned> rest = block;
        while (!rest.empty()) {
            unsigned best = rest[0];
            long best_count = -1;
            for (unsigned cand : rest) {
                long count = 0;
                for (auto& p : polys) {
                    if (!p.contains_var(Var(cand))) continue;
                    bool univar = true;
                    for (auto v : p.vars())
                        if (v.idx != cand && !chosen.count(v.idx)) univar = false;
                    if (univar) ++count;
                }
                if (count > best_count) {
                    best_count = count;
                    best = cand;
                }
            }
            out.push_back(best);
            chosen.insert(best);
            rest.erase(std::find(rest.begin(), rest.end(), best));
        }
        block = out;
    };

    std::vector<unsigned> result;
    for (auto& block : blocks) {
        std::vector<unsigned> b = block;
        if (h == VarOrderHeuristic::FeatureBased)
            order_block_features(b);
        else
            order_block_max_univariate(b);
        for (auto v : b) {
            result.push_back(v);
            chosen.insert(v);
        }
    }
    // variables that appear nowhere still need positions
    for (unsigned i = 1; i <= num_vars; ++i)
        if (!chosen.count(i)) result.push_back(i);
    return result;
}

} // namespace nracov
