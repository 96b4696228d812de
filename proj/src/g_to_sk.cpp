// g_to_sk.cpp — translation of checked graphical proofs into SK proofs
// of ⊤⊢π(G).
//
// Every kernel step g→h becomes a sequent π(g)⊢π(h): a local lemma at
// the rewrite area, lifted through the surrounding formula context by
// monotone replacement, then re-folded to the canonical shape of π(h).
// The exception is DMN, whose local implication is not valid as a
// sequent; DMN fires at the root only, and its step is translated
// directly from ⊤⊢π(g) via ◇-monotonicity over a validated implication.
//
// The Normality identification (the empty broken cut printing as "()")
// shows up on the formula side as occurrences of ◇¬⊤ collapsing to ¬⊤;
// the congruence builders treat both as ⊥ and bridge them with Gen and
// ex falso.

#include "pmk/bridge.hpp"
#include "pmk/sk_builders.hpp"

#include <functional>
#include <map>

namespace pmk {

namespace sb = sk_build;

namespace {

Formula nn(const Formula& f) { return Formula::negate(Formula::negate(f)); }
Formula dia(const Formula& f) { return Formula::negate(Formula::box(Formula::negate(f))); }
Formula nbx(const Formula& x) { return Formula::negate(dia(Formula::negate(x))); }

bool is_dia_pattern(const Formula& f, Formula* inner = nullptr) {
    if (f.kind() != FormulaKind::Not) return false;
    Formula b = f.left();
    if (b.kind() != FormulaKind::Box) return false;
    Formula n = b.left();
    if (n.kind() != FormulaKind::Not) return false;
    if (inner) *inner = n.left();
    return true;
}

// ---------------------------------------------------------------------------
// Normality-aware conjunction congruence.

void flatten_spine(const Formula& f, std::vector<Formula>& out) {
    if (f.kind() == FormulaKind::And) {
        flatten_spine(f.left(), out);
        flatten_spine(f.right(), out);
    } else if (f.kind() != FormulaKind::Top) {
        out.push_back(f);
    }
}

std::string norm_key(const Formula& f) {
    switch (f.kind()) {
    case FormulaKind::Atom: return f.name();
    case FormulaKind::Top: return "T";
    case FormulaKind::Box: return "[]" + norm_key(f.left());
    case FormulaKind::Not: {
        Formula inner;
        if (is_dia_pattern(f, &inner)) {
            std::string k = norm_key(Formula::negate(inner));
            if (k == "~T") return "~T"; // ◇⊥ collapses to ⊥
            return "~[]~" + k;
        }
        return "~" + norm_key(f.left());
    }
    case FormulaKind::And: {
        std::vector<Formula> parts;
        flatten_spine(f, parts);
        std::vector<std::string> keys;
        for (const Formula& p : parts) keys.push_back(norm_key(p));
        std::sort(keys.begin(), keys.end());
        if (keys.empty()) return "T";
        std::string out = "(&";
        for (const std::string& k : keys) out += " " + k;
        return out + ")";
    }
    }
    return {};
}

// f ⊢ ¬⊤ for any f whose norm key is ~T.
SKProof to_bottom(const Formula& f) {
    Formula bot = Formula::negate(Formula::top());
    if (f == bot) return sb::id(f);
    Formula w;
    if (is_dia_pattern(f, &w)) {
        // f = ◇(¬w-ish); push down, then ◇⊥ ⊢ ⊥ via Gen.
        Formula nw = Formula::negate(w);
        SKProof inner = to_bottom(nw); // ¬w ⊢ ¬⊤
        SKProof mono = sb::diamond_mono(std::move(inner)); // ◇¬w ⊢ ◇¬⊤
        // ◇¬⊤ = ¬□¬¬⊤ ⊢ ¬⊤: from Gen, ⊤ ⊢ □¬¬⊤, contraposed.
        SKProof gen{SKRule::Gen, {Formula::top(), Formula::box(Formula::top())}, {}};
        SKProof boxed = sb::tr(std::move(gen), sb::box_rule(sb::dneg_intro(Formula::top())));
        SKProof elim = sb::neg_antitone(std::move(boxed)); // ¬□¬¬⊤ ⊢ ¬⊤
        return sb::tr(std::move(mono), std::move(elim));
    }
    throw SchemaError("formula is not a bottom form: " + f.print());
}

// ¬⊤ ⊢ t for any t.
SKProof from_bottom(const Formula& t) {
    Formula bot = Formula::negate(Formula::top());
    SKProof pair = sb::and_r(sb::ax_top(bot), sb::id(bot)); // ¬⊤ ⊢ ⊤∧¬⊤
    return sb::tr(std::move(pair), sb::exfalso(Formula::top(), t));
}

SKProof norm_congr(const Formula& from, const Formula& to);

SKProof proj_spine(const Formula& tree, std::size_t leaf, SKProof cont) {
    std::function<std::optional<SKProof>(const Formula&, std::size_t&)> rec =
        [&](const Formula& f, std::size_t& idx) -> std::optional<SKProof> {
        if (f.kind() == FormulaKind::And) {
            if (auto l = rec(f.left(), idx)) return sb::and_l1(f.right(), std::move(*l));
            if (auto r = rec(f.right(), idx)) return sb::and_l2(f.left(), std::move(*r));
            return std::nullopt;
        }
        if (f.kind() == FormulaKind::Top) return std::nullopt;
        if (idx++ == leaf) return std::move(cont);
        return std::nullopt;
    };
    std::size_t idx = 0;
    auto out = rec(tree, idx);
    if (!out) throw SchemaError("conjunction projection out of range");
    return std::move(*out);
}

// from ⊢ to for `to` matching one spine leaf of `from` (norm keys).
SKProof norm_leaf(const Formula& from, const Formula& to) {
    if (to.kind() == FormulaKind::Top) return sb::ax_top(from);
    std::vector<Formula> leaves;
    flatten_spine(from, leaves);
    std::string key = norm_key(to);
    for (std::size_t i = 0; i < leaves.size(); ++i)
        if (norm_key(leaves[i]) == key)
            return proj_spine(from, i, norm_congr(leaves[i], to));
    throw SchemaError("no conjunct matches " + to.print());
}

SKProof norm_congr(const Formula& from, const Formula& to) {
    if (from == to) return sb::id(from);
    std::string kf = norm_key(from), kt = norm_key(to);
    if (kf != kt)
        throw SchemaError("not congruent: " + from.print() + " vs " + to.print());
    if (kf == "~T" )
        return sb::tr(to_bottom(from), from_bottom(to));
    if (kt == "T") {
        // to is ⊤ or an all-⊤ conjunction; rebuild it from axioms.
        std::function<SKProof(const Formula&)> build = [&](const Formula& t) -> SKProof {
            if (t.kind() == FormulaKind::And)
                return sb::and_r(build(t.left()), build(t.right()));
            return sb::ax_top(from);
        };
        return build(to);
    }
    switch (to.kind()) {
    case FormulaKind::Atom: return sb::id(from);
    case FormulaKind::Not: {
        Formula fi, ti;
        bool fd = is_dia_pattern(from, &fi), td = is_dia_pattern(to, &ti);
        if (fd == td) {
            if (!fd) return sb::neg_antitone(norm_congr(to.left(), from.left()));
            // Both ◇-shaped: ◇a ⊢ ◇b from ¬-inner congruence.
            return sb::diamond_mono(norm_congr(Formula::negate(fi), Formula::negate(ti)));
        }
        // Mixed ◇/strict shapes that are not bottoms only differ inside.
        return sb::neg_antitone(norm_congr(to.left(), from.left()));
    }
    case FormulaKind::Box: return sb::box_rule(norm_congr(from.left(), to.left()));
    case FormulaKind::And: {
        std::vector<Formula> from_leaves, to_leaves;
        flatten_spine(from, from_leaves);
        flatten_spine(to, to_leaves);
        std::vector<bool> used(from_leaves.size(), false);
        std::vector<SKProof> parts;
        for (const Formula& t : to_leaves) {
            std::string key = norm_key(t);
            bool found = false;
            for (std::size_t i = 0; i < from_leaves.size(); ++i) {
                if (used[i] || norm_key(from_leaves[i]) != key) continue;
                used[i] = true;
                parts.push_back(proj_spine(from, i, norm_congr(from_leaves[i], t)));
                found = true;
                break;
            }
            if (!found) throw SchemaError("missing conjunct " + t.print());
        }
        std::size_t idx = 0;
        std::function<SKProof(const Formula&)> rebuild = [&](const Formula& t) -> SKProof {
            if (t.kind() == FormulaKind::And) {
                SKProof l = rebuild(t.left());
                SKProof r = rebuild(t.right());
                return sb::and_r(std::move(l), std::move(r));
            }
            if (t.kind() == FormulaKind::Top) return sb::ax_top(from);
            return std::move(parts[idx++]);
        };
        return rebuild(to);
    }
    default: throw SchemaError("unreachable congruence case");
    }
}

// from ⊢ to where to's leaves are a sub-multiset of from's.
SKProof sub_fold(const Formula& from, const Formula& to) {
    if (to.kind() == FormulaKind::Top) return sb::ax_top(from);
    if (to.kind() != FormulaKind::And) return norm_leaf(from, to);
    std::vector<Formula> to_leaves;
    flatten_spine(to, to_leaves);
    std::vector<SKProof> parts;
    for (const Formula& t : to_leaves) parts.push_back(norm_leaf(from, t));
    std::size_t idx = 0;
    std::function<SKProof(const Formula&)> rebuild = [&](const Formula& t) -> SKProof {
        if (t.kind() == FormulaKind::And) {
            SKProof l = rebuild(t.left());
            SKProof r = rebuild(t.right());
            return sb::and_r(std::move(l), std::move(r));
        }
        if (t.kind() == FormulaKind::Top) return sb::ax_top(from);
        return std::move(parts[idx++]);
    };
    return rebuild(to);
}

// ---------------------------------------------------------------------------
// Boolean and modal lemma kit.

// (a ∧ ¬(a∧b)) ⊢ ¬b
SKProof conj_neg_cancel(const Formula& a, const Formula& b) {
    Formula ab = Formula::conj(a, b);
    Formula nab = Formula::negate(ab);
    Formula w = Formula::conj(a, nab);
    SKProof w_a = sb::and_l1(nab, sb::id(a));
    SKProof caseT = sb::tr(
        sb::and_r(sb::and_r(sb::and_l1(b, sb::and_l1(nab, sb::id(a))),
                            sb::and_l2(w, sb::id(b))),
                  sb::and_l1(b, sb::and_l2(a, sb::id(nab)))),
        sb::exfalso(ab, Formula::negate(b)));
    (void)w_a;
    SKProof caseF = sb::and_l2(w, sb::id(Formula::negate(b)));
    SKProof split = sb::and_r(sb::id(w), sb::tr(sb::ax_top(w), sb::em(b)));
    Formula dl = Formula::conj(w, Formula::disj(b, Formula::negate(b)));
    Formula dr = Formula::disj(Formula::conj(w, b), Formula::conj(w, Formula::negate(b)));
    SKProof dist{SKRule::D, {dl, dr}, {}};
    return sb::or_elim(sb::tr(std::move(split), std::move(dist)), std::move(caseT),
                       std::move(caseF));
}

SKProof nbx_to_box(const Formula& x) { // nbx(x) ⊢ □x
    Formula bxnn = Formula::box(nn(x));
    return sb::tr(sb::dneg_elim(bxnn), sb::box_rule(sb::dneg_elim(x)));
}

SKProof box_to_nbx(const Formula& x) { // □x ⊢ nbx(x)
    Formula bxnn = Formula::box(nn(x));
    return sb::tr(sb::box_rule(sb::dneg_intro(x)), sb::dneg_intro(bxnn));
}

// ◇y ∧ □x ⊢ ◇(y∧x)
SKProof diamond_box_merge(const Formula& y, const Formula& x) {
    Formula yx = Formula::conj(y, x);
    Formula bnyx = Formula::box(Formula::negate(yx));
    Formula bx = Formula::box(x);
    Formula inner = Formula::conj(Formula::negate(yx), x);
    // (¬(y∧x) ∧ x) ⊢ ¬y
    SKProof boole = sb::tr(norm_congr(inner, Formula::conj(x, Formula::negate(yx))),
                           conj_neg_cancel(x, y));
    SKProof l1 = sb::tr(
        SKProof{SKRule::BoxAnd, {Formula::conj(bnyx, bx), Formula::box(inner)}, {}},
        sb::box_rule(std::move(boole)));
    // ◇y ⊢ ¬(□¬(y∧x)∧□x)
    SKProof contr = sb::neg_antitone(std::move(l1));
    Formula dy = dia(y);
    Formula big = Formula::negate(Formula::conj(bnyx, bx));
    SKProof step = sb::and_r(sb::and_l1(bx, std::move(contr)), sb::and_l2(dy, sb::id(bx)));
    SKProof cancel =
        sb::tr(norm_congr(Formula::conj(big, bx),
                          Formula::conj(bx, Formula::negate(Formula::conj(bx, bnyx)))),
               conj_neg_cancel(bx, bnyx));
    return sb::tr(std::move(step), std::move(cancel));
}

// Σ-axiom instance as a sequent: x ⊢ y from ⊤ ⊢ ¬(x∧¬y).
SKProof valid_to_seq(const Formula& x, const Formula& y, SKProof valid) {
    return sb::seq_of_valid_impl(x, y, std::move(valid));
}

SKProof sigma_leaf(AxiomSchema s, const Formula& inst_var) {
    Formula inst = axiom_instance(s, inst_var);
    return SKProof{SKRule::Sigma, {Formula::top(), inst}, {}};
}

// w ⊢ ◇w (reflexive frames).
SKProof lemma_T(const Formula& w) {
    Formula nw = Formula::negate(w);
    SKProof seq = valid_to_seq(Formula::box(nw), nw, sigma_leaf(AxiomSchema::T, nw));
    return sb::tr(sb::dneg_intro(w), sb::neg_antitone(std::move(seq)));
}

// Necessity-shaped items: π(item) ⊢ □x and □x ⊢ π(item), where x is the
// content fold.  "(())" stands for the necessity cut of SA (x = ⊤).
bool is_collapsed_ncut(const Item& it) {
    return it.kind() == NodeKind::ContinuousCut && it.area().size() == 1 &&
           it.area().items()[0].kind() == NodeKind::ContinuousCut &&
           it.area().items()[0].area().empty();
}

SKProof to_box_general(const Item& it, const Formula& x) {
    Formula f = pi(Graph::single(it));
    if (is_collapsed_ncut(it)) {
        SKProof gen{SKRule::Gen, {Formula::top(), Formula::box(Formula::top())}, {}};
        return sb::tr(sb::ax_top(f), std::move(gen)); // f ⊢ ⊤ ⊢ □⊤
    }
    return nbx_to_box(x);
}

SKProof of_box_general(const Formula& x, const Item& it) {
    Formula f = pi(Graph::single(it));
    if (is_collapsed_ncut(it))
        return sb::tr(sb::ax_top(Formula::box(x)), sb::dneg_intro(Formula::top()));
    (void)f;
    return box_to_nbx(x);
}

// Double-broken-shaped items ("{()}" stands for the double broken cut of
// SA): π(item) ⊢ ◇¬◇¬x and back.
bool is_collapsed_dbcut(const Item& it) {
    return it.kind() == NodeKind::BrokenCut && it.area().size() == 1 &&
           it.area().items()[0].kind() == NodeKind::ContinuousCut &&
           it.area().items()[0].area().empty();
}

SKProof nn_to_nbx_top() { // ¬¬⊤ ⊢ nbx(⊤)
    Formula top = Formula::top();
    SKProof gen{SKRule::Gen, {top, Formula::box(top)}, {}};
    SKProof chain = sb::tr(sb::ax_top(nn(top)), std::move(gen));
    chain = sb::tr(std::move(chain), sb::box_rule(sb::dneg_intro(top)));
    return sb::tr(std::move(chain), sb::dneg_intro(Formula::box(nn(top))));
}

SKProof to_ddia_general(const Item& it, const Formula& x) {
    if (is_collapsed_dbcut(it)) // ◇¬¬⊤ ⊢ ◇¬◇¬⊤
        return sb::diamond_mono(sb::tr(sb::dneg_elim(Formula::top()),
                                       sb::tr(nn_to_nbx_top(), sb::id(nbx(Formula::top())))));
    (void)x;
    Formula f = pi(Graph::single(it));
    return sb::id(f);
}

SKProof of_ddia_general(const Formula& x, const Item& it) {
    if (is_collapsed_dbcut(it)) {
        // ◇¬◇¬⊤ ⊢ ◇¬¬⊤
        Formula top = Formula::top();
        SKProof inner = sb::tr(sb::ax_top(nbx(top)), sb::dneg_intro(top));
        return sb::diamond_mono(std::move(inner));
    }
    (void)x;
    return sb::id(pi(Graph::single(it)));
}

// □u ⊢ ◇u on serial frames (through the D axiom).
SKProof box_to_dia_serial(const Formula& u) {
    Formula du = dia(Formula::top());
    SKProof pair = sb::and_r(sb::tr(sb::ax_top(Formula::box(u)),
                                    sigma_leaf(AxiomSchema::D, Formula::top())),
                             sb::id(Formula::box(u)));
    SKProof merged = sb::tr(std::move(pair), diamond_box_merge(Formula::top(), u));
    (void)du;
    // ◇(⊤∧u) ⊢ ◇u
    return sb::tr(std::move(merged), sb::diamond_mono(sb::and_l2(Formula::top(), sb::id(u))));
}

} // namespace

// ---------------------------------------------------------------------------
// The iteration theorem.

namespace {

struct ItChain {
    std::vector<Graph> areas_b, areas_a; // index D = target area
    Formula s;                           // π of the copied item
};

SKProof it_area(const ItChain& c, std::size_t k, bool dir);

// σ∧¬fold(B-side k) ⊢ σ∧¬fold(A-side k)
SKProof it_neg(const ItChain& c, std::size_t k, bool dir) {
    Formula sig = c.s;
    Formula db = pi(dir ? c.areas_b[k] : c.areas_a[k]);
    Formula da = pi(dir ? c.areas_a[k] : c.areas_b[k]);
    SKProof ih = it_area(c, k, !dir); // σ∧da ⊢ σ∧db
    SKProof a_lemma = sb::tr(std::move(ih), sb::and_l2(sig, sb::id(db)));
    SKProof contr = sb::neg_antitone(std::move(a_lemma)); // ¬db ⊢ ¬(σ∧da)
    Formula ndb = Formula::negate(db);
    SKProof build = sb::and_r(sb::and_l1(ndb, sb::id(sig)),
                              sb::tr(sb::and_l2(sig, sb::id(ndb)), std::move(contr)));
    SKProof cancelled = sb::tr(std::move(build), conj_neg_cancel(sig, da));
    return sb::and_r(sb::and_l1(ndb, sb::id(sig)), std::move(cancelled));
}

SKProof it_area(const ItChain& c, std::size_t k, bool dir) {
    Formula sig = c.s;
    Graph ab = dir ? c.areas_b[k] : c.areas_a[k];
    Graph aa = dir ? c.areas_a[k] : c.areas_b[k];
    Formula fb = pi(ab), fa = pi(aa);
    Formula src = Formula::conj(sig, fb);
    if (k + 1 == c.areas_b.size() + 1) {
        throw SchemaError("iteration chain index out of range");
    }
    if (k == c.areas_b.size() - 1 && false) {
        // unreachable marker
    }
    if (k == c.areas_b.size() - 0) {
        throw SchemaError("iteration chain index out of range");
    }
    bool base = k + 1 == c.areas_b.size();
    if (base) {
        if (aa.size() > ab.size()) {
            SKProof dup = sb::and_r(sb::and_l1(fb, sb::id(sig)),
                                    sb::and_r(sb::and_l1(fb, sb::id(sig)),
                                              sb::and_l2(sig, sb::id(fb))));
            return sb::tr(std::move(dup),
                          norm_congr(Formula::conj(sig, Formula::conj(sig, fb)),
                                     Formula::conj(sig, fa)));
        }
        return sub_fold(src, Formula::conj(sig, fa));
    }
    Formula child_b = Formula::negate(pi(dir ? c.areas_b[k + 1] : c.areas_a[k + 1]));
    Formula child_a = Formula::negate(pi(dir ? c.areas_a[k + 1] : c.areas_b[k + 1]));
    // src ⊢ σ∧child_b, step the negation, then reassemble σ∧fold(after).
    SKProof to_child = sb::and_r(sb::and_l1(fb, sb::id(sig)),
                                 sb::tr(sb::and_l2(sig, sb::id(fb)),
                                        norm_leaf(fb, child_b)));
    SKProof stepped = sb::tr(std::move(to_child), it_neg(c, k + 1, dir)); // src ⊢ σ∧child_a
    std::vector<Formula> al;
    for (const Item& it : aa.items()) al.push_back(pi(Graph::single(it)));
    std::vector<SKProof> parts;
    bool used_child = false;
    for (const Formula& leaf : al) {
        if (!used_child && leaf == child_a) {
            used_child = true;
            SKProof part = sb::tr(
                sb::and_r(sb::and_l1(fb, sb::id(sig)),
                          sb::tr(sb::and_l2(sig, sb::id(fb)), norm_leaf(fb, child_b))),
                sb::tr(it_neg(c, k + 1, dir), sb::and_l2(sig, sb::id(child_a))));
            parts.push_back(std::move(part));
            continue;
        }
        parts.push_back(sb::tr(sb::and_l2(sig, sb::id(fb)), norm_leaf(fb, leaf)));
    }
    (void)stepped;
    if (!used_child) throw SchemaError("iteration lost the modified child");
    SKProof folded;
    if (parts.empty()) {
        folded = sb::ax_top(src);
    } else {
        folded = std::move(parts.back());
        for (std::size_t j = parts.size() - 1; j-- > 0;)
            folded = sb::and_r(std::move(parts[j]), std::move(folded));
    }
    return sb::and_r(sb::and_l1(fb, sb::id(sig)), std::move(folded));
}

} // namespace

// ---------------------------------------------------------------------------
// Per-step sequents.

namespace {

// The firing area's contents after the rule (mirrors apply_rule).
Graph after_area(const Graph& g, const RuleInstance& inst) {
    Graph before = subgraph_at(g, inst.area);
    const auto& items = before.items();
    auto drop = [&](const std::vector<std::size_t>& idx) {
        std::vector<Item> out;
        for (std::size_t i = 0; i < items.size(); ++i)
            if (!std::binary_search(idx.begin(), idx.end(), i)) out.push_back(items[i]);
        return out;
    };
    auto take = [&](const std::vector<std::size_t>& idx) {
        std::vector<Item> out;
        for (std::size_t i : idx) out.push_back(items[i]);
        return out;
    };
    switch (inst.rule) {
    case RuleName::DEL: return Graph{drop(inst.indices)};
    case RuleName::INS: return Graph::juxtapose(before, *inst.payload);
    case RuleName::DC1: {
        std::vector<Item> out = drop(inst.indices);
        out.push_back(Item::cut(Graph::cut(Graph{take(inst.indices)})));
        return Graph{std::move(out)};
    }
    case RuleName::DC2: {
        std::vector<Item> out = drop(inst.indices);
        for (const Item& in : items[inst.indices[0]].area().items()[0].area().items())
            out.push_back(in);
        return Graph{std::move(out)};
    }
    case RuleName::IT:
    case RuleName::DEIT: {
        const Item& src = items[inst.indices[0]];
        const Address& t = *inst.target;
        bool same = t.path == inst.area.path;
        if (same) {
            std::vector<Item> out = items;
            if (inst.rule == RuleName::IT) {
                out.push_back(src);
            } else {
                std::string key = src.print();
                for (std::size_t i = 0; i < out.size(); ++i)
                    if (i != inst.indices[0] && out[i].print() == key) {
                        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
                        break;
                    }
            }
            return Graph{std::move(out)};
        }
        std::size_t j = t.path[inst.area.path.size()];
        std::vector<std::size_t> rel{0};
        rel.insert(rel.end(),
                   t.path.begin() + static_cast<std::ptrdiff_t>(inst.area.path.size() + 1),
                   t.path.end());
        Graph single = Graph::single(items[j]);
        Graph tcontents = subgraph_at(single, Address::area(rel));
        std::vector<Item> titems = tcontents.items();
        if (inst.rule == RuleName::IT) {
            titems.push_back(src);
        } else {
            std::string key = src.print();
            bool removed = false;
            for (std::size_t i = 0; i < titems.size(); ++i)
                if (titems[i].print() == key) {
                    titems.erase(titems.begin() + static_cast<std::ptrdiff_t>(i));
                    removed = true;
                    break;
                }
            if (!removed) throw SchemaError("deiteration target lost the copy");
        }
        Graph nsingle = replace_at(single, Address::area(rel), Graph{std::move(titems)});
        std::vector<Item> out;
        for (std::size_t i = 0; i < items.size(); ++i)
            if (i != j) out.push_back(items[i]);
        out.push_back(nsingle.items()[0]);
        return Graph{std::move(out)};
    }
    case RuleName::K1: {
        Graph content = items[inst.indices[0]].area().items()[0].kind() == NodeKind::BrokenCut
                            ? items[inst.indices[0]].area().items()[0].area()
                            : Graph::sa();
        const auto& [p1, p2] = *inst.partition;
        std::vector<Item> out = drop(inst.indices);
        auto pick = [&](const std::vector<std::size_t>& idx) {
            std::vector<Item> v;
            for (std::size_t i : idx) v.push_back(content.items()[i]);
            return Graph{std::move(v)};
        };
        out.push_back(Item::cut(Graph::bcut(pick(p1))));
        out.push_back(Item::cut(Graph::bcut(pick(p2))));
        return Graph{std::move(out)};
    }
    case RuleName::K2: {
        auto content = [&](std::size_t i) {
            const Item& in = items[i].area().items()[0];
            return in.kind() == NodeKind::BrokenCut ? in.area() : Graph::sa();
        };
        std::vector<Item> out = drop(inst.indices);
        out.push_back(Item::cut(
            Graph::bcut(Graph::juxtapose(content(inst.indices[0]), content(inst.indices[1])))));
        return Graph{std::move(out)};
    }
    case RuleName::DMN: {
        const Graph& inner = items[inst.indices[0]].area();
        const auto& [pidx, didx] = *inst.partition;
        std::vector<Item> pv;
        for (std::size_t i : pidx) pv.push_back(inner.items()[i]);
        Graph p{std::move(pv)};
        Graph q = inner.items()[didx[0]].area();
        std::vector<Item> out = drop(inst.indices);
        {
            Graph repl_ = Graph::implies(Graph::bcut(q), Graph::bcut(p));
            for (const Item& it : repl_.items()) out.push_back(it);
        }
        return Graph{std::move(out)};
    }
    default: break;
    }
    // Extension rules: single-item (or sub-multiset for B-) replacement.
    auto content_of = [&](std::size_t i) {
        const Item& in = items[i].area().items().empty() ? items[i] : items[i].area().items()[0];
        if (items[i].area().size() == 1 && in.is_cut()) return in.area();
        return Graph::sa();
    };
    std::vector<Item> out;
    switch (inst.rule) {
    case RuleName::Tpos:
        out = drop(inst.indices);
        {
            Graph repl_ = Graph::bcut(items[inst.indices[0]].area());
            for (const Item& it : repl_.items()) out.push_back(it);
        }
        return Graph{std::move(out)};
    case RuleName::Tneg:
        out = drop(inst.indices);
        out.push_back(Item::cut(items[inst.indices[0]].area()));
        return Graph{std::move(out)};
    case RuleName::Dpos:
        out = drop(inst.indices);
        {
            Graph repl_ = Graph::pcut(content_of(inst.indices[0]));
            for (const Item& it : repl_.items()) out.push_back(it);
        }
        return Graph{std::move(out)};
    case RuleName::Dneg:
        out = drop(inst.indices);
        {
            Graph repl_ = Graph::ncut(content_of(inst.indices[0]));
            for (const Item& it : repl_.items()) out.push_back(it);
        }
        return Graph{std::move(out)};
    case RuleName::FourPos:
        out = drop(inst.indices);
        {
            Graph repl_ = Graph::ncut(Graph::ncut(content_of(inst.indices[0])));
            for (const Item& it : repl_.items()) out.push_back(it);
        }
        return Graph{std::move(out)};
    case RuleName::FourNeg:
        out = drop(inst.indices);
        {
            Graph repl_ = Graph::pcut(Graph::pcut(content_of(inst.indices[0])));
            for (const Item& it : repl_.items()) out.push_back(it);
        }
        return Graph{std::move(out)};
    case RuleName::Bpos:
        out = drop(inst.indices);
        {
            Graph repl_ = content_of(inst.indices[0]);
            for (const Item& it : repl_.items()) out.push_back(it);
        }
        return Graph{std::move(out)};
    case RuleName::Bneg: {
        out = drop(inst.indices);
        {
            Graph repl_ = Graph::bcut(Graph::bcut(Graph{take(inst.indices)}));
            for (const Item& it : repl_.items()) out.push_back(it);
        }
        return Graph{std::move(out)};
    }
    case RuleName::FivePos:
        out = drop(inst.indices);
        {
            Graph repl_ = Graph::ncut(content_of(inst.indices[0]));
            for (const Item& it : repl_.items()) out.push_back(it);
        }
        return Graph{std::move(out)};
    case RuleName::FiveNeg:
        out = drop(inst.indices);
        {
            Graph repl_ = Graph::bcut(Graph::bcut(content_of(inst.indices[0])));
            for (const Item& it : repl_.items()) out.push_back(it);
        }
        return Graph{std::move(out)};
    default: throw SchemaError("unsupported rule in translation");
    }
}

// Local sequent fold(from)⊢fold(to) for a rule instance.  `fwd` is true
// when (from, to) = (before, after).
SKProof local_lemma(const Graph& g, const RuleInstance& inst, const Graph& from,
                    const Graph& to, bool fwd) {
    Graph before = subgraph_at(g, inst.area);
    const auto& bitems = before.items();
    std::vector<Formula> fl;
    for (const Item& it : from.items()) fl.push_back(pi(Graph::single(it)));
    Formula src = sb::conj_fold(fl);

    // Makers for conjuncts of `to` that are not plain projections.
    std::map<std::string, std::function<SKProof()>> makers;
    auto add_maker = [&](const Formula& leaf, std::function<SKProof()> fn) {
        makers[leaf.print()] = std::move(fn);
    };

    switch (inst.rule) {
    case RuleName::DEL:
    case RuleName::INS: break;
    case RuleName::DC1:
    case RuleName::DC2: {
        bool wrapping = (inst.rule == RuleName::DC1) == fwd;
        Graph m;
        if (inst.rule == RuleName::DC1) {
            std::vector<Item> mi;
            for (std::size_t i : inst.indices) mi.push_back(bitems[i]);
            m = Graph{std::move(mi)};
        } else {
            m = bitems[inst.indices[0]].area().items()[0].area();
        }
        Formula mf = pi(m);
        Formula ddf = nn(mf);
        if (wrapping) {
            add_maker(ddf, [src, mf, ddf]() {
                return sb::tr(sub_fold(src, mf), sb::dneg_intro(mf));
            });
        } else {
            for (const Item& it : m.items()) {
                Formula leaf = pi(Graph::single(it));
                add_maker(leaf, [src, mf, ddf, leaf]() {
                    SKProof open = sb::tr(norm_leaf(src, ddf), sb::dneg_elim(mf));
                    return sb::tr(std::move(open), norm_leaf(mf, leaf));
                });
            }
        }
        break;
    }
    case RuleName::IT:
    case RuleName::DEIT: {
        const Address& t = *inst.target;
        if (t.path == inst.area.path) break; // same-area: projection/reuse
        std::size_t j = t.path[inst.area.path.size()];
        ItChain chain;
        chain.s = pi(Graph::single(bitems[inst.indices[0]]));
        // Collect areas along the path inside the context item.
        {
            const Item* cur = &bitems[j];
            chain.areas_b.push_back(cur->area());
            for (std::size_t d = inst.area.path.size() + 1; d < t.path.size(); ++d) {
                cur = &cur->area().items()[t.path[d]];
                chain.areas_b.push_back(cur->area());
            }
        }
        // After-side areas, rebuilt bottom-up.
        {
            Graph target_a = chain.areas_b.back();
            std::vector<Item> ti = target_a.items();
            if (inst.rule == RuleName::IT) {
                ti.push_back(bitems[inst.indices[0]]);
            } else {
                std::string key = bitems[inst.indices[0]].print();
                for (std::size_t i = 0; i < ti.size(); ++i)
                    if (ti[i].print() == key) {
                        ti.erase(ti.begin() + static_cast<std::ptrdiff_t>(i));
                        break;
                    }
            }
            std::vector<Graph> areas_a(chain.areas_b.size());
            areas_a.back() = Graph{std::move(ti)};
            for (std::size_t k = chain.areas_b.size() - 1; k-- > 0;) {
                // Replace the child cut (one copy) by the rebuilt one.
                Item old_child = Item::cut(chain.areas_b[k + 1]);
                Item new_child = Item::cut(areas_a[k + 1]);
                std::vector<Item> ai = chain.areas_b[k].items();
                std::string key = old_child.print();
                bool replaced = false;
                for (std::size_t i = 0; i < ai.size(); ++i)
                    if (ai[i].print() == key) {
                        ai[i] = new_child;
                        replaced = true;
                        break;
                    }
                if (!replaced) throw SchemaError("iteration chain lost its spine");
                areas_a[k] = Graph{std::move(ai)};
            }
            chain.areas_a = std::move(areas_a);
        }
        bool dir = fwd;
        Formula child_b = Formula::negate(pi(dir ? chain.areas_b[0] : chain.areas_a[0]));
        Formula child_a = Formula::negate(pi(dir ? chain.areas_a[0] : chain.areas_b[0]));
        Formula sig = chain.s;
        add_maker(child_a, [src, sig, child_b, child_a, chain, dir]() {
            SKProof to_pair = sb::and_r(norm_leaf(src, sig), norm_leaf(src, child_b));
            return sb::tr(sb::tr(std::move(to_pair), it_neg(chain, 0, dir)),
                          sb::and_l2(sig, sb::id(child_a)));
        });
        break;
    }
    case RuleName::K1:
    case RuleName::K2: {
        bool splitting = (inst.rule == RuleName::K1) == fwd;
        if (splitting) {
            const Item& sel = inst.rule == RuleName::K1
                                  ? bitems[inst.indices[0]]
                                  : Item::cut(Graph::bcut(Graph::juxtapose(
                                        bitems[inst.indices[0]].area().items()[0].area(),
                                        bitems[inst.indices[1]].area().items()[0].area())));
            // Forward split: derive each part from the merged cut.
            Graph content;
            {
                const Item& in = sel.area().items()[0];
                content = in.kind() == NodeKind::BrokenCut ? in.area() : Graph::sa();
            }
            Formula pf = pi(content);
            Formula self = pi(Graph::single(sel));
            // Parts of `to` not in `from`: the two block cuts (K1) or the
            // merged cut's origin halves (K2 backward).
            for (const Item& rep : to.items()) {
                Graph rc;
                if (rep.kind() != NodeKind::ContinuousCut || rep.area().size() != 1 ||
                    !rep.area().items()[0].is_cut())
                    continue;
                const Item& in = rep.area().items()[0];
                rc = in.kind() == NodeKind::BrokenCut ? in.area() : Graph::sa();
                Formula rf = pi(rc);
                Formula leaf = pi(Graph::single(rep));
                Item rep_copy = rep;
                Item sel_copy = sel;
                add_maker(leaf, [src, self, pf, rf, rep_copy, sel_copy]() {
                    SKProof chain = sb::tr(norm_leaf(src, self), to_box_general(sel_copy, pf));
                    chain = sb::tr(std::move(chain),
                                   sb::box_rule(sub_fold(pf, rf)));
                    return sb::tr(std::move(chain), of_box_general(rf, rep_copy));
                });
            }
        } else {
            // Merge: combine the two necessity cuts with □∧.
            std::vector<Item> sels;
            if (inst.rule == RuleName::K2) {
                sels = {bitems[inst.indices[0]], bitems[inst.indices[1]]};
            } else {
                const auto& [p1, p2] = *inst.partition;
                Graph content = bitems[inst.indices[0]].area().items()[0].kind() ==
                                        NodeKind::BrokenCut
                                    ? bitems[inst.indices[0]].area().items()[0].area()
                                    : Graph::sa();
                auto pick = [&](const std::vector<std::size_t>& idx) {
                    std::vector<Item> v;
                    for (std::size_t i : idx) v.push_back(content.items()[i]);
                    return Graph{std::move(v)};
                };
                sels = {Item::cut(Graph::bcut(pick(p1))), Item::cut(Graph::bcut(pick(p2)))};
            }
            auto content_of = [](const Item& it) {
                const Item& in = it.area().items()[0];
                return in.kind() == NodeKind::BrokenCut ? in.area() : Graph::sa();
            };
            Graph c1 = content_of(sels[0]);
            Graph c2 = content_of(sels[1]);
            Graph merged_c = Graph::juxtapose(c1, c2);
            Item merged = Item::cut(Graph::bcut(merged_c));
            Formula p1f = pi(c1), p2f = pi(c2), pm = pi(merged_c);
            Formula f1 = pi(Graph::single(sels[0])), f2 = pi(Graph::single(sels[1]));
            Formula leaf = pi(Graph::single(merged));
            Item s0 = sels[0], s1 = sels[1];
            add_maker(leaf, [src, f1, f2, p1f, p2f, pm, s0, s1, merged]() {
                SKProof b1 = sb::tr(norm_leaf(src, f1), to_box_general(s0, p1f));
                SKProof b2 = sb::tr(norm_leaf(src, f2), to_box_general(s1, p2f));
                Formula bls = Formula::conj(Formula::box(p1f), Formula::box(p2f));
                SKProof both = sb::and_r(std::move(b1), std::move(b2));
                SKProof bx{SKRule::BoxAnd,
                           {bls, Formula::box(Formula::conj(p1f, p2f))},
                           {}};
                SKProof chain = sb::tr(std::move(both), std::move(bx));
                chain = sb::tr(std::move(chain),
                               sb::box_rule(sub_fold(Formula::conj(p1f, p2f), pm)));
                return sb::tr(std::move(chain), of_box_general(pm, merged));
            });
        }
        break;
    }
    case RuleName::Tpos:
    case RuleName::Tneg: {
        Graph content = bitems[inst.indices[0]].area();
        Formula x = pi(content);
        Formula a_leaf = Formula::negate(x);
        Formula b_leaf = content.empty() ? Formula::negate(x) : dia(Formula::negate(x));
        if (content.empty()) break; // T+ on "()" is the identity
        add_maker(b_leaf, [src, a_leaf, x]() {
            return sb::tr(norm_leaf(src, a_leaf), lemma_T(Formula::negate(x)));
        });
        break;
    }
    case RuleName::Dpos:
    case RuleName::Dneg: {
        const Item& sel = bitems[inst.indices[0]];
        Graph content = sel.area().items()[0].is_cut() ? sel.area().items()[0].area()
                                                       : Graph::sa();
        Formula x = pi(content);
        Item ncut_item = inst.rule == RuleName::Dpos
                             ? sel
                             : Graph::ncut(content).items()[0];
        Formula a_leaf = pi(Graph::single(ncut_item));
        Formula b_leaf = dia(nn(x));
        Item nc = ncut_item;
        add_maker(b_leaf, [src, a_leaf, x, nc]() {
            SKProof chain = sb::tr(norm_leaf(src, a_leaf), to_box_general(nc, x));
            chain = sb::tr(std::move(chain), box_to_dia_serial(x));
            // ◇x ⊢ ◇¬¬x
            return sb::tr(std::move(chain), sb::diamond_mono(sb::dneg_intro(x)));
        });
        break;
    }
    case RuleName::FourPos: {
        const Item& sel = bitems[inst.indices[0]];
        Graph content = sel.area().items()[0].is_cut() ? sel.area().items()[0].area()
                                                       : Graph::sa();
        Formula x = pi(content);
        Item inner_rep = Graph::ncut(content).items()[0];
        Item outer_rep = Graph::ncut(Graph::ncut(content)).items()[0];
        Formula inner_f = pi(Graph::single(inner_rep));
        Formula b_leaf = pi(Graph::single(outer_rep));
        Item selc = sel, innc = inner_rep;
        Formula a_leaf = pi(Graph::single(sel));
        add_maker(b_leaf, [src, a_leaf, x, selc, innc, inner_f]() {
            SKProof chain = sb::tr(norm_leaf(src, a_leaf), to_box_general(selc, x));
            chain = sb::tr(std::move(chain),
                           valid_to_seq(Formula::box(x), Formula::box(Formula::box(x)),
                                        sigma_leaf(AxiomSchema::Four, x)));
            chain = sb::tr(std::move(chain), sb::box_rule(of_box_general(x, innc)));
            return sb::tr(std::move(chain), box_to_nbx(inner_f));
        });
        break;
    }
    case RuleName::FourNeg: {
        const Item& sel = bitems[inst.indices[0]];
        Graph content = sel.area().items()[0].area();
        Formula x = pi(content);
        Formula u = nn(x);
        Formula d = dia(u); // π of the possibility cut
        Formula dd = dia(nn(d));
        add_maker(d, [src, dd, d, u, x]() {
            // dd ⊢ dia(d) ⊢ d
            SKProof step1 = sb::neg_antitone(
                sb::box_rule(sb::dneg_intro(Formula::negate(d)))); // dd ⊢ ¬□¬d
            Formula bnu = Formula::box(Formula::negate(u));
            SKProof four = valid_to_seq(bnu, Formula::box(bnu),
                                        sigma_leaf(AxiomSchema::Four, Formula::negate(u)));
            // ¬□¬d = ¬□¬¬□¬u → ¬□□¬u → ¬□¬u = d
            SKProof congr = sb::neg_antitone(sb::box_rule(sb::dneg_intro(bnu)));
            SKProof contraposed = sb::neg_antitone(std::move(four));
            SKProof chain = sb::tr(norm_leaf(src, dd), std::move(step1));
            chain = sb::tr(std::move(chain), std::move(congr));
            return sb::tr(std::move(chain), std::move(contraposed));
        });
        break;
    }
    case RuleName::Bpos:
    case RuleName::Bneg: {
        Item sel = inst.rule == RuleName::Bpos
                       ? bitems[inst.indices[0]]
                       : Graph::bcut(Graph::bcut(Graph{[&] {
                             std::vector<Item> mi;
                             for (std::size_t i : inst.indices) mi.push_back(bitems[i]);
                             return mi;
                         }()})).items()[0];
        Graph content;
        if (sel.area().size() == 1 && sel.area().items()[0].is_cut())
            content = sel.area().items()[0].kind() == NodeKind::BrokenCut
                          ? sel.area().items()[0].area()
                          : Graph::sa();
        Formula x = pi(content);
        Formula a_leaf = pi(Graph::single(sel));
        Item selc = sel;
        for (const Item& it : content.items()) {
            Formula leaf = pi(Graph::single(it));
            add_maker(leaf, [src, a_leaf, x, selc, leaf]() {
                SKProof chain = sb::tr(norm_leaf(src, a_leaf), to_ddia_general(selc, x));
                // ◇¬◇¬x ⊢ ¬□◇¬x ⊢ x
                Formula dnx = dia(Formula::negate(x));
                SKProof congr = sb::neg_antitone(sb::box_rule(sb::dneg_intro(dnx)));
                SKProof b = valid_to_seq(Formula::negate(x), Formula::box(dnx),
                                         sigma_leaf(AxiomSchema::B, Formula::negate(x)));
                SKProof contraposed = sb::neg_antitone(std::move(b));
                chain = sb::tr(std::move(chain), std::move(congr));
                chain = sb::tr(std::move(chain), std::move(contraposed));
                chain = sb::tr(std::move(chain), sb::dneg_elim(x));
                return sb::tr(std::move(chain), norm_leaf(x, leaf));
            });
        }
        break;
    }
    case RuleName::FivePos:
    case RuleName::FiveNeg: {
        Item sel = Item::cut(Graph::sa());
        Item rep = Item::cut(Graph::sa());
        Graph content;
        if (inst.rule == RuleName::FivePos) {
            sel = bitems[inst.indices[0]];
            const Item& in = sel.area().items()[0];
            content = in.kind() == NodeKind::BrokenCut ? in.area() : Graph::sa();
            rep = Graph::ncut(content).items()[0];
        } else {
            const Item& s = bitems[inst.indices[0]];
            const Item& in = s.area().items()[0];
            content = in.kind() == NodeKind::BrokenCut ? in.area() : Graph::sa();
            sel = Graph::bcut(Graph::bcut(content)).items()[0];
            rep = s; // the necessity cut reappears in `to`
        }
        Formula x = pi(content);
        Formula a_leaf = pi(Graph::single(sel));
        Formula b_leaf = pi(Graph::single(rep));
        Item selc = sel, repc = rep;
        add_maker(b_leaf, [src, a_leaf, x, selc, repc, b_leaf]() {
            SKProof chain = sb::tr(norm_leaf(src, a_leaf), to_ddia_general(selc, x));
            Formula dnx = dia(Formula::negate(x));
            SKProof congr = sb::neg_antitone(sb::box_rule(sb::dneg_intro(dnx)));
            SKProof five = valid_to_seq(dnx, Formula::box(dnx),
                                        sigma_leaf(AxiomSchema::Five, Formula::negate(x)));
            SKProof contraposed = sb::neg_antitone(std::move(five)); // ¬□◇¬x ⊢ ¬◇¬x
            chain = sb::tr(std::move(chain), std::move(congr));
            chain = sb::tr(std::move(chain), std::move(contraposed));
            // ¬◇¬x = nbx(x); bridge to the actual replacement item.
            if (is_collapsed_ncut(repc))
                return sb::tr(std::move(chain),
                              sb::tr(sb::ax_top(nbx(x)), sb::dneg_intro(Formula::top())));
            return sb::tr(std::move(chain), norm_congr(nbx(x), b_leaf));
        });
        break;
    }
    default: throw SchemaError("rule has no local lemma");
    }

    // Assemble fold(from) ⊢ fold(to).
    std::vector<Formula> tl;
    for (const Item& it : to.items()) tl.push_back(pi(Graph::single(it)));
    if (tl.empty()) return sb::ax_top(src);
    std::vector<bool> used(fl.size(), false);
    std::vector<SKProof> parts;
    for (const Formula& t : tl) {
        bool done = false;
        for (std::size_t i = 0; i < fl.size(); ++i) {
            if (used[i] || !(fl[i] == t)) continue;
            used[i] = true;
            parts.push_back(sb::proj(fl, i));
            done = true;
            break;
        }
        if (done) continue;
        auto mk = makers.find(t.print());
        if (mk != makers.end()) {
            parts.push_back(mk->second());
            continue;
        }
        // Reuse a matching conjunct (iteration duplicates).
        bool reused = false;
        for (std::size_t i = 0; i < fl.size(); ++i) {
            if (!(fl[i] == t)) continue;
            parts.push_back(sb::proj(fl, i));
            reused = true;
            break;
        }
        if (!reused) throw SchemaError("no derivation for conjunct " + t.print());
    }
    SKProof out = std::move(parts.back());
    for (std::size_t j = parts.size() - 1; j-- > 0;)
        out = sb::and_r(std::move(parts[j]), std::move(out));
    return out;
}

// The full sequent π(g) ⊢ π(h) for a non-DMN kernel step.
SKProof seq_for_step(const Graph& g, const RuleInstance& inst, const Graph& h) {
    Graph before = subgraph_at(g, inst.area);
    Graph after = after_area(g, inst);
    bool positive = polarity(g, inst.area) == Polarity::Positive;
    SKProof sub = positive ? local_lemma(g, inst, before, after, true)
                           : local_lemma(g, inst, after, before, false);
    FormulaContext ctx = pi_context(g, inst.area);
    Formula beta = positive ? pi(before) : pi(after);
    Formula gamma = positive ? pi(after) : pi(before);
    SKProof seq = sk_mono_replace(ctx, beta, gamma, sub,
                                  positive ? FormulaPolarity::Positive
                                           : FormulaPolarity::Negative);
    Formula filled = ctx.fill(pi(after));
    return sb::tr(std::move(seq), norm_congr(filled, pi(h)));
}

// DMN at the root: from ⊤⊢π(g) derive ⊤⊢π(h) directly.
SKProof dmn_root(SKProof top_g, const Graph& g, const RuleInstance& inst, const Graph& h) {
    const Item& imp = g.items()[inst.indices[0]];
    const auto& [pidx, didx] = *inst.partition;
    std::vector<Item> pv;
    for (std::size_t i : pidx) pv.push_back(imp.area().items()[i]);
    Graph pgraph{std::move(pv)};
    Graph qgraph = imp.area().items()[didx[0]].area();
    Formula pf = pi(pgraph), qf = pi(qgraph);
    Formula pre = Formula::negate(Formula::conj(pf, Formula::negate(qf)));
    // ⊤ ⊢ pre
    SKProof top_pre = sb::tr(top_g, norm_leaf(pi(g), pre));
    SKProof seq = sb::seq_of_valid_impl(pf, qf, std::move(top_pre)); // pf ⊢ qf
    SKProof mono = sb::diamond_mono(sb::neg_antitone(std::move(seq))); // ◇¬qf ⊢ ◇¬pf
    SKProof post_valid = sb::impl_of_seq(std::move(mono)); // ⊤ ⊢ ¬(◇¬qf ∧ ¬◇¬pf)
    Formula post = Formula::negate(
        Formula::conj(dia(Formula::negate(qf)),
                      Formula::negate(dia(Formula::negate(pf)))));
    // Assemble π(h): the new implication plus the untouched siblings.
    Graph hcopy = h;
    std::vector<Formula> hl;
    for (const Item& it : hcopy.items()) hl.push_back(pi(Graph::single(it)));
    Item newimp = Graph::implies(Graph::bcut(qgraph), Graph::bcut(pgraph)).items()[0];
    Formula newf = pi(Graph::single(newimp));
    std::vector<SKProof> parts;
    bool used_new = false;
    SKProof top_gc = sb::tr(SKProof{SKRule::Top, {Formula::top(), Formula::top()}, {}},
                            sb::id(Formula::top()));
    (void)top_gc;
    for (const Formula& t : hl) {
        if (!used_new && t == newf) {
            used_new = true;
            parts.push_back(sb::tr(std::move(post_valid), norm_congr(post, newf)));
            continue;
        }
        parts.push_back(sb::tr(top_g, norm_leaf(pi(g), t)));
    }
    if (!used_new) throw SchemaError("DMN translation lost the new implication");
    if (parts.empty()) return SKProof{SKRule::Top, {Formula::top(), Formula::top()}, {}};
    SKProof out = std::move(parts.back());
    for (std::size_t j = parts.size() - 1; j-- > 0;)
        out = sb::and_r(std::move(parts[j]), std::move(out));
    return sb::tr(std::move(out), norm_congr(sb::conj_fold(hl), pi(h)));
}

} // namespace

SKProof translate_proof_g_to_sk(const Proof& p) {
    CheckResult cr = check(p);
    if (!cr.ok)
        throw SchemaError("proof does not check (step " + std::to_string(cr.step) +
                          "): " + cr.reason);
    std::vector<FlatStep> flat = flatten_proof(p);
    std::vector<SKProof> done;
    done.reserve(flat.size());
    for (const FlatStep& fs : flat) {
        switch (fs.kind) {
        case StepKind::Axiom:
            done.push_back(SKProof{SKRule::Top, {Formula::top(), Formula::top()}, {}});
            break;
        case StepKind::Jux: {
            const SKProof& a = done[fs.premise];
            const SKProof& b = done[fs.premise2];
            Formula combo = Formula::conj(a.seq.right, b.seq.right);
            SKProof both = sb::and_r(a, b);
            done.push_back(sb::tr(std::move(both), norm_congr(combo, pi(fs.result))));
            break;
        }
        case StepKind::Kernel: {
            const SKProof& prem = done[fs.premise];
            const Graph& g = flat[fs.premise].result;
            if (fs.rule.rule == RuleName::DMN) {
                done.push_back(dmn_root(prem, g, fs.rule, fs.result));
            } else {
                SKProof seq = seq_for_step(g, fs.rule, fs.result);
                done.push_back(sb::tr(prem, std::move(seq)));
            }
            break;
        }
        default: throw SchemaError("unexpected flat step");
        }
    }
    return std::move(done.back());
}

} // namespace pmk
