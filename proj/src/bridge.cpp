// bridge.cpp — π, σ, δ, ρ, formula contexts of graph positions, and the
// SK→graph proof translation.

#include "pmk/bridge.hpp"

#include <algorithm>
#include <functional>

namespace pmk {

namespace {

Formula pi_item(const Item& it);

Formula pi_fold(const Graph& area) {
    const auto& items = area.items();
    if (items.empty()) return Formula::top();
    Formula out = pi_item(items.back());
    for (std::size_t i = items.size() - 1; i-- > 0;)
        out = Formula::conj(pi_item(items[i]), out);
    return out;
}

Formula pi_item(const Item& it) {
    switch (it.kind()) {
    case NodeKind::Atom: return Formula::atom(it.name());
    case NodeKind::ContinuousCut: return Formula::negate(pi_fold(it.area()));
    case NodeKind::BrokenCut:
        return Formula::diamond(Formula::negate(pi_fold(it.area())));
    }
    return Formula::top();
}

} // namespace

Formula pi(const Graph& g) { return pi_fold(g); }

Graph sigma(const Formula& f) {
    switch (f.kind()) {
    case FormulaKind::Atom: return Graph::atom(f.name());
    case FormulaKind::Top: return Graph::sa();
    case FormulaKind::Not: return Graph::cut(sigma(f.left()));
    case FormulaKind::And: return Graph::juxtapose(sigma(f.left()), sigma(f.right()));
    case FormulaKind::Box: return Graph::ncut(sigma(f.left()));
    }
    return Graph::sa();
}

namespace {

// Flattens the ∧-spine; ⊤ conjuncts vanish, matching SA absorption.
void flatten_conj(const Formula& f, std::vector<Formula>& out) {
    switch (f.kind()) {
    case FormulaKind::And:
        flatten_conj(f.left(), out);
        flatten_conj(f.right(), out);
        break;
    case FormulaKind::Top: break;
    default: out.push_back(f);
    }
}

} // namespace

Formula delta(const Formula& f) {
    switch (f.kind()) {
    case FormulaKind::Atom:
    case FormulaKind::Top: return f;
    case FormulaKind::Not: return Formula::negate(delta(f.left()));
    case FormulaKind::Box: {
        Formula d = delta(f.left());
        // The necessity cut of SA collapses to a double cut (Normality).
        if (d == Formula::top())
            return Formula::negate(Formula::negate(Formula::top()));
        return Formula::negate(Formula::diamond(Formula::negate(d)));
    }
    case FormulaKind::And: {
        std::vector<Formula> parts;
        flatten_conj(f, parts);
        if (parts.empty()) return Formula::top();
        // Conjuncts re-fold in the canonical order of their graph images.
        std::stable_sort(parts.begin(), parts.end(),
                         [](const Formula& a, const Formula& b) {
                             return sigma(a).print() < sigma(b).print();
                         });
        Formula out = delta(parts.back());
        for (std::size_t i = parts.size() - 1; i-- > 0;)
            out = Formula::conj(delta(parts[i]), out);
        return out;
    }
    }
    return f;
}

Graph rho(const Graph& g) {
    std::vector<Item> items;
    for (const Item& it : g.items()) {
        switch (it.kind()) {
        case NodeKind::Atom: items.push_back(it); break;
        case NodeKind::ContinuousCut: items.push_back(Item::cut(rho(it.area()))); break;
        case NodeKind::BrokenCut:
            // ρ(bcut G) = cut(ncut(cut(cut(ρG)))).
            items.push_back(Item::cut(
                Graph::ncut(Graph::cut(Graph::cut(rho(it.area()))))));
            break;
        }
    }
    return Graph{std::move(items)};
}

FormulaContext pi_context(const Graph& g, const Address& a) {
    if (!a.into_area) throw AddressError("pi_context requires an area address");
    std::vector<int> slot;
    const Graph* cur = &g;
    for (std::size_t d = 0; d < a.path.size(); ++d) {
        std::size_t h = a.path[d];
        std::size_t n = cur->items().size();
        if (h >= n) throw AddressError("address index out of range");
        // Steps through the right-nested ∧ fold to the h-th conjunct.
        if (n > 1) {
            std::size_t rights = h == n - 1 ? n - 1 : h;
            for (std::size_t k = 0; k < rights; ++k) slot.push_back(1);
            if (h != n - 1) slot.push_back(0);
        }
        const Item& it = cur->items()[h];
        if (!it.is_cut()) throw AddressError("address descends into an atom");
        if (it.kind() == NodeKind::ContinuousCut) {
            slot.push_back(0); // ¬
        } else {
            // ◇¬x = ¬□¬¬x: Not, Box, Not, Not.
            slot.push_back(0);
            slot.push_back(0);
            slot.push_back(0);
            slot.push_back(0);
        }
        cur = &it.area();
    }
    return FormulaContext{pi(g), slot};
}

// ---------------------------------------------------------------------------
// SK → graphs (Lemma 16 direction)

namespace {

std::size_t locate(const Graph& area, const Item& it, std::size_t exclude = SIZE_MAX) {
    std::string key = it.print();
    for (std::size_t i = 0; i < area.size(); ++i)
        if (i != exclude && area.items()[i].print() == key) return i;
    throw SchemaError("translation lost track of an item: " + key);
}

std::vector<std::size_t> locate_sub(const Graph& area, const Graph& sub) {
    std::vector<bool> used(area.size(), false);
    std::vector<std::size_t> out;
    for (const Item& it : sub.items()) {
        std::string key = it.print();
        bool found = false;
        for (std::size_t i = 0; i < area.size(); ++i)
            if (!used[i] && area.items()[i].print() == key) {
                used[i] = true;
                out.push_back(i);
                found = true;
                break;
            }
        if (!found) throw SchemaError("translation lost track of a sub-multiset");
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Kernel-step helpers over a ProofBuilder, locating positions by value.
struct GB {
    ProofBuilder& b;

    Graph at(std::size_t r) const { return b.at(r); }
    Graph area(std::size_t r, const std::vector<std::size_t>& path) const {
        return subgraph_at(b.at(r), Address::area(path));
    }

    std::size_t dc1_empty(std::size_t r, std::vector<std::size_t> path = {}) {
        return b.kernel(r, RuleInstance{RuleName::DC1, Address::area(std::move(path)),
                                        {}, {}, {}, {}});
    }
    std::size_t dc1_wrap(std::size_t r, std::vector<std::size_t> path, const Graph& sub) {
        auto idx = locate_sub(area(r, path), sub);
        return b.kernel(r, RuleInstance{RuleName::DC1, Address::area(std::move(path)),
                                        std::move(idx), {}, {}, {}});
    }
    std::size_t dc2(std::size_t r, std::vector<std::size_t> path, const Item& dd) {
        std::size_t i = locate(area(r, path), dd);
        return b.kernel(r, RuleInstance{RuleName::DC2, Address::area(std::move(path)),
                                        {i}, {}, {}, {}});
    }
    std::size_t ins(std::size_t r, std::vector<std::size_t> path, const Graph& payload) {
        return b.kernel(r, RuleInstance{RuleName::INS, Address::area(std::move(path)),
                                        {}, {}, payload, {}});
    }
    std::size_t del(std::size_t r, std::vector<std::size_t> path, const Graph& sub) {
        auto idx = locate_sub(area(r, path), sub);
        return b.kernel(r, RuleInstance{RuleName::DEL, Address::area(std::move(path)),
                                        std::move(idx), {}, {}, {}});
    }
    std::size_t it_imm(std::size_t r, std::vector<std::size_t> path, const Item& src,
                       const Item& host) {
        Graph a = area(r, path);
        std::size_t i = locate(a, src);
        std::size_t j = locate(a, host, i);
        std::vector<std::size_t> target = path;
        target.push_back(j);
        return b.kernel(r, RuleInstance{RuleName::IT, Address::area(std::move(path)), {i},
                                        Address::area(std::move(target)), {}, {}});
    }
    std::size_t deit_imm(std::size_t r, std::vector<std::size_t> path, const Item& src,
                         const Item& host) {
        Graph a = area(r, path);
        std::size_t i = locate(a, src);
        std::size_t j = locate(a, host, i);
        std::vector<std::size_t> target = path;
        target.push_back(j);
        return b.kernel(r, RuleInstance{RuleName::DEIT, Address::area(std::move(path)), {i},
                                        Address::area(std::move(target)), {}, {}});
    }
    std::size_t k2(std::size_t r, std::vector<std::size_t> path, const Item& n1,
                   const Item& n2) {
        Graph a = area(r, path);
        std::size_t i = locate(a, n1);
        std::size_t j = locate(a, n2, i);
        std::vector<std::size_t> idx{std::min(i, j), std::max(i, j)};
        return b.kernel(r, RuleInstance{RuleName::K2, Address::area(std::move(path)),
                                        std::move(idx), {}, {}, {}});
    }
    std::size_t rule_at(std::size_t r, RuleName rule, std::vector<std::size_t> path,
                        const Item& target_item) {
        std::size_t i = locate(area(r, path), target_item);
        return b.kernel(r, RuleInstance{rule, Address::area(std::move(path)), {i}, {}, {}, {}});
    }

    // ⊢ (G (G))
    std::size_t lemma_g_imp_g(const Graph& g) {
        std::size_t r = b.axiom();
        r = dc1_empty(r);
        r = ins(r, {0}, g);
        std::vector<Item> acc;
        for (const Item& x : g.items()) {
            r = it_imm(r, {0}, x, Item::cut(Graph{acc}));
            acc.push_back(x);
        }
        return r;
    }
    // ⊢ (G ())
    std::size_t lemma_g_imp_sa(const Graph& g) {
        std::size_t r = b.axiom();
        r = dc1_empty(r);
        return ins(r, {0}, g);
    }
};

struct SkTranslator {
    ProofBuilder& b;
    const SigmaSet& sigma_set;
    GB gb;

    SkTranslator(ProofBuilder& pb, const SigmaSet& ss) : b(pb), sigma_set(ss), gb{pb} {}

    static Graph concl(const Sequent& s) {
        return Graph::implies(sigma(s.left), sigma(s.right));
    }

    std::size_t finish(std::size_t step, const Sequent& s) {
        if (b.at(step) != concl(s))
            throw SchemaError("sk translation produced an unexpected graph for " + s.print());
        return step;
    }

    std::size_t axiom_wrap(std::size_t derived) {
        // From ⊢G produce ⊢ ((G)), i.e. SA ⊃ G.
        return gb.dc1_wrap(derived, {}, b.at(derived));
    }

    std::size_t node(const SKProof& p) {
        switch (p.rule) {
        case SKRule::Id: return finish(gb.lemma_g_imp_g(sigma(p.seq.left)), p.seq);
        case SKRule::Top: return finish(gb.lemma_g_imp_sa(sigma(p.seq.left)), p.seq);
        case SKRule::Em: {
            // T ⊢ a | ~a: derive ((A) ((A))), then wrap.
            Formula a = p.seq.right.left().left().left(); // ~(~a & ~~a) → a
            Graph ca = Graph::cut(sigma(a));
            std::size_t r = gb.lemma_g_imp_g(ca);
            return finish(axiom_wrap(r), p.seq);
        }
        case SKRule::Gen: {
            std::size_t r = b.axiom();
            r = gb.dc1_empty(r);
            return finish(axiom_wrap(r), p.seq);
        }
        case SKRule::BoxAnd: {
            Graph a = sigma(p.seq.left.left().left());
            Graph c = sigma(p.seq.left.right().left());
            Item na = Item::cut(Graph::bcut(a));
            Item nc = Item::cut(Graph::bcut(c));
            Graph both = Graph::juxtapose(Graph::single(na), Graph::single(nc));
            std::size_t r = gb.lemma_g_imp_g(both);
            // Merge the two necessity cuts inside the consequent.
            Item q = Item::cut(both);
            std::size_t qi = locate(b.at(r).items()[0].area(), q);
            r = gb.k2(r, {0, qi}, na, nc);
            return finish(r, p.seq);
        }
        case SKRule::D: return finish(distribution(p.seq), p.seq);
        case SKRule::Sigma: return finish(sigma_axiom(p.seq.right), p.seq);
        case SKRule::NegL: {
            std::size_t c = node(p.children[0]);
            Graph a = sigma(p.children[0].seq.left.left()); // premise left = ~alpha
            Graph bta = sigma(p.children[0].seq.right);
            std::size_t r = contrapose_step(c, Item::cut(bta));
            // Splice the doubly wrapped alpha in the consequent.
            Item dd = Item::cut(Graph::cut(Graph::single(Item::cut(a))));
            r = gb.dc2(r, {0}, dd);
            return finish(r, p.seq);
        }
        case SKRule::NegR: {
            std::size_t c = node(p.children[0]);
            Graph bt = sigma(p.children[0].seq.right.left()); // premise right = ~beta
            std::size_t r = contrapose_step(c, Item::cut(Graph::cut(bt)));
            // Splice the new antecedent's double wrap back to beta's items.
            r = gb.dc2(r, {0}, Item::cut(Graph::cut(bt)));
            return finish(r, p.seq);
        }
        case SKRule::Tr: {
            std::size_t c1 = node(p.children[0]);
            std::size_t c2 = node(p.children[1]);
            Graph mid = sigma(p.children[0].seq.right);
            MacroParams mp;
            mp.index = locate(b.at(c1).items()[0].area(), Item::cut(mid));
            mp.index2 = locate(b.at(c2).items()[0].area(),
                               Item::cut(sigma(p.children[1].seq.right)));
            return finish(b.macro(MacroName::TR, {c1, c2}, mp), p.seq);
        }
        case SKRule::AndL1:
        case SKRule::AndL2: {
            std::size_t c = node(p.children[0]);
            Formula other = p.rule == SKRule::AndL1 ? p.seq.left.right() : p.seq.left.left();
            MacroParams mp;
            mp.graph = sigma(other);
            return finish(b.macro(MacroName::AndL, {c}, mp), p.seq);
        }
        case SKRule::AndR: {
            std::size_t c1 = node(p.children[0]);
            std::size_t c2 = node(p.children[1]);
            MacroParams mp;
            mp.index = locate(b.at(c1).items()[0].area(),
                              Item::cut(sigma(p.children[0].seq.right)));
            mp.index2 = locate(b.at(c2).items()[0].area(),
                               Item::cut(sigma(p.children[1].seq.right)));
            return finish(b.macro(MacroName::AndR, {c1, c2}, mp), p.seq);
        }
        case SKRule::Box: {
            std::size_t c = node(p.children[0]);
            MacroParams mp;
            mp.index = locate(b.at(c).items()[0].area(),
                              Item::cut(sigma(p.children[0].seq.right)));
            return finish(b.macro(MacroName::UMN, {c}, mp), p.seq);
        }
        }
        throw SchemaError("unknown SK rule");
    }

    // CP at the proof level: wrap everything except the consequent cut.
    std::size_t contrapose_step(std::size_t r, const Item& consequent_cut) {
        const Item& w = b.at(r).items()[0];
        std::size_t ci = locate(w.area(), consequent_cut);
        std::vector<Item> ant;
        for (std::size_t i = 0; i < w.area().size(); ++i)
            if (i != ci) ant.push_back(w.area().items()[i]);
        return gb.dc1_wrap(r, {0}, Graph{std::move(ant)});
    }

    // D axiom: α∧(β∨γ) ⊢ (α∧β)∨(α∧γ).
    std::size_t distribution(const Sequent& s) {
        Graph a = sigma(s.left.left());
        Formula orf = s.left.right();
        Graph bg = sigma(orf.left().left().left());  // ¬(¬β∧¬γ)
        Graph cg = sigma(orf.left().right().left());
        Item cb = Item::cut(bg);
        Item cc = Item::cut(cg);
        Item w = Item::cut(Graph::juxtapose(Graph::single(cb), Graph::single(cc)));
        Graph lhs = Graph::juxtapose(a, Graph::single(w));

        std::size_t r = gb.lemma_g_imp_g(lhs);
        // Distribute α over the disjunction inside the consequent copy.
        auto qpath = [&](const Item& q) -> std::vector<std::size_t> {
            return {0, locate(b.at(r).items()[0].area(), q)};
        };
        // α-copies move beside the disjunct cuts.
        Graph inacc;
        Item w_now = w;
        for (const Item& x : a.items()) {
            Item q = Item::cut(Graph::juxtapose(a, Graph::single(w_now)));
            auto path = qpath(q);
            r = gb.it_imm(r, path, x, w_now);
            inacc = Graph::juxtapose(inacc, Graph::single(x));
            w_now = Item::cut(Graph::juxtapose(
                Graph::juxtapose(Graph::single(cb), Graph::single(cc)), inacc));
        }
        // Then into each disjunct.
        Item cb_now = cb;
        Graph bacc;
        for (const Item& x : a.items()) {
            Item q = Item::cut(Graph::juxtapose(a, Graph::single(w_now)));
            auto path = qpath(q);
            path.push_back(locate(gb.area(r, path), w_now));
            r = gb.it_imm(r, path, x, cb_now);
            bacc = Graph::juxtapose(bacc, Graph::single(x));
            cb_now = Item::cut(Graph::juxtapose(bg, bacc));
            Item w_next = Item::cut(Graph::juxtapose(
                Graph::juxtapose(Graph::single(cb_now), Graph::single(cc)), inacc));
            w_now = w_next;
        }
        Item cc_now = cc;
        Graph cacc;
        for (const Item& x : a.items()) {
            Item q = Item::cut(Graph::juxtapose(a, Graph::single(w_now)));
            auto path = qpath(q);
            path.push_back(locate(gb.area(r, path), w_now));
            r = gb.it_imm(r, path, x, cc_now);
            cacc = Graph::juxtapose(cacc, Graph::single(x));
            cc_now = Item::cut(Graph::juxtapose(cg, cacc));
            Item w_next = Item::cut(Graph::juxtapose(
                Graph::juxtapose(Graph::single(cb_now), Graph::single(cc_now)), inacc));
            w_now = w_next;
        }
        // Remove the shuttle copies and the α originals in the copy.
        Graph aleft = a;
        for (const Item& x : a.items()) {
            Item q = Item::cut(Graph::juxtapose(a, Graph::single(w_now)));
            auto path = qpath(q);
            r = gb.deit_imm(r, path, x, w_now);
            aleft = minus_graph(aleft, x);
            w_now = Item::cut(Graph::juxtapose(
                Graph::juxtapose(Graph::single(cb_now), Graph::single(cc_now)), aleft));
        }
        if (!a.empty()) {
            Item q = Item::cut(Graph::juxtapose(a, Graph::single(w_now)));
            r = gb.del(r, qpath(q), a);
        }
        return r;
    }

    static Graph minus_graph(const Graph& g, const Item& x) {
        std::vector<Item> items = g.items();
        std::string key = x.print();
        for (std::size_t i = 0; i < items.size(); ++i)
            if (items[i].print() == key) {
                items.erase(items.begin() + static_cast<std::ptrdiff_t>(i));
                break;
            }
        return Graph{std::move(items)};
    }

    // Σ-axiom leaf: ⊤ ⊢ inst.
    std::size_t sigma_axiom(const Formula& inst) {
        if (!sigma_set.contains(inst))
            throw SchemaError("sigma axiom not enabled: " + inst.print());
        for (AxiomSchema sch : {AxiomSchema::D, AxiomSchema::T, AxiomSchema::Four,
                                AxiomSchema::B, AxiomSchema::Five}) {
            std::optional<Formula> x = match_axiom(sch, inst);
            if (!x) continue;
            return axiom_wrap(extension_axiom(sch, sigma(*x)));
        }
        throw SchemaError("sigma axiom is not an instance of a supported schema: " +
                          inst.print());
    }

    // ⊢ σ(axiom) using the matching system's rules.
    std::size_t extension_axiom(AxiomSchema sch, const Graph& x) {
        switch (sch) {
        case AxiomSchema::D: {
            std::size_t r = b.axiom();
            r = gb.dc1_empty(r);
            r = gb.rule_at(r, RuleName::Dpos, {}, Item::cut(Graph::cut(Graph::sa())));
            return gb.dc1_wrap(r, {}, b.at(r));
        }
        case AxiomSchema::T: {
            Item nx = Item::cut(Graph::bcut(x));
            std::size_t r = gb.lemma_g_imp_g(Graph::single(nx));
            auto qi = [&](const Item& q) { return locate(b.at(r).items()[0].area(), q); };
            r = gb.rule_at(r, RuleName::Tneg, {0, qi(Item::cut(Graph::single(nx))), 0},
                           Item::bcut(x));
            Item copy1 = Item::cut(Graph::cut(x));
            r = gb.dc2(r, {0, qi(Item::cut(Graph::single(copy1)))}, copy1);
            return r;
        }
        case AxiomSchema::Four: {
            Item nx = Item::cut(Graph::bcut(x));
            std::size_t r = gb.lemma_g_imp_g(Graph::single(nx));
            std::size_t qi = locate(b.at(r).items()[0].area(), Item::cut(Graph::single(nx)));
            return gb.rule_at(r, RuleName::FourPos, {0, qi}, nx);
        }
        case AxiomSchema::B: {
            std::size_t r = gb.lemma_g_imp_g(x);
            auto qi = [&](const Item& q) { return locate(b.at(r).items()[0].area(), q); };
            r = gb.dc1_wrap(r, {0, qi(Item::cut(x))}, x);
            Item c1 = Item::cut(x);
            Item dd0 = Item::cut(Graph::cut(x));
            r = gb.rule_at(r, RuleName::Bneg,
                           {0, qi(Item::cut(Graph::single(dd0))), 0}, c1);
            Item b_in = Item::bcut(Graph::single(c1));
            Item bb = Item::bcut(Graph::single(b_in));
            Item dd1 = Item::cut(Graph::single(bb));
            r = gb.dc1_wrap(r, {0, qi(Item::cut(Graph::single(dd1))), 0, 0},
                            Graph::single(b_in));
            return r;
        }
        case AxiomSchema::Five: {
            Graph dx = sigma_diamond(x);
            std::size_t r = gb.lemma_g_imp_g(dx);
            auto qi = [&](const Item& q) { return locate(b.at(r).items()[0].area(), q); };
            Item c2 = Graph::ncut(Graph::cut(x)).items()[0];
            r = gb.rule_at(r, RuleName::FiveNeg, {0, qi(Item::cut(dx)), 0}, c2);
            Item b_in = Item::bcut(Graph::cut(x));
            Item bb = Item::bcut(Graph::single(b_in));
            Item c3e = Item::cut(Graph::single(bb));
            r = gb.dc1_wrap(r, {0, qi(Item::cut(Graph::single(c3e))), 0, 0},
                            Graph::single(b_in));
            return r;
        }
        }
        throw SchemaError("unsupported axiom schema");
    }

    static Graph sigma_diamond(const Graph& x) {
        // σ(◇φ) for σφ = x: cut(ncut(cut(x))).
        return Graph::cut(Graph::ncut(Graph::cut(x)));
    }
};

} // namespace

Proof translate_proof_sk_to_g(const SKProof& p, const SigmaSet& sigma_set, SystemId system) {
    ProofBuilder b(system);
    SkTranslator t(b, sigma_set);
    t.node(p);
    return b.take();
}

} // namespace pmk
