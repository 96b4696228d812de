// macros.cpp — elaboration of the admissible rules into kernel steps.
//
// The side condition on iteration is read literally: the whole context
// item, slot excised, must be broken-cut-free.  The templates below
// therefore never iterate past an item that keeps modal material outside
// the slot; every iteration lands either in the firing area itself, in
// the immediate area of a sibling continuous cut, or under a bare spine
// of continuous cuts.  This makes each template valid for arbitrary
// (modal) instantiations of its schema variables.

#include "pmk/proof.hpp"

#include <algorithm>

namespace pmk {

namespace {

using Path = std::vector<std::size_t>;

// ---------------------------------------------------------------------------
// Script assembly

class Script {
  public:
    explicit Script(std::vector<Graph> inputs) : inputs_(std::move(inputs)) {}

    ElabRef input(std::size_t k) const { return ElabRef{true, k}; }

    const Graph& at(ElabRef r) const {
        return r.is_input ? inputs_[r.index] : steps_[r.index].result;
    }

    ElabRef ax() {
        ElabStep s;
        s.kind = StepKind::Axiom;
        s.result = Graph::sa();
        steps_.push_back(std::move(s));
        return ElabRef{false, steps_.size() - 1};
    }

    ElabRef apply(ElabRef prem, RuleInstance r) {
        ElabStep s;
        s.kind = StepKind::Kernel;
        s.result = apply_rule(at(prem), r);
        s.rule = std::move(r);
        s.premise = prem;
        steps_.push_back(std::move(s));
        return ElabRef{false, steps_.size() - 1};
    }

    ElabRef jux(ElabRef a, ElabRef b) {
        ElabStep s;
        s.kind = StepKind::Jux;
        s.premise = a;
        s.premise2 = b;
        s.result = Graph::juxtapose(at(a), at(b));
        steps_.push_back(std::move(s));
        return ElabRef{false, steps_.size() - 1};
    }

    std::vector<ElabStep> take() { return std::move(steps_); }

  private:
    std::vector<Graph> inputs_;
    std::vector<ElabStep> steps_;
};

// ---------------------------------------------------------------------------
// Lookup helpers (by canonical value; equal items are interchangeable)

std::size_t find_item(const Graph& area, const Item& it, std::size_t exclude = SIZE_MAX) {
    std::string key = it.print();
    for (std::size_t i = 0; i < area.size(); ++i)
        if (i != exclude && area.items()[i].print() == key) return i;
    throw SchemaError("expected item not found: " + key);
}

std::vector<std::size_t> find_sub(const Graph& area, const Graph& sub) {
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
        if (!found) throw SchemaError("expected sub-multiset not found: " + sub.print());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph minus_sub(const Graph& area, const Graph& sub) {
    std::vector<std::size_t> idx = find_sub(area, sub);
    std::vector<Item> out;
    for (std::size_t i = 0; i < area.size(); ++i)
        if (!std::binary_search(idx.begin(), idx.end(), i)) out.push_back(area.items()[i]);
    return Graph{std::move(out)};
}

const Item& only_item(const Graph& g, const char* what) {
    if (g.size() != 1) throw SchemaError(std::string(what) + ": expected a single item");
    return g.items()[0];
}

const Item& cut_item_at(const Graph& area, std::size_t idx, const char* what) {
    if (idx >= area.size()) throw SchemaError(std::string(what) + ": index out of range");
    const Item& it = area.items()[idx];
    if (it.kind() != NodeKind::ContinuousCut)
        throw SchemaError(std::string(what) + ": expected a continuous cut");
    return it;
}

// ---------------------------------------------------------------------------
// Mid-level moves.  All take the current value of the graph from the
// script, locate positions by value, and emit one kernel step.

ElabRef del_sub(Script& s, ElabRef r, const Path& area, const Graph& sub) {
    Graph a = subgraph_at(s.at(r), Address::area(area));
    return s.apply(r, RuleInstance{RuleName::DEL, Address::area(area), find_sub(a, sub), {}, {}, {}});
}

ElabRef ins(Script& s, ElabRef r, const Path& area, const Graph& payload) {
    return s.apply(r, RuleInstance{RuleName::INS, Address::area(area), {}, {}, payload, {}});
}

ElabRef dc1_wrap(Script& s, ElabRef r, const Path& area, const Graph& sub) {
    Graph a = subgraph_at(s.at(r), Address::area(area));
    return s.apply(r, RuleInstance{RuleName::DC1, Address::area(area), find_sub(a, sub), {}, {}, {}});
}

ElabRef dc2_splice(Script& s, ElabRef r, const Path& area, const Item& dd) {
    Graph a = subgraph_at(s.at(r), Address::area(area));
    return s.apply(r, RuleInstance{RuleName::DC2, Address::area(area), {find_item(a, dd)}, {}, {}, {}});
}

// Iterates `src` (an item of the area) into the immediate area of the
// sibling continuous-cut item `host`.
ElabRef it_imm(Script& s, ElabRef r, const Path& area, const Item& src, const Item& host) {
    Graph a = subgraph_at(s.at(r), Address::area(area));
    std::size_t i = find_item(a, src);
    std::size_t j = find_item(a, host, i);
    Path target = area;
    target.push_back(j);
    return s.apply(r, RuleInstance{RuleName::IT, Address::area(area), {i}, Address::area(target),
                                   {}, {}});
}

// Removes the copy of `src` sitting in the immediate area of `host`.
ElabRef deit_imm(Script& s, ElabRef r, const Path& area, const Item& src, const Item& host) {
    Graph a = subgraph_at(s.at(r), Address::area(area));
    std::size_t i = find_item(a, src);
    std::size_t j = find_item(a, host, i);
    Path target = area;
    target.push_back(j);
    return s.apply(r, RuleInstance{RuleName::DEIT, Address::area(area), {i}, Address::area(target),
                                   {}, {}});
}

// Removes the copy of `src` from the area reached by descending `rel`
// below the sibling `host` (a spine of continuous cuts).
ElabRef deit_deep(Script& s, ElabRef r, const Path& area, const Item& src, const Item& host,
                  const Path& rel) {
    Graph a = subgraph_at(s.at(r), Address::area(area));
    std::size_t i = find_item(a, src);
    std::size_t j = find_item(a, host, i);
    Path target = area;
    target.push_back(j);
    target.insert(target.end(), rel.begin(), rel.end());
    return s.apply(r, RuleInstance{RuleName::DEIT, Address::area(area), {i}, Address::area(target),
                                   {}, {}});
}

ElabRef it_same(Script& s, ElabRef r, const Path& area, const Item& src) {
    Graph a = subgraph_at(s.at(r), Address::area(area));
    return s.apply(r, RuleInstance{RuleName::IT, Address::area(area), {find_item(a, src)},
                                   Address::area(area), {}, {}});
}

ElabRef deit_same(Script& s, ElabRef r, const Path& area, const Item& src) {
    Graph a = subgraph_at(s.at(r), Address::area(area));
    return s.apply(r, RuleInstance{RuleName::DEIT, Address::area(area), {find_item(a, src)},
                                   Address::area(area), {}, {}});
}

// ---------------------------------------------------------------------------
// Shared schema decompositions

// Splits the single root item of an implication-shaped graph into its
// antecedent multiset and consequent cut.
struct ImpShape {
    Item whole;
    Graph antecedent;
    Item consequent_cut; // a continuous cut
    Graph consequent;    // its contents
};

ImpShape split_implication(const Graph& g, std::size_t cidx, const char* what) {
    const Item& w = only_item(g, what);
    if (w.kind() != NodeKind::ContinuousCut)
        throw SchemaError(std::string(what) + ": premise is not an implication graph");
    const Graph& area = w.area();
    const Item& q = cut_item_at(area, cidx, what);
    std::vector<Item> ant;
    for (std::size_t i = 0; i < area.size(); ++i)
        if (i != cidx) ant.push_back(area.items()[i]);
    return ImpShape{w, Graph{std::move(ant)}, q, q.area()};
}

std::size_t need_index(const MacroParams& p, const char* what) {
    if (!p.index) throw SchemaError(std::string(what) + ": missing index parameter");
    return *p.index;
}

std::size_t need_index2(const MacroParams& p, const char* what) {
    if (!p.index2) throw SchemaError(std::string(what) + ": missing second index parameter");
    return *p.index2;
}

const Graph& need_graph(const MacroParams& p, const char* what) {
    if (!p.graph) throw SchemaError(std::string(what) + ": missing graph parameter");
    return *p.graph;
}

const Graph& need_graph2(const MacroParams& p, const char* what) {
    if (!p.graph2) throw SchemaError(std::string(what) + ": missing second graph parameter");
    return *p.graph2;
}

const GraphContext& need_context(const MacroParams& p, const char* what) {
    if (!p.context) throw SchemaError(std::string(what) + ": missing context parameter");
    return *p.context;
}

// ---------------------------------------------------------------------------
// Core derivations

// ⊢ (G ()) — the first half of the base lemma.
ElabRef lemma_g_imp_sa(Script& s, const Graph& g) {
    ElabRef r = s.ax();
    r = s.apply(r, RuleInstance{RuleName::DC1, Address::root(), {}, {}, {}, {}});
    return ins(s, r, {0}, g);
}

// ⊢ (G (G)).
ElabRef lemma_g_imp_g(Script& s, const Graph& g) {
    ElabRef r = s.ax();
    r = s.apply(r, RuleInstance{RuleName::DC1, Address::root(), {}, {}, {}, {}});
    r = ins(s, r, {0}, g);
    std::vector<Item> acc;
    for (const Item& x : g.items()) {
        Item host = Item::cut(Graph{acc});
        r = it_imm(s, r, {0}, x, host);
        acc.push_back(x);
    }
    return r;
}

// From ⊢G: ⊢ (H (G)).
ElabRef prefix_hyp(Script& s, ElabRef r, const Graph& h) {
    Graph cur = s.at(r);
    r = dc1_wrap(s, r, {}, cur);
    return ins(s, r, {0}, h);
}

// CP: from (X (Y)) derive ((Y) ((X))) by wrapping the antecedent.
ElabRef contrapose(Script& s, ElabRef r, std::size_t cidx) {
    ImpShape is = split_implication(s.at(r), cidx, "CP");
    return dc1_wrap(s, r, {0}, is.antecedent);
}

// From an implication and Z: (X Z (Y Z)).
ElabRef jux_mono(Script& s, ElabRef r, std::size_t cidx, const Graph& z) {
    ImpShape is = split_implication(s.at(r), cidx, "juxtaposition monotonicity");
    r = ins(s, r, {0}, z);
    Graph host_contents = is.consequent;
    for (const Item& x : z.items()) {
        r = it_imm(s, r, {0}, x, Item::cut(host_contents));
        host_contents = Graph::juxtapose(host_contents, Graph::single(x));
    }
    return r;
}

// MP: from X and (X (Y)) derive Y.
ElabRef modus_ponens(Script& s, ElabRef xr, ElabRef impr, std::size_t cidx) {
    ImpShape is = split_implication(s.at(impr), cidx, "MP");
    if (is.antecedent != s.at(xr))
        throw SchemaError("MP: antecedent does not match the first premise");
    ElabRef r = s.jux(xr, impr);
    Graph remaining = is.antecedent;
    Graph xg = s.at(xr);
    for (const Item& x : xg.items()) {
        r = deit_imm(s, r, {}, x, Item::cut(Graph::juxtapose(remaining,
                                                             Graph::single(is.consequent_cut))));
        remaining = minus_sub(remaining, Graph::single(x));
    }
    r = dc2_splice(s, r, {}, Item::cut(Graph::single(is.consequent_cut)));
    if (!xg.empty()) r = del_sub(s, r, {}, xg);
    return r;
}

// TR: from (G (J)) and (J (H)) derive (G (H)).
ElabRef transitivity_impl(Script& s, ElabRef ar, ElabRef br, std::size_t cidxA,
                          std::size_t cidxB) {
    ImpShape a = split_implication(s.at(ar), cidxA, "TR");
    ImpShape b = split_implication(s.at(br), cidxB, "TR");
    if (b.antecedent != a.consequent)
        throw SchemaError("TR: middle graphs do not agree");
    Graph g = a.antecedent;
    Graph j = a.consequent;
    Item cj = a.consequent_cut;
    Item bit = b.whole;
    Item ch = b.consequent_cut;

    ElabRef r = s.jux(ar, br);
    r = it_imm(s, r, {}, bit, a.whole);

    // Evolving first item and its inner middle cut.
    auto a_item = [&](const Item& middle) {
        return Item::cut(Graph::juxtapose(Graph::juxtapose(g, Graph::single(middle)),
                                          Graph::single(bit)));
    };
    Item cj2 = Item::cut(Graph::juxtapose(j, Graph::single(bit)));
    {
        Graph root = s.at(r);
        std::size_t ai = find_item(root, a_item(cj));
        r = it_imm(s, r, {ai}, bit, cj);
    }
    // Deiterate the middle's items out of the inner copy of B.
    Graph jleft = j;
    for (const Item& x : j.items()) {
        Item bit_k = Item::cut(Graph::juxtapose(jleft, Graph::single(ch)));
        Item cj_k = Item::cut(Graph::juxtapose(j, Graph::single(bit_k)));
        Graph root = s.at(r);
        std::size_t ai = find_item(root, a_item(cj_k));
        Graph a_area = subgraph_at(root, Address::area({ai}));
        std::size_t ci = find_item(a_area, cj_k);
        r = deit_imm(s, r, {ai, ci}, x, bit_k);
        jleft = minus_sub(jleft, Graph::single(x));
    }
    // The copy is now ((H)); splice it and clear the middle.
    Item bit_done = Item::cut(Graph::single(ch));
    Item cj_done = Item::cut(Graph::juxtapose(j, Graph::single(bit_done)));
    {
        Graph root = s.at(r);
        std::size_t ai = find_item(root, a_item(cj_done));
        Graph a_area = subgraph_at(root, Address::area({ai}));
        std::size_t ci = find_item(a_area, cj_done);
        r = dc2_splice(s, r, {ai, ci}, bit_done);
    }
    Item cj_sp = Item::cut(Graph::juxtapose(j, ch.area()));
    if (!j.empty()) {
        Graph root = s.at(r);
        std::size_t ai = find_item(root, a_item(cj_sp));
        Graph a_area = subgraph_at(root, Address::area({ai}));
        std::size_t ci = find_item(a_area, cj_sp);
        r = del_sub(s, r, {ai, ci}, j);
    }
    // Drop the consumed copy of B and the second premise.
    r = deit_imm(s, r, {}, bit, a_item(ch));
    r = del_sub(s, r, {}, Graph::single(bit));
    return r;
}

// AndR: from (G (H)) and (G (J)) derive (G (H J)).
ElabRef and_right(Script& s, ElabRef ar, ElabRef br, std::size_t cidxA, std::size_t cidxB) {
    ImpShape a = split_implication(s.at(ar), cidxA, "AndR");
    ImpShape b = split_implication(s.at(br), cidxB, "AndR");
    if (a.antecedent != b.antecedent)
        throw SchemaError("AndR: antecedents do not agree");
    Graph g = a.antecedent;
    Graph h = a.consequent;
    Item ch = a.consequent_cut;
    Item bit = b.whole;
    Item cj = b.consequent_cut;

    ElabRef r = s.jux(ar, br);
    r = it_imm(s, r, {}, bit, a.whole);
    auto a_item = [&](const Item& middle) {
        return Item::cut(Graph::juxtapose(Graph::juxtapose(g, Graph::single(middle)),
                                          Graph::single(bit)));
    };
    // Copy B beside H, then feed it the shared antecedent.
    {
        std::size_t ai = find_item(s.at(r), a_item(ch));
        r = it_imm(s, r, {ai}, bit, ch);
    }
    Graph gacc;
    for (const Item& x : g.items()) {
        Item ch_k = Item::cut(
            Graph::juxtapose(Graph::juxtapose(h, Graph::single(bit)), gacc));
        std::size_t ai = find_item(s.at(r), a_item(ch_k));
        r = it_imm(s, r, {ai}, x, ch_k);
        gacc = Graph::juxtapose(gacc, Graph::single(x));
    }
    // Inside the enlarged cut, consume the B copy with the antecedent.
    Graph gleft = g;
    for (const Item& x : g.items()) {
        Item bit_k = Item::cut(Graph::juxtapose(gleft, Graph::single(cj)));
        Item ch_k = Item::cut(Graph::juxtapose(Graph::juxtapose(h, Graph::single(bit_k)), g));
        std::size_t ai = find_item(s.at(r), a_item(ch_k));
        Graph a_area = subgraph_at(s.at(r), Address::area({ai}));
        std::size_t ci = find_item(a_area, ch_k);
        r = deit_imm(s, r, {ai, ci}, x, bit_k);
        gleft = minus_sub(gleft, Graph::single(x));
    }
    Item bit_done = Item::cut(Graph::single(cj));
    {
        Item ch_k = Item::cut(Graph::juxtapose(Graph::juxtapose(h, Graph::single(bit_done)), g));
        std::size_t ai = find_item(s.at(r), a_item(ch_k));
        Graph a_area = subgraph_at(s.at(r), Address::area({ai}));
        std::size_t ci = find_item(a_area, ch_k);
        r = dc2_splice(s, r, {ai, ci}, bit_done);
    }
    {
        Item ch_k = Item::cut(Graph::juxtapose(Graph::juxtapose(h, b.consequent), g));
        std::size_t ai = find_item(s.at(r), a_item(ch_k));
        Graph a_area = subgraph_at(s.at(r), Address::area({ai}));
        std::size_t ci = find_item(a_area, ch_k);
        if (!g.empty()) r = del_sub(s, r, {ai, ci}, g);
    }
    Item ch_final = Item::cut(Graph::juxtapose(h, b.consequent));
    r = deit_imm(s, r, {}, bit, a_item(ch_final));
    r = del_sub(s, r, {}, Graph::single(bit));
    return r;
}

// UMN: from (G (H)) derive (({H}) (({G}))) — necessity-cut monotonicity.
ElabRef up_mono_necessity(Script& s, ElabRef r, std::size_t cidx) {
    ImpShape is = split_implication(s.at(r), cidx, "UMN");
    Graph area = is.whole.area();
    std::vector<std::size_t> pidx;
    for (std::size_t i = 0; i < area.size(); ++i)
        if (i != cidx) pidx.push_back(i);
    r = s.apply(r, RuleInstance{RuleName::DMN, Address::root(), {0}, {}, {},
                                std::make_pair(pidx, std::vector<std::size_t>{cidx})});
    // Contrapose: wrap the broken-cut antecedent.
    Item bq = Item::bcut(is.consequent);
    return dc1_wrap(s, r, {0}, Graph::single(bq));
}

// From (X (Y)) derive ({Y} ({X})) ⊃-style: broken-cut antitonicity.
ElabRef bcut_antitone(Script& s, ElabRef r, std::size_t cidx) {
    ImpShape is = split_implication(s.at(r), cidx, "broken-cut antitonicity");
    Graph x = is.antecedent;
    Graph y = is.consequent;
    r = up_mono_necessity(s, r, cidx);
    // Now: ((({Y}))-wrapped necessity implication; contrapose and unwrap.
    Item ncut_x = Item::cut(Graph::single(Item::bcut(x)));
    Item ncut_y = Item::cut(Graph::single(Item::bcut(y)));
    {
        Graph cur = s.at(r); // ( ({X}) (({Y})) )
        std::size_t ci = find_item(only_item(cur, "BMono").area(),
                                   Item::cut(Graph::single(ncut_y)));
        r = contrapose(s, r, ci);
    }
    // ( ((({X}))) (({Y})) ) → splice both double cuts.
    r = dc2_splice(s, r, {0}, Item::cut(Graph::cut(Graph::single(ncut_x))));
    return dc2_splice(s, r, {0}, Item::cut(Graph::single(ncut_y)));
}

} // namespace

// ---------------------------------------------------------------------------
// RE recursion and the remaining macros live in the elaborate dispatcher's
// helper set.

namespace {

ElabRef extract_imp(Script& s, ElabRef er, const Item& other) {
    // The ≡ premise holds both implications at the root; delete the other.
    return del_sub(s, er, {}, Graph::single(other));
}

// RE over a context: from ⊢ X≡Y derive ⊢ J{X}≡J{Y}.
// Returns the ref plus the filled values through this level.
struct ReResult {
    ElabRef ref;
    Graph xf, yf;
};

ReResult replace_equiv(Script& s, ElabRef er, const Graph& skeleton, const Path& slot,
                       std::size_t depth, const Graph& x, const Graph& y) {
    if (depth == slot.size()) {
        ReResult base{er, x, y};
        // Pure juxtaposition with the remaining skeleton items.
        if (skeleton.empty()) return base;
        Item impA = Item::cut(Graph::juxtapose(x, Graph::cut(y)));
        Item impB = Item::cut(Graph::juxtapose(y, Graph::cut(x)));
        ElabRef a = extract_imp(s, er, impB);
        std::size_t ca = find_item(only_item(s.at(a), "RE").area(), Item::cut(y));
        ElabRef ja = jux_mono(s, a, ca, skeleton);
        ElabRef b = extract_imp(s, er, impA);
        std::size_t cb = find_item(only_item(s.at(b), "RE").area(), Item::cut(x));
        ElabRef jb = jux_mono(s, b, cb, skeleton);
        ElabRef j = s.jux(ja, jb);
        return ReResult{j, Graph::juxtapose(x, skeleton), Graph::juxtapose(y, skeleton)};
    }
    std::size_t i = slot[depth];
    if (i >= skeleton.size()) throw SchemaError("RE: context slot path out of range");
    const Item& host = skeleton.items()[i];
    if (!host.is_cut()) throw SchemaError("RE: context slot path descends into an atom");
    ReResult inner = replace_equiv(s, er, host.area(), slot, depth + 1, x, y);
    // Close under the enclosing cut.
    Item impA = Item::cut(Graph::juxtapose(inner.xf, Graph::cut(inner.yf)));
    Item impB = Item::cut(Graph::juxtapose(inner.yf, Graph::cut(inner.xf)));
    Graph xf, yf;
    ElabRef lifted;
    if (host.kind() == NodeKind::ContinuousCut) {
        ElabRef a = extract_imp(s, inner.ref, impB);
        std::size_t ca = find_item(only_item(s.at(a), "RE").area(), Item::cut(inner.yf));
        ElabRef fa = contrapose(s, a, ca); // (cut yf) ⊃ (cut xf)
        ElabRef b = extract_imp(s, inner.ref, impA);
        std::size_t cb = find_item(only_item(s.at(b), "RE").area(), Item::cut(inner.xf));
        ElabRef fb = contrapose(s, b, cb); // (cut xf) ⊃ (cut yf)
        lifted = s.jux(fb, fa);
        xf = Graph::cut(inner.xf);
        yf = Graph::cut(inner.yf);
    } else {
        ElabRef a = extract_imp(s, inner.ref, impB);
        std::size_t ca = find_item(only_item(s.at(a), "RE").area(), Item::cut(inner.yf));
        ElabRef fa = bcut_antitone(s, a, ca); // {yf} ⊃ {xf}
        ElabRef b = extract_imp(s, inner.ref, impA);
        std::size_t cb = find_item(only_item(s.at(b), "RE").area(), Item::cut(inner.xf));
        ElabRef fb = bcut_antitone(s, b, cb); // {xf} ⊃ {yf}
        lifted = s.jux(fb, fa);
        xf = Graph::bcut(inner.xf);
        yf = Graph::bcut(inner.yf);
    }
    // Add the siblings at this level.
    Graph siblings;
    {
        std::vector<Item> sib;
        for (std::size_t k = 0; k < skeleton.size(); ++k)
            if (k != i) sib.push_back(skeleton.items()[k]);
        siblings = Graph{std::move(sib)};
    }
    if (siblings.empty()) return ReResult{lifted, xf, yf};
    Item impA2 = Item::cut(Graph::juxtapose(xf, Graph::cut(yf)));
    Item impB2 = Item::cut(Graph::juxtapose(yf, Graph::cut(xf)));
    ElabRef a2 = extract_imp(s, lifted, impB2);
    std::size_t ca2 = find_item(only_item(s.at(a2), "RE").area(), Item::cut(yf));
    ElabRef ja = jux_mono(s, a2, ca2, siblings);
    ElabRef b2 = extract_imp(s, lifted, impA2);
    std::size_t cb2 = find_item(only_item(s.at(b2), "RE").area(), Item::cut(xf));
    ElabRef jb = jux_mono(s, b2, cb2, siblings);
    ElabRef j = s.jux(ja, jb);
    return ReResult{j, Graph::juxtapose(xf, siblings), Graph::juxtapose(yf, siblings)};
}

// ⊢ ((G) ({G})) in KT+ — a continuous cut implies the broken cut.
ElabRef cut_implies_bcut(Script& s, const Graph& g) {
    if (g.empty()) throw SchemaError("T-minus: inner graph must be non-empty");
    Item cg = Item::cut(g);
    ElabRef r = lemma_g_imp_g(s, Graph::single(cg));
    // Turn the inner copy into a broken cut (positive position).
    Graph cur = s.at(r); // ( (G) ((G)) )
    std::size_t qi = find_item(only_item(cur, "T-minus").area(), Item::cut(Graph::single(cg)));
    return s.apply(r, RuleInstance{RuleName::Tpos, Address::area({0, qi}), {0}, {}, {}, {}});
}

} // namespace

// ---------------------------------------------------------------------------
// Dispatcher

std::vector<ElabStep> elaborate(MacroName m, const std::vector<Graph>& premises,
                                const MacroParams& params) {
    Script s(premises);
    auto need_premises = [&](std::size_t n, const char* what) {
        if (premises.size() != n)
            throw SchemaError(std::string(what) + ": wrong number of premises");
    };

    switch (m) {
    case MacroName::DM1: {
        need_premises(1, "DM1");
        const Graph& gpart = need_graph(params, "DM1");
        const Item& w = only_item(s.at(s.input(0)), "DM1");
        if (w.kind() != NodeKind::ContinuousCut) throw SchemaError("DM1: premise is not a cut");
        Graph hpart = minus_sub(w.area(), gpart);
        ElabRef r = dc1_wrap(s, s.input(0), {0}, gpart);
        dc1_wrap(s, r, {0}, hpart);
        break;
    }
    case MacroName::DM2: {
        need_premises(1, "DM2");
        const Graph& gpart = need_graph(params, "DM2");
        const Graph& hpart = need_graph2(params, "DM2");
        Item ddg = Item::cut(Graph::cut(gpart));
        Item ddh = Item::cut(Graph::cut(hpart));
        ElabRef r = dc2_splice(s, s.input(0), {0}, ddg);
        dc2_splice(s, r, {0}, ddh);
        break;
    }
    case MacroName::CP: {
        need_premises(1, "CP");
        contrapose(s, s.input(0), need_index(params, "CP"));
        break;
    }
    case MacroName::TR: {
        need_premises(2, "TR");
        transitivity_impl(s, s.input(0), s.input(1), need_index(params, "TR"),
                          need_index2(params, "TR"));
        break;
    }
    case MacroName::PF: {
        need_premises(1, "PF");
        prefix_hyp(s, s.input(0), need_graph(params, "PF"));
        break;
    }
    case MacroName::MP: {
        need_premises(2, "MP");
        modus_ponens(s, s.input(0), s.input(1), need_index(params, "MP"));
        break;
    }
    case MacroName::AndL: {
        need_premises(1, "AndL");
        only_item(s.at(s.input(0)), "AndL");
        ins(s, s.input(0), {0}, need_graph(params, "AndL"));
        break;
    }
    case MacroName::AndR: {
        need_premises(2, "AndR");
        and_right(s, s.input(0), s.input(1), need_index(params, "AndR"),
                  need_index2(params, "AndR"));
        break;
    }
    case MacroName::OrL1:
    case MacroName::OrL2: {
        const char* what = m == MacroName::OrL1 ? "OrL1" : "OrL2";
        need_premises(1, what);
        const Graph& other = need_graph(params, what);
        std::size_t cidx = need_index(params, what);
        ImpShape is = split_implication(s.at(s.input(0)), cidx, what);
        ElabRef r = dc1_wrap(s, s.input(0), {0}, Graph::single(is.consequent_cut));
        // The wrap is (( (H1) )); insert the other disjunct beside (H1).
        Item dd = Item::cut(Graph::cut(Graph::single(is.consequent_cut)));
        Graph root_area = only_item(s.at(r), what).area();
        std::size_t di = find_item(root_area, dd);
        ins(s, r, {0, di, 0}, Graph::single(Item::cut(other)));
        break;
    }
    case MacroName::OrIntro: {
        need_premises(2, "OrIntro");
        ImpShape a0 = split_implication(s.at(s.input(0)), need_index(params, "OrIntro"),
                                        "OrIntro");
        ImpShape b0 = split_implication(s.at(s.input(1)), need_index2(params, "OrIntro"),
                                        "OrIntro");
        ElabRef pa = contrapose(s, s.input(0), need_index(params, "OrIntro"));
        ElabRef pb = contrapose(s, s.input(1), need_index2(params, "OrIntro"));
        Item dda = Item::cut(Graph::cut(a0.antecedent));
        Item ddb = Item::cut(Graph::cut(b0.antecedent));
        std::size_t ca = find_item(only_item(s.at(pa), "OrIntro").area(), dda);
        std::size_t cb = find_item(only_item(s.at(pb), "OrIntro").area(), ddb);
        and_right(s, pa, pb, ca, cb);
        break;
    }
    case MacroName::NL: {
        need_premises(1, "NL");
        std::size_t cidx = need_index(params, "NL");
        ImpShape is = split_implication(s.at(s.input(0)), cidx, "NL");
        const Item& w = only_item(is.consequent, "NL: consequent");
        if (w.kind() != NodeKind::ContinuousCut || w.area().size() != 2 ||
            !w.area().items()[0].is_cut() || !w.area().items()[1].is_cut() ||
            w.area().items()[0].kind() != NodeKind::ContinuousCut ||
            w.area().items()[1].kind() != NodeKind::ContinuousCut)
            throw SchemaError("NL: consequent is not a disjunction graph");
        dc2_splice(s, s.input(0), {0}, is.consequent_cut);
        break;
    }
    case MacroName::NR: {
        need_premises(1, "NR");
        std::size_t cidx = need_index(params, "NR");
        const Graph& gpart = need_graph(params, "NR");
        ImpShape is = split_implication(s.at(s.input(0)), cidx, "NR");
        find_sub(is.antecedent, gpart); // validates
        ElabRef r = dc1_wrap(s, s.input(0), {0}, gpart);
        Item ddg = Item::cut(Graph::cut(gpart));
        dc1_wrap(s, r, {0},
                 Graph::juxtapose(Graph::single(ddg), Graph::single(is.consequent_cut)));
        break;
    }
    case MacroName::RG1: {
        need_premises(1, "RG1");
        std::size_t cidx = need_index(params, "RG1");
        const Graph& gpart = need_graph(params, "RG1");
        ImpShape is = split_implication(s.at(s.input(0)), cidx, "RG1");
        find_sub(is.antecedent, gpart);
        Graph p = s.at(s.input(0));
        ElabRef r = dc1_wrap(s, s.input(0), {}, p);
        r = ins(s, r, {0}, gpart);
        Graph inner_left = is.whole.area();
        for (const Item& x : gpart.items()) {
            Item host = Item::cut(Graph::single(Item::cut(inner_left)));
            r = deit_deep(s, r, {0}, x, host, {0});
            inner_left = minus_sub(inner_left, Graph::single(x));
        }
        break;
    }
    case MacroName::RG2: {
        need_premises(1, "RG2");
        std::size_t cidx = need_index(params, "RG2");
        std::size_t jidx = need_index2(params, "RG2");
        ImpShape outer = split_implication(s.at(s.input(0)), cidx, "RG2");
        const Item& imp = only_item(outer.consequent, "RG2: consequent");
        if (imp.kind() != NodeKind::ContinuousCut)
            throw SchemaError("RG2: consequent is not an implication graph");
        const Item& cj = cut_item_at(imp.area(), jidx, "RG2");
        std::vector<Item> hitems;
        for (std::size_t i = 0; i < imp.area().size(); ++i)
            if (i != jidx) hitems.push_back(imp.area().items()[i]);
        Graph h{std::move(hitems)};

        ElabRef jm = jux_mono(s, s.input(0), cidx, h);
        // Theorem build: ((H (J)) H (J)).
        ElabRef t = s.ax();
        t = s.apply(t, RuleInstance{RuleName::DC1, Address::root(), {}, {}, {}, {}});
        t = ins(s, t, {0}, h);
        t = ins(s, t, {0}, Graph::single(imp));
        Graph hleft = h;
        for (const Item& x : h.items()) {
            Item imp_k = Item::cut(Graph::juxtapose(hleft, Graph::single(cj)));
            t = deit_imm(s, t, {0}, x, imp_k);
            hleft = minus_sub(hleft, Graph::single(x));
        }
        Item imp_done = Item::cut(Graph::single(cj));
        t = it_imm(s, t, {0}, imp_done, Item::cut(Graph::sa()));
        {
            Graph root_area = only_item(s.at(t), "RG2").area();
            std::size_t qi = find_item(root_area, Item::cut(Graph::single(imp_done)));
            t = dc2_splice(s, t, {0, qi}, imp_done);
        }
        Graph hacc;
        for (const Item& x : h.items()) {
            Item imp_k = Item::cut(Graph::juxtapose(Graph::single(cj), hacc));
            t = it_imm(s, t, {0}, x, imp_k);
            hacc = Graph::juxtapose(hacc, Graph::single(x));
        }
        // TR: (G H ((imp H))) ∘ ((imp H) (J)) — locate consequent cuts.
        Graph middle = Graph::juxtapose(Graph::single(imp), h);
        std::size_t c1 = find_item(only_item(s.at(jm), "RG2").area(), Item::cut(middle));
        std::size_t c2 = find_item(only_item(s.at(t), "RG2").area(), cj);
        transitivity_impl(s, jm, t, c1, c2);
        break;
    }
    case MacroName::D1: {
        need_premises(1, "D1");
        std::size_t cidx = need_index(params, "D1");
        Graph root = s.at(s.input(0));
        if (cidx >= root.size()) throw SchemaError("D1: index out of range");
        Item c = root.items()[cidx];
        if (c.kind() != NodeKind::ContinuousCut || c.area().size() != 2 ||
            c.area().items()[0].kind() != NodeKind::ContinuousCut ||
            c.area().items()[1].kind() != NodeKind::ContinuousCut)
            throw SchemaError("D1: selected item is not a binary disjunction cut");
        Item u = c.area().items()[0];
        Item v = c.area().items()[1];
        Graph g = minus_sub(root, Graph::single(c));
        ElabRef r = s.input(0);
        Graph inacc;
        for (const Item& x : g.items()) {
            Item c_k = Item::cut(Graph::juxtapose(c.area(), inacc));
            r = it_imm(s, r, {}, x, c_k);
            inacc = Graph::juxtapose(inacc, Graph::single(x));
        }
        auto c_now = [&](const Item& uu, const Item& vv) {
            return Item::cut(Graph::juxtapose(
                Graph::juxtapose(Graph::single(uu), Graph::single(vv)), g));
        };
        Item u_now = u;
        Graph uacc;
        for (const Item& x : g.items()) {
            std::size_t ci = find_item(s.at(r), c_now(u_now, v));
            r = it_imm(s, r, {ci}, x, u_now);
            uacc = Graph::juxtapose(uacc, Graph::single(x));
            u_now = Item::cut(Graph::juxtapose(u.area(), uacc));
        }
        Item v_now = v;
        Graph vacc;
        for (const Item& x : g.items()) {
            std::size_t ci = find_item(s.at(r), c_now(u_now, v_now));
            r = it_imm(s, r, {ci}, x, v_now);
            vacc = Graph::juxtapose(vacc, Graph::single(x));
            v_now = Item::cut(Graph::juxtapose(v.area(), vacc));
        }
        // Remove the shuttle copies from the disjunction cut, then the
        // originals.
        Graph gleft = g;
        for (const Item& x : g.items()) {
            Item c_k = Item::cut(Graph::juxtapose(
                Graph::juxtapose(Graph::single(u_now), Graph::single(v_now)), gleft));
            r = deit_imm(s, r, {}, x, c_k);
            gleft = minus_sub(gleft, Graph::single(x));
        }
        if (!g.empty()) r = del_sub(s, r, {}, g);
        break;
    }
    case MacroName::D2: {
        need_premises(1, "D2");
        const Graph& g = need_graph(params, "D2");
        const Item& d = only_item(s.at(s.input(0)), "D2");
        if (d.kind() != NodeKind::ContinuousCut || d.area().size() != 2)
            throw SchemaError("D2: premise is not a binary disjunction cut");
        Item c1 = d.area().items()[0];
        Item c2 = d.area().items()[1];
        if (c1.kind() != NodeKind::ContinuousCut || c2.kind() != NodeKind::ContinuousCut)
            throw SchemaError("D2: disjuncts are not continuous cuts");
        Graph h = minus_sub(c1.area(), g);
        Graph j = minus_sub(c2.area(), g);
        ElabRef r = it_same(s, s.input(0), {}, d);
        // First copy: strip H and J, leaving ((G) (G)); second: strip both
        // G parts, leaving ((H) (J)).
        auto locate = [&](const Item& it) { return find_item(s.at(r), it); };
        Item d1a = Item::cut(Graph::juxtapose(Graph::single(Item::cut(g)), Graph::single(c2)));
        if (!h.empty()) {
            std::size_t di = locate(d);
            Graph darea = subgraph_at(s.at(r), Address::area({di}));
            std::size_t ci = find_item(darea, c1);
            r = del_sub(s, r, {di, ci}, h);
        }
        if (!j.empty()) {
            std::size_t di = locate(d1a);
            Graph darea = subgraph_at(s.at(r), Address::area({di}));
            std::size_t ci = find_item(darea, c2);
            r = del_sub(s, r, {di, ci}, j);
        }
        Item dgg = Item::cut(Graph::juxtapose(Graph::single(Item::cut(g)),
                                              Graph::single(Item::cut(g))));
        Item dhj = Item::cut(Graph::juxtapose(Graph::single(Item::cut(h)),
                                              Graph::single(Item::cut(j))));
        if (!g.empty()) {
            std::size_t di = locate(d);
            Graph darea = subgraph_at(s.at(r), Address::area({di}));
            std::size_t ci = find_item(darea, c1);
            r = del_sub(s, r, {di, ci}, g);
            Item dmid = Item::cut(Graph::juxtapose(Graph::single(Item::cut(h)),
                                                   Graph::single(c2)));
            di = locate(dmid);
            darea = subgraph_at(s.at(r), Address::area({di}));
            ci = find_item(darea, c2);
            r = del_sub(s, r, {di, ci}, g);
        }
        // Collapse ((G) (G)) to G at the root.
        {
            std::size_t di = locate(dgg);
            Graph darea = subgraph_at(s.at(r), Address::area({di}));
            (void)darea;
            r = s.apply(r, RuleInstance{RuleName::DEIT, Address::area({di}),
                                        {0}, Address::area({di}), {}, {}});
        }
        Item dg1 = Item::cut(Graph::single(Item::cut(g)));
        r = dc2_splice(s, r, {}, dg1);
        (void)dhj;
        break;
    }
    case MacroName::UMN: {
        need_premises(1, "UMN");
        up_mono_necessity(s, s.input(0), need_index(params, "UMN"));
        break;
    }
    case MacroName::UMP: {
        need_premises(1, "UMP");
        std::size_t cidx = need_index(params, "UMP");
        ImpShape is = split_implication(s.at(s.input(0)), cidx, "UMP");
        ElabRef r = contrapose(s, s.input(0), cidx);
        std::size_t ci =
            find_item(only_item(s.at(r), "UMP").area(), Item::cut(Graph::cut(is.antecedent)));
        bcut_antitone(s, r, ci);
        break;
    }
    case MacroName::UMDB: {
        need_premises(1, "UMDB");
        std::size_t cidx = need_index(params, "UMDB");
        ImpShape is = split_implication(s.at(s.input(0)), cidx, "UMDB");
        ElabRef r = bcut_antitone(s, s.input(0), cidx);
        std::size_t ci = find_item(only_item(s.at(r), "UMDB").area(),
                                   Item::cut(Graph::single(Item::bcut(is.antecedent))));
        bcut_antitone(s, r, ci);
        break;
    }
    case MacroName::RE: {
        need_premises(1, "RE");
        const GraphContext& ctx = need_context(params, "RE");
        const Graph& x = need_graph(params, "RE");
        const Graph& y = need_graph2(params, "RE");
        Graph expected = Graph::iff(x, y);
        if (s.at(s.input(0)) != expected)
            throw SchemaError("RE: premise is not the expected equivalence");
        if (!ctx.slot.into_area) throw SchemaError("RE: context slot must be an area address");
        replace_equiv(s, s.input(0), ctx.skeleton, ctx.slot.path, 0, x, y);
        break;
    }
    case MacroName::Nec: {
        need_premises(1, "Nec");
        ElabRef sa2 = s.ax();
        sa2 = s.apply(sa2, RuleInstance{RuleName::DC1, Address::root(), {}, {}, {}, {}});
        ElabRef p = dc1_wrap(s, s.input(0), {}, s.at(s.input(0)));
        ElabRef u = up_mono_necessity(s, p, 0);
        Item ncut_g = Item::cut(Graph::single(Item::bcut(s.at(s.input(0)))));
        std::size_t ci =
            find_item(only_item(s.at(u), "Nec").area(), Item::cut(Graph::single(ncut_g)));
        modus_ponens(s, sa2, u, ci);
        break;
    }
    case MacroName::CutE: {
        need_premises(1, "CutE");
        const GraphContext& ctx = need_context(params, "CutE");
        const Graph& g = need_graph(params, "CutE");
        Graph mg = Graph::implies(g, g);
        if (ctx.fill(mg) != s.at(s.input(0)))
            throw SchemaError("CutE: premise does not match the context");
        // ⊢ (m ()) and ⊢ ((m)), giving m ≡ SA.
        ElabRef ea = lemma_g_imp_sa(s, mg);
        ElabRef eb = lemma_g_imp_g(s, g);
        eb = dc1_wrap(s, eb, {}, s.at(eb));
        ElabRef e = s.jux(ea, eb);
        ReResult rr =
            replace_equiv(s, e, ctx.skeleton, ctx.slot.path, 0, mg, Graph::sa());
        Item impA = Item::cut(Graph::juxtapose(rr.xf, Graph::cut(rr.yf)));
        Item impB = Item::cut(Graph::juxtapose(rr.yf, Graph::cut(rr.xf)));
        ElabRef ex = extract_imp(s, rr.ref, impB);
        std::size_t ci = find_item(only_item(s.at(ex), "CutE").area(), Item::cut(rr.yf));
        modus_ponens(s, s.input(0), ex, ci);
        break;
    }
    case MacroName::TMinusCase1:
    case MacroName::TMinusCase2: {
        const char* what = m == MacroName::TMinusCase1 ? "T-minus-case1" : "T-minus-case2";
        need_premises(1, what);
        std::size_t ridx = need_index(params, what);
        const Graph& g = need_graph(params, what);
        Graph root = s.at(s.input(0));
        if (ridx >= root.size()) throw SchemaError(std::string(what) + ": index out of range");
        Item redex = root.items()[ridx];
        bool case1 = m == MacroName::TMinusCase1;
        if (case1 && redex.kind() != NodeKind::BrokenCut)
            throw SchemaError("T-minus-case1: redex is not a broken cut");
        if (!case1 && redex.kind() != NodeKind::ContinuousCut)
            throw SchemaError("T-minus-case2: redex is not a continuous cut");
        Item bg = Item::bcut(g);
        Graph h = minus_sub(redex.area(), Graph::single(bg));
        Graph jrest = minus_sub(root, Graph::single(redex));

        ElabRef t = cut_implies_bcut(s, g); // ((G) ({G}))
        std::size_t ci =
            find_item(only_item(s.at(t), what).area(), Item::cut(Graph::single(bg)));
        ElabRef jm = jux_mono(s, t, ci, h);
        Item q1 = Item::cut(Graph::juxtapose(h, Graph::single(bg)));
        ElabRef step;
        if (case1) {
            // DMN turns (H (G) ⊃ H {G}) into ({H {G}} ⊃ {H (G)}).
            Graph area = only_item(s.at(jm), what).area();
            std::size_t qi = find_item(area, q1);
            std::vector<std::size_t> pidx;
            for (std::size_t i = 0; i < area.size(); ++i)
                if (i != qi) pidx.push_back(i);
            step = s.apply(jm, RuleInstance{RuleName::DMN, Address::root(), {0}, {}, {},
                                            std::make_pair(pidx,
                                                           std::vector<std::size_t>{qi})});
        } else {
            std::size_t qi = find_item(only_item(s.at(jm), what).area(), q1);
            step = contrapose(s, jm, qi);
        }
        // step: (redex-as-antecedent ⊃ repaired), juxtapose with the rest.
        Graph repaired_content = Graph::juxtapose(h, Graph::cut(g));
        Item repaired = case1 ? Item::bcut(repaired_content) : Item::cut(repaired_content);
        ElabRef jm2 = step;
        if (!jrest.empty()) {
            std::size_t ci2 = find_item(only_item(s.at(step), what).area(),
                                        Item::cut(Graph::single(repaired)));
            jm2 = jux_mono(s, step, ci2, jrest);
        }
        std::size_t ci3 =
            find_item(only_item(s.at(jm2), what).area(),
                      Item::cut(Graph::juxtapose(Graph::single(repaired), jrest)));
        modus_ponens(s, s.input(0), jm2, ci3);
        break;
    }
    }
    return s.take();
}

} // namespace pmk
