#include "pmk/gen.hpp"
#include "pmk/rules.hpp"

#include <doctest.h>

using namespace pmk;

namespace {

RuleInstance at_root(RuleName r, std::vector<std::size_t> idx) {
    return RuleInstance{r, Address::root(), std::move(idx), {}, {}, {}};
}

} // namespace

TEST_CASE("K1 splits a necessity cut") {
    RuleInstance r = at_root(RuleName::K1, {0});
    r.partition = std::make_pair(std::vector<std::size_t>{0}, std::vector<std::size_t>{1});
    Graph g = parse("({p q})");
    CHECK(apply_rule(g, r).print() == "({p}) ({q})");
}

TEST_CASE("K2 merges two necessity cuts") {
    RuleInstance r = at_root(RuleName::K2, {0, 1});
    CHECK(apply_rule(parse("({p}) ({q})"), r).print() == "({p q})");
    // Inverse pair.
    RuleInstance k1 = at_root(RuleName::K1, {0});
    k1.partition = std::make_pair(std::vector<std::size_t>{0}, std::vector<std::size_t>{1});
    CHECK(apply_rule(apply_rule(parse("({p q})"), k1), r) == parse("({p q})"));
}

TEST_CASE("DMN rewrites an implication downward") {
    RuleInstance r = at_root(RuleName::DMN, {0});
    r.partition = std::make_pair(std::vector<std::size_t>{1}, std::vector<std::size_t>{0});
    // canonical "(p (q))" = cut{ (q), p }: designated (q) at index 0.
    CHECK(apply_rule(parse("(p (q))"), r).print() == "(({p}) {q})");
    // Deep DMN is rejected.
    RuleInstance deep = r;
    deep.area = Address::area({0});
    CHECK_THROWS_AS(apply_rule(parse("((p (q)))"), deep), RuleError);
}

TEST_CASE("DEL requires positive polarity") {
    CHECK(apply_rule(parse("p q"), at_root(RuleName::DEL, {1})).print() == "p");
    RuleInstance del{RuleName::DEL, Address::area({0}), {0}, {}, {}, {}};
    try {
        apply_rule(parse("(q)"), del);
        CHECK(false);
    } catch (const RuleError& e) {
        CHECK(e.kind == RuleErrorKind::PolarityViolation);
    }
}

TEST_CASE("INS requires negative polarity") {
    RuleInstance ins{RuleName::INS, Address::area({0}), {}, {}, parse("r"), {}};
    CHECK(apply_rule(parse("(q)"), ins).print() == "(q r)");
    RuleInstance bad{RuleName::INS, Address::root(), {}, {}, parse("r"), {}};
    CHECK_THROWS_AS(apply_rule(parse("p"), bad), RuleError);
}

TEST_CASE("double cut wraps and splices") {
    Graph g = parse("p q");
    Graph w = apply_rule(g, at_root(RuleName::DC1, {0, 1}));
    CHECK(w.print() == "((p q))");
    CHECK(apply_rule(w, at_root(RuleName::DC2, {0})) == g);
    // Empty subset wraps SA.
    CHECK(apply_rule(Graph::sa(), at_root(RuleName::DC1, {})).print() == "(())");
}

TEST_CASE("iteration respects the broken-cut-free condition") {
    // p may be iterated into a continuous context.
    Graph g = parse("p (q)");
    RuleInstance it{RuleName::IT, Address::root(), {1}, Address::area({0}), {}, {}};
    CHECK(apply_rule(g, it).print() == "(p q) p");
    // ...but not into a broken cut ("p {q}" sorts p first).
    Graph h = parse("p {q}");
    RuleInstance bad{RuleName::IT, Address::root(), {0}, Address::area({1}), {}, {}};
    try {
        apply_rule(h, bad);
        CHECK(false);
    } catch (const RuleError& e) {
        CHECK(e.kind == RuleErrorKind::BrokenCutFreeViolation);
    }
}

TEST_CASE("same-area iteration duplicates and deiterates") {
    Graph g = parse("p");
    RuleInstance dup{RuleName::IT, Address::root(), {0}, Address::root(), {}, {}};
    Graph two = apply_rule(g, dup);
    CHECK(two.print() == "p p");
    RuleInstance dedup{RuleName::DEIT, Address::root(), {0}, Address::root(), {}, {}};
    CHECK(apply_rule(two, dedup) == g);
}

TEST_CASE("extension rules transform cuts by kind and polarity") {
    CHECK(apply_rule(parse("(p)"), at_root(RuleName::Tpos, {0})).print() == "{p}");
    CHECK(apply_rule(parse("({p})"), at_root(RuleName::Dpos, {0})).print() == "{(p)}");
    CHECK(apply_rule(parse("({p})"), at_root(RuleName::FourPos, {0})).print() == "({({p})})");
    CHECK(apply_rule(parse("{{p}}"), at_root(RuleName::Bpos, {0})).print() == "p");
    CHECK(apply_rule(parse("{{p}}"), at_root(RuleName::FivePos, {0})).print() == "({p})");
    // Negative forms fire one cut deep.
    RuleInstance tneg{RuleName::Tneg, Address::area({0}), {0}, {}, {}, {}};
    CHECK(apply_rule(parse("({p})"), tneg).print() == "((p))");
    RuleInstance dneg{RuleName::Dneg, Address::area({0}), {0}, {}, {}, {}};
    CHECK(apply_rule(parse("({(p)})"), dneg).print() == "(({p}))");
    // Normality: "(())" counts as the necessity cut of SA.
    CHECK(apply_rule(parse("(())"), at_root(RuleName::Dpos, {0})).print() == "{()}");
    // Polarity violations are named errors.
    try {
        apply_rule(parse("(p)"), at_root(RuleName::Tneg, {0}));
        CHECK(false);
    } catch (const RuleError& e) {
        CHECK(e.kind == RuleErrorKind::PolarityViolation);
    }
}

TEST_CASE("B- wraps arbitrary sub-multisets") {
    RuleInstance bneg{RuleName::Bneg, Address::area({0}), {0, 1}, {}, {}, {}};
    CHECK(apply_rule(parse("(p q)"), bneg).print() == "({{p q}})");
    RuleInstance empty{RuleName::Bneg, Address::area({0}), {}, {}, {}, {}};
    CHECK(apply_rule(parse("(p)"), empty).print() == "(p {()})");
}

TEST_CASE("enumerate_instances finds expected instances") {
    std::vector<Graph> pool;
    auto insts = enumerate_instances(parse("(())"), SystemId::K, pool);
    bool has_dc2 = false;
    for (const auto& r : insts)
        if (r.rule == RuleName::DC2 && r.area.path.empty()) has_dc2 = true;
    CHECK(has_dc2);

    // K1 on ({p q}) has all four ordered splits.
    int k1 = 0;
    for (const auto& r : enumerate_instances(parse("({p q})"), SystemId::K, pool))
        if (r.rule == RuleName::K1) ++k1;
    CHECK(k1 == 4);

    // No T+ instance without a cut.
    for (const auto& r : enumerate_instances(parse("p"), SystemId::KT, pool))
        CHECK(r.rule != RuleName::Tpos);
}

TEST_CASE("enumerated instances all apply") {
    std::mt19937_64 rng(42);
    GenConfig cfg;
    cfg.max_depth = 3;
    cfg.max_width = 2;
    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(rng, cfg);
        std::vector<Graph> pool{Graph::atom("p")};
        for (const auto& inst : enumerate_instances(g, SystemId::S5, pool)) {
            Graph h = apply_rule(g, inst); // must not throw
            CHECK(parse(h.print()) == h);
        }
    }
}

TEST_CASE("inverse rule pairs restore the original graph") {
    std::mt19937_64 rng(43);
    GenConfig cfg;
    cfg.max_depth = 3;
    for (int i = 0; i < 60; ++i) {
        Graph g = random_graph(rng, cfg);
        std::vector<Graph> pool;
        for (const auto& inst : enumerate_instances(g, SystemId::K, pool)) {
            if (inst.rule != RuleName::DC1 || !inst.area.path.empty()) continue;
            Graph h = apply_rule(g, inst);
            // Find the inverse DC2 on the new double cut.
            std::vector<Item> m;
            for (std::size_t k : inst.indices) m.push_back(g.items()[k]);
            Item dd = Item::cut(Graph::cut(Graph{m}));
            for (std::size_t k = 0; k < h.size(); ++k) {
                if (h.items()[k].print() != dd.print()) continue;
                RuleInstance inv{RuleName::DC2, Address::root(), {k}, {}, {}, {}};
                CHECK(apply_rule(h, inv) == g);
                break;
            }
        }
    }
}

TEST_CASE("5+ then 5- round trips") {
    Graph g = parse("{{p}}");
    Graph h = apply_rule(g, at_root(RuleName::FivePos, {0}));
    CHECK(h.print() == "({p})");
    RuleInstance fneg{RuleName::FiveNeg, Address::area({0}), {0}, {}, {}, {}};
    Graph w = parse("(({p}))");
    CHECK(apply_rule(w, fneg).print() == "({{p}})");
}
