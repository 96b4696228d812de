#include "pmk/gen.hpp"
#include "pmk/graph.hpp"

#include <doctest.h>

using namespace pmk;

TEST_CASE("parse orders children canonically") {
    CHECK(parse("p (q)").print() == "(q) p");
    CHECK(parse("q p").print() == "p q");
    CHECK(parse("").print() == "");
    CHECK(parse("").is_sa());
}

TEST_CASE("normality rewrites the empty broken cut") {
    CHECK(parse("{}").print() == "()");
    CHECK(parse("({ })").print() == "(())");
    CHECK(parse("(p {})").print() == "(() p)");
    CHECK(parse("{p}").print() == "{p}");
}

TEST_CASE("multisets keep duplicates") {
    CHECK(parse("p p").print() == "p p");
    CHECK(parse("p p").size() == 2);
}

TEST_CASE("syntax errors carry byte offsets") {
    CHECK_THROWS_AS(parse("(p"), SyntaxError);
    CHECK_THROWS_AS(parse("p)"), SyntaxError);
    CHECK_THROWS_AS(parse("P"), SyntaxError);
    try {
        parse("p )q");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 2);
    }
}

TEST_CASE("round trip is the identity on canonical graphs") {
    std::mt19937_64 rng(0xF00D);
    GenConfig cfg;
    for (int i = 0; i < 500; ++i) {
        Graph g = random_graph(rng, cfg);
        CHECK(parse(g.print()) == g);
        CHECK(canonicalize(g) == g);
    }
}

TEST_CASE("subgraph and replace agree") {
    Graph g = parse("(p (q))"); // canonical: ((q) p)
    CHECK(g.print() == "((q) p)");
    CHECK(subgraph_at(g, Address::item({0, 0})).print() == "(q)");
    CHECK(subgraph_at(g, Address::root()) == g);
    CHECK(replace_at(parse("(p)"), Address::item({0, 0}), parse("q q")).print() == "(q q)");

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Graph h = random_graph(rng, {});
        if (h.empty()) continue;
        Address a = Address::item({0});
        CHECK(replace_at(h, a, subgraph_at(h, a)) == h);
    }
}

TEST_CASE("polarity counts enclosing cuts of either kind") {
    Graph g = parse("(p (q))");
    // q sits at ((q) p) → [0,0,0].
    CHECK(polarity(g, Address::item({0, 0, 0})) == Polarity::Positive);
    CHECK(polarity(parse("{p}"), Address::item({0, 0})) == Polarity::Negative);
    CHECK(polarity(Graph::sa(), Address::root()) == Polarity::Positive);
    CHECK(polarity(parse("{(p)}"), Address::item({0, 0, 0})) == Polarity::Positive);
}

TEST_CASE("cut classification picks the most specific kind") {
    CHECK(classify_cut(parse("({p})"), Address::item({0})) == CutKind::Necessity);
    CHECK(classify_cut(parse("{(p)}"), Address::item({0})) == CutKind::Possibility);
    CHECK(classify_cut(parse("{{p}}"), Address::item({0})) == CutKind::DoubleBroken);
    CHECK(classify_cut(parse("((p))"), Address::item({0})) == CutKind::DoubleContinuous);
    CHECK(classify_cut(parse("(p)"), Address::item({0})) == CutKind::Continuous);
    CHECK(classify_cut(parse("{p q}"), Address::item({0})) == CutKind::Broken);
    CHECK_THROWS_AS(classify_cut(parse("p"), Address::item({0})), AddressError);
}

TEST_CASE("compound kinds have singleton outer areas") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Graph g = random_graph(rng, {});
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (!g.items()[k].is_cut()) continue;
            CutKind kind = classify_cut(g, Address::item({k}));
            if (kind == CutKind::DoubleContinuous || kind == CutKind::DoubleBroken ||
                kind == CutKind::Necessity || kind == CutKind::Possibility)
                CHECK(g.items()[k].area().size() == 1);
        }
    }
}

TEST_CASE("broken-cut-free side condition") {
    // Context ((q)): excising the inner area leaves (()).
    Graph g1 = parse("p ((q))");
    CHECK(is_broken_cut_free(g1, Address::item({0}), Address::area({0, 0})));
    // Context ({q}): the broken boundary remains.
    Graph g2 = parse("p ({q})");
    CHECK_FALSE(is_broken_cut_free(g2, Address::item({0}), Address::area({0, 0})));
    // Slot equal to the item's own area: everything excised.
    Graph g3 = parse("q {p}");
    CHECK(is_broken_cut_free(g3, Address::item({1}), Address::area({})));
}

TEST_CASE("polarity is stable under replacement at disjoint addresses") {
    Graph g = parse("(p) {q r}");
    Polarity before = polarity(g, Address::area({0}));
    Graph h = replace_at(g, Address::area({1}), parse("s"));
    CHECK(polarity(h, Address::area({0})) == before);
}

TEST_CASE("shorthand constructors expand to cuts") {
    Graph p = Graph::atom("p"), q = Graph::atom("q");
    CHECK(Graph::implies(p, q) == parse("(p (q))"));
    CHECK(Graph::gor(p, q).print() == "((p) (q))");
    CHECK(Graph::iff(p, q) == parse("(p (q)) (q (p))"));
    CHECK(Graph::ncut(p).print() == "({p})");
    CHECK(Graph::pcut(p).print() == "{(p)}");
    CHECK(Graph::ncut(Graph::sa()).print() == "(())");
}
