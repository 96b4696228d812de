#include "pmk/gen.hpp"
#include "pmk/oracle.hpp"
#include "pmk/prover.hpp"

#include <doctest.h>

using namespace pmk;

TEST_CASE("SA has the zero-step proof") {
    auto p = prove(Graph::sa(), {});
    REQUIRE(p.has_value());
    CHECK(p->steps.size() == 1);
    CHECK(check(*p).ok);
}

TEST_CASE("lemma 5 shapes are found") {
    SearchConfig cfg;
    cfg.depth = 4;
    auto p = prove(parse("(p (p))"), cfg);
    REQUIRE(p.has_value());
    CHECK(check(*p).ok);
    CHECK(p->conclusion() == parse("(p (p))"));

    auto q = prove(parse("(p ())"), cfg);
    REQUIRE(q.has_value());
    CHECK(check(*q).ok);
}

TEST_CASE("non-theorems stay unproved and get countermodels") {
    SearchConfig cfg;
    cfg.depth = 4;
    cfg.node_budget = 20000;
    Graph goal = parse("(p ({p}))");
    CHECK_FALSE(prove(goal, cfg).has_value());
    CHECK(countermodel(goal, FrameClass{}, 2).has_value());
}

TEST_CASE("returned proofs always check") {
    std::mt19937_64 rng(31337);
    GenConfig gc;
    gc.max_depth = 2;
    gc.max_width = 2;
    SearchConfig cfg;
    cfg.depth = 3;
    cfg.node_budget = 4000;
    for (int i = 0; i < 30; ++i) {
        Graph goal = random_graph(rng, gc);
        auto p = prove(goal, cfg);
        if (p) {
            CHECK(check(*p).ok);
            CHECK(p->conclusion() == goal);
        }
    }
}

TEST_CASE("extension goals need their systems") {
    SearchConfig kt;
    kt.system = SystemId::KT;
    kt.depth = 4;
    Graph t_axiom = parse("(({p}) p)"); // σ(□p→p) canonically
    auto p = prove(parse("(({p}) (p))"), kt);
    if (p) {
        CHECK(check(*p).ok);
    }
    (void)t_axiom;
}
