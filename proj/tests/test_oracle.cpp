#include "pmk/bridge.hpp"
#include "pmk/gen.hpp"
#include "pmk/oracle.hpp"

#include <doctest.h>

using namespace pmk;

namespace {
KripkeFrame frame2(WorldSet r0, WorldSet r1) {
    KripkeFrame f;
    f.n = 2;
    f.rows = {r0, r1};
    return f;
}
} // namespace

TEST_CASE("frame generation counts") {
    CHECK(generate_frames(2, FrameClass{}).size() == 16);
    FrameClass refl;
    refl.reflexive = true;
    CHECK(generate_frames(2, refl).size() == 4);
    FrameClass sym;
    sym.symmetric = true;
    CHECK(generate_frames(2, sym).size() == 8);
}

TEST_CASE("normality and additivity on random frames") {
    std::mt19937_64 rng(5);
    Formula boxtop = Formula::box(Formula::top());
    Formula add1 = parse_formula("[](p & q)");
    Formula add2 = parse_formula("([]p & []q)");
    for (int i = 0; i < 500; ++i) {
        std::uniform_int_distribution<int> nw(1, 4);
        KripkeFrame f = random_frame(nw(rng), FrameClass{}, rng);
        CHECK(valid(boxtop, f));
        Valuation v;
        v.sets = {{"p", static_cast<WorldSet>(rng()) & f.all()},
                  {"q", static_cast<WorldSet>(rng()) & f.all()}};
        CHECK(eval(add1, f, v) == eval(add2, f, v));
    }
}

TEST_CASE("hand evaluation") {
    // W={0,1}, R={(0,1)}, V(p)={1}: ◇p holds exactly at 0.
    KripkeFrame f = frame2(0b10, 0);
    Valuation v;
    v.sets = {{"p", 0b10}};
    CHECK(eval(parse_formula("<>p"), f, v) == 0b01);
}

TEST_CASE("graph validity goes through pi") {
    // p→□p fails on W={0,1}, R={(0,1)}, V(p)={0}.
    KripkeFrame f = frame2(0b10, 0);
    CHECK_FALSE(valid(parse("(p ({p}))"), f));
    CHECK(valid(Graph::sa(), f));
    CHECK(valid(sigma(parse_formula("([](p -> q) -> ([]p -> []q))")), f));
}

TEST_CASE("countermodels verify and validities hold up to bounds") {
    auto cm = countermodel(parse("(p ({p}))"), FrameClass{}, 2);
    REQUIRE(cm.has_value());
    CHECK_FALSE(valid(parse("(p ({p})"
                            ")"),
                      cm->frame));
    FrameClass refl;
    refl.reflexive = true;
    CHECK_FALSE(countermodel(parse_formula("([]p -> p)"), refl, 3).has_value());
    CHECK(countermodel(parse_formula("([]p -> p)"), FrameClass{}, 2).has_value());
}

TEST_CASE("K axiom is valid on all two-world frames") {
    Formula k = parse_formula("([](p -> q) -> ([]p -> []q))");
    for (const KripkeFrame& f : generate_frames(2, FrameClass{})) CHECK(valid(k, f));
}

TEST_CASE("class predicates agree with brute force on small frames") {
    for (int n = 2; n <= 3; ++n) {
        auto all = generate_frames(n, FrameClass{});
        std::size_t serial = 0, refl = 0, trans = 0, sym = 0, eucl = 0;
        for (const auto& f : all) {
            bool s = true, r = true, t = true, y = true, e = true;
            for (int u = 0; u < n; ++u) {
                if (!f.rows[u]) s = false;
                if (!(f.rows[u] >> u & 1)) r = false;
                for (int v = 0; v < n; ++v) {
                    if (!(f.rows[u] >> v & 1)) continue;
                    if ((f.rows[u] >> v & 1) != (f.rows[v] >> u & 1) &&
                        !(f.rows[v] >> u & 1))
                        y = false;
                    for (int w = 0; w < n; ++w) {
                        bool vw = f.rows[v] >> w & 1;
                        bool uw = f.rows[u] >> w & 1;
                        if (vw && !uw) t = false;
                        if (uw && !(f.rows[v] >> w & 1)) e = false;
                    }
                }
            }
            serial += s, refl += r, trans += t, sym += y, eucl += e;
        }
        FrameClass c;
        c.serial = true;
        CHECK(generate_frames(n, c).size() == serial);
        c = {};
        c.reflexive = true;
        CHECK(generate_frames(n, c).size() == refl);
        c = {};
        c.transitive = true;
        CHECK(generate_frames(n, c).size() == trans);
        c = {};
        c.symmetric = true;
        CHECK(generate_frames(n, c).size() == sym);
        c = {};
        c.euclidean = true;
        CHECK(generate_frames(n, c).size() == eucl);
    }
}

TEST_CASE("valuation sweep cap raises") {
    KripkeFrame f = frame2(1, 1);
    OracleLimits lim;
    lim.max_atoms = 1;
    CHECK_THROWS_AS(valid(parse_formula("(p & (q & r))"), f, lim), OracleError);
}

TEST_CASE("weakening at a positive address never shrinks validity per frame") {
    std::mt19937_64 rng(0xCE);
    GenConfig cfg;
    cfg.max_depth = 3;
    int tried = 0;
    for (int i = 0; i < 300 && tried < 60; ++i) {
        Graph g = random_graph(rng, cfg);
        auto inst = random_instance(g, SystemId::K, rng);
        if (!inst || inst->rule != RuleName::DEL) continue;
        ++tried;
        Graph h = apply_rule(g, *inst);
        KripkeFrame f = random_frame(static_cast<int>(1 + (rng() % 3)), FrameClass{}, rng);
        // Pointwise: every world satisfying g satisfies the weakened h.
        std::vector<std::string> atoms = pi(g).atoms();
        if (atoms.size() > 3) continue;
        Valuation v;
        for (const auto& a : atoms)
            v.sets.emplace_back(a, static_cast<WorldSet>(rng()) & f.all());
        CHECK((eval(pi(g), f, v) & ~eval(pi(h), f, v)) == 0);
    }
    CHECK(tried > 0);
}
