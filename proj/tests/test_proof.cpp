#include "pmk/gen.hpp"
#include "pmk/json_io.hpp"
#include "pmk/proof.hpp"

#include <doctest.h>

using namespace pmk;

namespace {

std::size_t locate(const Graph& area, const Item& it) {
    for (std::size_t i = 0; i < area.size(); ++i)
        if (area.items()[i].print() == it.print()) return i;
    REQUIRE(false);
    return 0;
}

// Replays elaborated steps the way check() does and returns the result.
Graph replay(MacroName m, const std::vector<Graph>& premises, const MacroParams& params,
             RuleSet rules = rules_of(SystemId::S5)) {
    std::vector<ElabStep> body = elaborate(m, premises, params);
    std::vector<Graph> local;
    for (const ElabStep& es : body) {
        auto resolve = [&](const ElabRef& r) -> const Graph& {
            return r.is_input ? premises[r.index] : local[r.index];
        };
        Graph g;
        switch (es.kind) {
        case StepKind::Axiom: g = Graph::sa(); break;
        case StepKind::Kernel:
            REQUIRE(has_rule(rules, es.rule.rule));
            g = apply_rule(resolve(es.premise), es.rule);
            break;
        case StepKind::Jux:
            g = Graph::juxtapose(resolve(es.premise), resolve(es.premise2));
            break;
        default: REQUIRE(false);
        }
        REQUIRE(g == es.result);
        local.push_back(std::move(g));
    }
    if (body.empty()) {
        REQUIRE(premises.size() == 1);
        return premises[0];
    }
    return local.back();
}

Graph rg(std::mt19937_64& rng, int depth = 2, int width = 2) {
    GenConfig cfg;
    cfg.max_depth = depth;
    cfg.max_width = width;
    return random_graph(rng, cfg);
}

} // namespace

TEST_CASE("lemma 5 scripts check") {
    ProofBuilder b(SystemId::K);
    std::size_t ax = b.axiom();
    std::size_t dc = b.kernel(ax, RuleInstance{RuleName::DC1, Address::root(), {}, {}, {}, {}});
    CHECK(b.at(dc).print() == "(())");
    std::size_t in =
        b.kernel(dc, RuleInstance{RuleName::INS, Address::area({0}), {}, {}, parse("p"), {}});
    CHECK(b.at(in).print() == "(() p)");
    std::size_t it = b.kernel(
        in, RuleInstance{RuleName::IT, Address::area({0}), {1}, Address::area({0, 0}), {}, {}});
    CHECK(b.at(it) == parse("(p (p))"));
    CHECK(check(b.proof()).ok);
}

TEST_CASE("check rejects ill-formed steps") {
    ProofBuilder b(SystemId::K);
    std::size_t ax = b.axiom();
    b.kernel(ax, RuleInstance{RuleName::DC1, Address::root(), {}, {}, {}, {}});
    Proof p = b.take();

    SUBCASE("tampered result") {
        p.steps[1].result = parse("p");
        auto r = check(p);
        CHECK_FALSE(r.ok);
        CHECK(r.step == 1);
    }
    SUBCASE("forward premise reference") {
        p.steps[1].premises = {1};
        CHECK_FALSE(check(p).ok);
    }
    SUBCASE("polarity violation is reported with its name") {
        ProofBuilder b2(SystemId::K);
        std::size_t a2 = b2.axiom();
        std::size_t d2 =
            b2.kernel(a2, RuleInstance{RuleName::DC1, Address::root(), {}, {}, {}, {}});
        std::size_t i2 = b2.kernel(
            d2, RuleInstance{RuleName::INS, Address::area({0}), {}, {}, parse("q"), {}});
        (void)i2;
        Proof p2 = b2.take();
        // Turn the INS into a DEL at the same (negative) area.
        p2.steps[2].rule = RuleInstance{RuleName::DEL, Address::area({0}), {0}, {}, {}, {}};
        p2.steps[2].result = parse("(())");
        auto r = check(p2);
        CHECK_FALSE(r.ok);
        CHECK(r.reason.find("polarity") != std::string::npos);
    }
    SUBCASE("extension rules are system-gated") {
        ProofBuilder b3(SystemId::KT);
        std::size_t a3 = b3.axiom();
        std::size_t d3 =
            b3.kernel(a3, RuleInstance{RuleName::DC1, Address::root(), {}, {}, {}, {}});
        std::size_t t3 =
            b3.kernel(d3, RuleInstance{RuleName::Tpos, Address::root(), {0}, {}, {}, {}});
        (void)t3;
        Proof p3 = b3.take();
        CHECK(check(p3).ok);
        p3.system = SystemId::K;
        auto r = check(p3);
        CHECK_FALSE(r.ok);
        CHECK(r.reason.find("not in system") != std::string::npos);
    }
    SUBCASE("kernel JUX is rejected") {
        ProofBuilder b4(SystemId::K);
        std::size_t a4 = b4.axiom();
        Proof p4 = b4.take();
        ProofStep st;
        st.kind = StepKind::Kernel;
        st.rule = RuleInstance{RuleName::JUX, Address::root(), {}, {}, parse("p"), {}};
        st.premises = {a4};
        st.result = parse("p");
        p4.steps.push_back(st);
        CHECK_FALSE(check(p4).ok);
    }
}

TEST_CASE("system monotonicity") {
    for (auto& [goal, proof] : provable_corpus(SystemId::K)) {
        Proof p = proof;
        p.system = SystemId::S5;
        CHECK(check(p).ok);
    }
}

TEST_CASE("proof files round trip bit-exactly") {
    for (auto& [goal, proof] : provable_corpus(SystemId::KT)) {
        std::string text = proof_to_json(proof);
        Proof back = proof_from_json(text);
        CHECK(proof_to_json(back) == text);
        CHECK(check(back).ok);
        CHECK(back.conclusion() == goal);
    }
}

TEST_CASE("corpus checks in every system") {
    for (SystemId s : kAllSystems) {
        for (auto& [goal, proof] : provable_corpus(s)) {
            auto r = check(proof);
            INFO(system_name(s), ": ", goal.print(), " — ", r.reason);
            CHECK(r.ok);
            CHECK(proof.conclusion() == goal);
        }
    }
}

TEST_CASE("macro elaborations check on random instantiations") {
    std::mt19937_64 rng(2024);
    auto imp = [](const Graph& a, const Graph& b) { return Graph::implies(a, b); };

    for (int iter = 0; iter < 25; ++iter) {
        Graph G = rg(rng), H = rg(rng), J = rg(rng);

        SUBCASE("") {}
        {
            // DM1 / DM2 round.
            Graph prem = Graph::cut(Graph::juxtapose(G, H));
            MacroParams mp;
            mp.graph = G;
            Graph out = replay(MacroName::DM1, {prem}, mp);
            CHECK(out == Graph::gor(Graph::cut(G), Graph::cut(H)));
            MacroParams mp2;
            mp2.graph = G;
            mp2.graph2 = H;
            CHECK(replay(MacroName::DM2, {out}, mp2) == prem);
        }
        {
            // CP.
            Graph prem = imp(G, H);
            MacroParams mp;
            mp.index = locate(prem.items()[0].area(), Item::cut(H));
            CHECK(replay(MacroName::CP, {prem}, mp) ==
                  imp(Graph::cut(H), Graph::cut(G)));
        }
        {
            // TR.
            Graph a = imp(G, J), b = imp(J, H);
            MacroParams mp;
            mp.index = locate(a.items()[0].area(), Item::cut(J));
            mp.index2 = locate(b.items()[0].area(), Item::cut(H));
            CHECK(replay(MacroName::TR, {a, b}, mp) == imp(G, H));
        }
        {
            // PF.
            MacroParams mp;
            mp.graph = H;
            CHECK(replay(MacroName::PF, {G}, mp) == imp(H, G));
        }
        {
            // MP.
            Graph a = G, b = imp(G, H);
            MacroParams mp;
            mp.index = locate(b.items()[0].area(), Item::cut(H));
            CHECK(replay(MacroName::MP, {a, b}, mp) == H);
        }
        {
            // AndL.
            Graph prem = imp(G, H);
            MacroParams mp;
            mp.graph = J;
            CHECK(replay(MacroName::AndL, {prem}, mp) == imp(Graph::juxtapose(G, J), H));
        }
        {
            // AndR.
            Graph a = imp(G, H), b = imp(G, J);
            MacroParams mp;
            mp.index = locate(a.items()[0].area(), Item::cut(H));
            mp.index2 = locate(b.items()[0].area(), Item::cut(J));
            CHECK(replay(MacroName::AndR, {a, b}, mp) == imp(G, Graph::juxtapose(H, J)));
        }
        {
            // OrL1 / OrL2.
            Graph prem = imp(G, H);
            MacroParams mp;
            mp.graph = J;
            mp.index = locate(prem.items()[0].area(), Item::cut(H));
            CHECK(replay(MacroName::OrL1, {prem}, mp) == imp(G, Graph::gor(H, J)));
            CHECK(replay(MacroName::OrL2, {prem}, mp) == imp(G, Graph::gor(H, J)));
        }
        {
            // OrIntro.
            Graph a = imp(G, J), b = imp(H, J);
            MacroParams mp;
            mp.index = locate(a.items()[0].area(), Item::cut(J));
            mp.index2 = locate(b.items()[0].area(), Item::cut(J));
            CHECK(replay(MacroName::OrIntro, {a, b}, mp) == imp(Graph::gor(G, H), J));
        }
        {
            // NL.
            Graph w = Graph::gor(H, J);
            Graph prem = imp(G, w);
            MacroParams mp;
            mp.index = locate(prem.items()[0].area(), Item::cut(w));
            Graph out = replay(MacroName::NL, {prem}, mp);
            CHECK(out == imp(Graph::juxtapose(Graph::cut(H), G), J));
        }
        {
            // NR.
            Graph prem = Graph::cut(
                Graph::juxtapose(Graph::juxtapose(G, H), Graph::cut(J)));
            MacroParams mp;
            mp.graph = G;
            mp.index = locate(prem.items()[0].area(), Item::cut(J));
            CHECK(replay(MacroName::NR, {prem}, mp) == imp(H, Graph::gor(Graph::cut(G), J)));
        }
        {
            // RG1 / RG2 round.
            Graph prem = Graph::cut(
                Graph::juxtapose(Graph::juxtapose(G, H), Graph::cut(J)));
            MacroParams mp;
            mp.graph = G;
            mp.index = locate(prem.items()[0].area(), Item::cut(J));
            Graph out = replay(MacroName::RG1, {prem}, mp);
            Graph expect = imp(G, Graph::single(Item::cut(
                                     Graph::juxtapose(H, Graph::cut(J)))));
            CHECK(out == expect);
            MacroParams mp2;
            Item inner = Item::cut(Graph::juxtapose(H, Graph::cut(J)));
            mp2.index = locate(out.items()[0].area(), Item::cut(Graph::single(inner)));
            mp2.index2 = locate(inner.area(), Item::cut(J));
            CHECK(replay(MacroName::RG2, {out}, mp2) == prem);
        }
        {
            // D1 / D2.
            Item c = Item::cut(Graph::juxtapose(Graph::cut(H), Graph::cut(J)));
            Graph prem = Graph::juxtapose(G, Graph::single(c));
            MacroParams mp;
            mp.index = locate(prem, c);
            Graph out = replay(MacroName::D1, {prem}, mp);
            Graph expect = Graph::cut(
                Graph::juxtapose(Graph::cut(Graph::juxtapose(G, H)),
                                 Graph::cut(Graph::juxtapose(G, J))));
            CHECK(out == expect);
            MacroParams mp2;
            mp2.graph = G;
            CHECK(replay(MacroName::D2, {out}, mp2) == prem);
        }
        {
            // UMN / UMP / UMDB.
            Graph prem = imp(G, H);
            MacroParams mp;
            mp.index = locate(prem.items()[0].area(), Item::cut(H));
            CHECK(replay(MacroName::UMN, {prem}, mp) ==
                  imp(Graph::ncut(G), Graph::ncut(H)));
            CHECK(replay(MacroName::UMP, {prem}, mp) ==
                  imp(Graph::pcut(G), Graph::pcut(H)));
            CHECK(replay(MacroName::UMDB, {prem}, mp) ==
                  imp(Graph::bcut(Graph::bcut(G)), Graph::bcut(Graph::bcut(H))));
        }
        {
            // RE over a random context.
            Graph prem = Graph::iff(G, H);
            GraphContext ctx;
            ctx.skeleton = rg(rng);
            ctx.slot = Address::root();
            // Descend to a random area when one exists.
            std::vector<Address> areas{Address::root()};
            for (std::size_t i = 0; i < ctx.skeleton.size(); ++i)
                if (ctx.skeleton.items()[i].is_cut()) areas.push_back(Address::area({i}));
            ctx.slot = areas[rng() % areas.size()];
            MacroParams mp;
            mp.context = ctx;
            mp.graph = G;
            mp.graph2 = H;
            Graph out = replay(MacroName::RE, {prem}, mp);
            CHECK(out == Graph::iff(ctx.fill(G), ctx.fill(H)));
        }
        {
            // Nec.
            CHECK(replay(MacroName::Nec, {G}, {}) == Graph::ncut(G));
        }
        {
            // CutE.
            GraphContext ctx;
            ctx.skeleton = rg(rng);
            ctx.slot = Address::root();
            Graph prem = ctx.fill(imp(G, G));
            MacroParams mp;
            mp.context = ctx;
            mp.graph = G;
            CHECK(replay(MacroName::CutE, {prem}, mp) == ctx.skeleton);
        }
        {
            // Theorem 9 case templates in KT with only T+ enabled.
            Graph Gne = G.empty() ? parse("p") : G;
            RuleSet ktplus = rules_of(SystemId::K) | rule_bit(RuleName::Tpos);
            Item bg = Item::bcut(Gne);
            Item redex1 = Item::bcut(Graph::juxtapose(H, Graph::single(bg)));
            Graph prem1 = Graph::juxtapose(J, Graph::single(redex1));
            MacroParams mp;
            mp.index = locate(prem1, redex1);
            mp.graph = Gne;
            Graph out1 = replay(MacroName::TMinusCase1, {prem1}, mp, ktplus);
            Item fixed1 = Item::bcut(Graph::juxtapose(H, Graph::cut(Gne)));
            CHECK(out1 == Graph::juxtapose(J, Graph::single(fixed1)));

            Item redex2 = Item::cut(Graph::juxtapose(H, Graph::single(bg)));
            Graph prem2 = Graph::juxtapose(J, Graph::single(redex2));
            MacroParams mp2;
            mp2.index = locate(prem2, redex2);
            mp2.graph = Gne;
            Graph out2 = replay(MacroName::TMinusCase2, {prem2}, mp2, ktplus);
            Item fixed2 = Item::cut(Graph::juxtapose(H, Graph::cut(Gne)));
            CHECK(out2 == Graph::juxtapose(J, Graph::single(fixed2)));
        }
    }
}

TEST_CASE("macro schema mismatches are rejected") {
    MacroParams mp;
    mp.index = 0;
    CHECK_THROWS_AS(elaborate(MacroName::CP, {parse("p q")}, mp), SchemaError);
    CHECK_THROWS_AS(elaborate(MacroName::MP, {parse("p"), parse("(q (r))")}, mp),
                    SchemaError);
    CHECK_THROWS_AS(elaborate(MacroName::TR, {parse("(p (q))")}, mp), SchemaError);
}

TEST_CASE("flatten_proof expands macros to kernel steps") {
    ProofBuilder b(SystemId::K);
    std::size_t a = b.axiom();
    std::size_t d = b.kernel(a, RuleInstance{RuleName::DC1, Address::root(), {}, {}, {}, {}});
    std::size_t i =
        b.kernel(d, RuleInstance{RuleName::INS, Address::area({0}), {}, {}, parse("p"), {}});
    MacroParams mp;
    mp.graph = parse("q");
    std::size_t m = b.macro(MacroName::PF, {i}, mp);
    Proof p = b.proof();
    auto flat = flatten_proof(p);
    CHECK(flat.back().result == b.at(m));
    for (const auto& fs : flat) CHECK(fs.kind != StepKind::Macro);
}
