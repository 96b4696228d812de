// acceptance_main.cpp — the acceptance suite.  Each criterion prints one
// PASS/FAIL line; the exit code is the number of failed criteria.

#include "pmk/bridge.hpp"
#include "pmk/gen.hpp"
#include "pmk/oracle.hpp"
#include "pmk/prover.hpp"
#include "pmk/sk_builders.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace pmk;
namespace sb = sk_build;

namespace {

int failures = 0;

void report(int n, const char* name, bool ok, const std::string& detail = "") {
    std::printf("%s: %d. %s%s%s\n", ok ? "PASS" : "FAIL", n, name,
                detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::size_t locate(const Graph& area, const Item& it) {
    for (std::size_t i = 0; i < area.size(); ++i)
        if (area.items()[i].print() == it.print()) return i;
    throw SchemaError("acceptance: item not found");
}

// Replays an elaboration the way check() does; returns the conclusion.
Graph replay(MacroName m, const std::vector<Graph>& premises, const MacroParams& params,
             RuleSet rules) {
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
            if (!has_rule(rules, es.rule.rule)) throw SchemaError("rule outside system");
            g = apply_rule(resolve(es.premise), es.rule);
            break;
        case StepKind::Jux:
            g = Graph::juxtapose(resolve(es.premise), resolve(es.premise2));
            break;
        default: throw SchemaError("non-kernel step");
        }
        if (g != es.result) throw SchemaError("result mismatch");
        local.push_back(std::move(g));
    }
    if (body.empty()) return premises.at(0);
    return local.back();
}

// ---------------------------------------------------------------------------

void criterion1(std::mt19937_64& rng) {
    GenConfig cfg;
    cfg.max_depth = 6;
    cfg.atoms = 3;
    int bad = 0;
    for (int i = 0; i < 10000; ++i) {
        Graph g = random_graph(rng, cfg);
        if (parse(g.print()) != g) ++bad;
        if (canonicalize(g) != g) ++bad;
        if (canonicalize(canonicalize(g)) != canonicalize(g)) ++bad;
    }
    report(1, "canonical round trip and idempotence (10,000 graphs)", bad == 0,
           bad ? std::to_string(bad) + " failures" : "");
}

void criterion2(std::mt19937_64& rng) {
    GenConfig small;
    small.max_depth = 2;
    small.max_width = 2;
    auto rg = [&]() { return random_graph(rng, small); };
    RuleSet all = rules_of(SystemId::S5);
    RuleSet ktplus = rules_of(SystemId::K) | rule_bit(RuleName::Tpos);
    int bad = 0;
    std::string what;
    auto run = [&](const char* name, std::function<void()> fn) {
        for (int i = 0; i < 20; ++i) {
            try {
                fn();
            } catch (const std::exception& e) {
                ++bad;
                what = std::string(name) + ": " + e.what();
                return;
            }
        }
    };
    auto imp = [](const Graph& a, const Graph& b) { return Graph::implies(a, b); };
    auto cidx = [&](const Graph& g, const Graph& y) {
        return locate(g.items()[0].area(), Item::cut(y));
    };

    run("Lemma5", [&] {
        Graph g = rg();
        ProofBuilder b(SystemId::K);
        std::size_t r = b.axiom();
        r = b.kernel(r, RuleInstance{RuleName::DC1, Address::root(), {}, {}, {}, {}});
        r = b.kernel(r, RuleInstance{RuleName::INS, Address::area({0}), {}, {}, g, {}});
        if (b.at(r) != imp(g, Graph::sa())) throw SchemaError("lemma5a shape");
        std::vector<Item> acc;
        for (const Item& x : g.items()) {
            Graph area = subgraph_at(b.at(r), Address::area({0}));
            std::size_t i = locate(area, x);
            Item host = Item::cut(Graph{acc});
            std::size_t j = SIZE_MAX;
            for (std::size_t k = 0; k < area.size(); ++k)
                if (k != i && area.items()[k].print() == host.print()) { j = k; break; }
            r = b.kernel(r, RuleInstance{RuleName::IT, Address::area({0}), {i},
                                         Address::area({0, j}), {}, {}});
            acc.push_back(x);
        }
        if (b.at(r) != imp(g, g)) throw SchemaError("lemma5b shape");
        if (!check(b.proof()).ok) throw SchemaError("lemma5 check");
    });
    run("DM1", [&] {
        Graph G = rg(), H = rg();
        MacroParams mp;
        mp.graph = G;
        Graph out = replay(MacroName::DM1, {Graph::cut(Graph::juxtapose(G, H))}, mp, all);
        if (out != Graph::gor(Graph::cut(G), Graph::cut(H))) throw SchemaError("DM1");
    });
    run("DM2", [&] {
        Graph G = rg(), H = rg();
        MacroParams mp;
        mp.graph = G;
        mp.graph2 = H;
        Graph out = replay(MacroName::DM2, {Graph::gor(Graph::cut(G), Graph::cut(H))}, mp, all);
        if (out != Graph::cut(Graph::juxtapose(G, H))) throw SchemaError("DM2");
    });
    run("CP", [&] {
        Graph G = rg(), H = rg();
        Graph prem = imp(G, H);
        MacroParams mp;
        mp.index = cidx(prem, H);
        if (replay(MacroName::CP, {prem}, mp, all) != imp(Graph::cut(H), Graph::cut(G)))
            throw SchemaError("CP");
    });
    run("TR", [&] {
        Graph G = rg(), J = rg(), H = rg();
        MacroParams mp;
        mp.index = cidx(imp(G, J), J);
        mp.index2 = cidx(imp(J, H), H);
        if (replay(MacroName::TR, {imp(G, J), imp(J, H)}, mp, all) != imp(G, H))
            throw SchemaError("TR");
    });
    run("PF", [&] {
        Graph G = rg(), H = rg();
        MacroParams mp;
        mp.graph = H;
        if (replay(MacroName::PF, {G}, mp, all) != imp(H, G)) throw SchemaError("PF");
    });
    run("MP", [&] {
        Graph G = rg(), H = rg();
        MacroParams mp;
        mp.index = cidx(imp(G, H), H);
        if (replay(MacroName::MP, {G, imp(G, H)}, mp, all) != H) throw SchemaError("MP");
    });
    run("AndL", [&] {
        Graph G = rg(), H = rg(), J = rg();
        MacroParams mp;
        mp.graph = J;
        if (replay(MacroName::AndL, {imp(G, H)}, mp, all) != imp(Graph::juxtapose(G, J), H))
            throw SchemaError("AndL");
    });
    run("AndR", [&] {
        Graph G = rg(), H = rg(), J = rg();
        MacroParams mp;
        mp.index = cidx(imp(G, H), H);
        mp.index2 = cidx(imp(G, J), J);
        if (replay(MacroName::AndR, {imp(G, H), imp(G, J)}, mp, all) !=
            imp(G, Graph::juxtapose(H, J)))
            throw SchemaError("AndR");
    });
    run("OrL1/OrL2", [&] {
        Graph G = rg(), H = rg(), J = rg();
        MacroParams mp;
        mp.graph = J;
        mp.index = cidx(imp(G, H), H);
        if (replay(MacroName::OrL1, {imp(G, H)}, mp, all) != imp(G, Graph::gor(H, J)))
            throw SchemaError("OrL1");
        if (replay(MacroName::OrL2, {imp(G, H)}, mp, all) != imp(G, Graph::gor(H, J)))
            throw SchemaError("OrL2");
    });
    run("OrIntro", [&] {
        Graph G = rg(), H = rg(), J = rg();
        MacroParams mp;
        mp.index = cidx(imp(G, J), J);
        mp.index2 = cidx(imp(H, J), J);
        if (replay(MacroName::OrIntro, {imp(G, J), imp(H, J)}, mp, all) !=
            imp(Graph::gor(G, H), J))
            throw SchemaError("OrIntro");
    });
    run("NL", [&] {
        Graph G = rg(), H = rg(), J = rg();
        Graph w = Graph::gor(H, J);
        MacroParams mp;
        mp.index = cidx(imp(G, w), w);
        if (replay(MacroName::NL, {imp(G, w)}, mp, all) !=
            imp(Graph::juxtapose(Graph::cut(H), G), J))
            throw SchemaError("NL");
    });
    run("NR", [&] {
        Graph G = rg(), H = rg(), J = rg();
        Graph prem = Graph::cut(Graph::juxtapose(Graph::juxtapose(G, H), Graph::cut(J)));
        MacroParams mp;
        mp.graph = G;
        mp.index = locate(prem.items()[0].area(), Item::cut(J));
        if (replay(MacroName::NR, {prem}, mp, all) != imp(H, Graph::gor(Graph::cut(G), J)))
            throw SchemaError("NR");
    });
    run("RG1/RG2", [&] {
        Graph G = rg(), H = rg(), J = rg();
        Graph prem = Graph::cut(Graph::juxtapose(Graph::juxtapose(G, H), Graph::cut(J)));
        MacroParams mp;
        mp.graph = G;
        mp.index = locate(prem.items()[0].area(), Item::cut(J));
        Graph out = replay(MacroName::RG1, {prem}, mp, all);
        Item inner = Item::cut(Graph::juxtapose(H, Graph::cut(J)));
        if (out != imp(G, Graph::single(inner))) throw SchemaError("RG1");
        MacroParams mp2;
        mp2.index = locate(out.items()[0].area(), Item::cut(Graph::single(inner)));
        mp2.index2 = locate(inner.area(), Item::cut(J));
        if (replay(MacroName::RG2, {out}, mp2, all) != prem) throw SchemaError("RG2");
    });
    run("D1/D2", [&] {
        Graph G = rg(), H = rg(), J = rg();
        Item c = Item::cut(Graph::juxtapose(Graph::cut(H), Graph::cut(J)));
        Graph prem = Graph::juxtapose(G, Graph::single(c));
        MacroParams mp;
        mp.index = locate(prem, c);
        Graph out = replay(MacroName::D1, {prem}, mp, all);
        Graph expect = Graph::cut(Graph::juxtapose(Graph::cut(Graph::juxtapose(G, H)),
                                                   Graph::cut(Graph::juxtapose(G, J))));
        if (out != expect) throw SchemaError("D1");
        MacroParams mp2;
        mp2.graph = G;
        if (replay(MacroName::D2, {out}, mp2, all) != prem) throw SchemaError("D2");
    });
    run("UMN", [&] {
        Graph G = rg(), H = rg();
        MacroParams mp;
        mp.index = cidx(imp(G, H), H);
        if (replay(MacroName::UMN, {imp(G, H)}, mp, all) !=
            imp(Graph::ncut(G), Graph::ncut(H)))
            throw SchemaError("UMN");
    });
    run("UMP", [&] {
        Graph G = rg(), H = rg();
        MacroParams mp;
        mp.index = cidx(imp(G, H), H);
        if (replay(MacroName::UMP, {imp(G, H)}, mp, all) !=
            imp(Graph::pcut(G), Graph::pcut(H)))
            throw SchemaError("UMP");
    });
    run("UMDB", [&] {
        Graph G = rg(), H = rg();
        MacroParams mp;
        mp.index = cidx(imp(G, H), H);
        if (replay(MacroName::UMDB, {imp(G, H)}, mp, all) !=
            imp(Graph::bcut(Graph::bcut(G)), Graph::bcut(Graph::bcut(H))))
            throw SchemaError("UMDB");
    });
    run("RE", [&] {
        Graph G = rg(), H = rg();
        GraphContext ctx;
        ctx.skeleton = rg();
        std::vector<Address> areas{Address::root()};
        for (std::size_t i = 0; i < ctx.skeleton.size(); ++i)
            if (ctx.skeleton.items()[i].is_cut()) areas.push_back(Address::area({i}));
        ctx.slot = areas[rng() % areas.size()];
        MacroParams mp;
        mp.context = ctx;
        mp.graph = G;
        mp.graph2 = H;
        if (replay(MacroName::RE, {Graph::iff(G, H)}, mp, all) !=
            Graph::iff(ctx.fill(G), ctx.fill(H)))
            throw SchemaError("RE");
    });
    run("Nec", [&] {
        Graph G = rg();
        if (replay(MacroName::Nec, {G}, {}, all) != Graph::ncut(G))
            throw SchemaError("Nec");
    });
    run("CutE", [&] {
        Graph G = rg();
        GraphContext ctx;
        ctx.skeleton = rg();
        ctx.slot = Address::root();
        Graph prem = ctx.fill(imp(G, G));
        MacroParams mp;
        mp.context = ctx;
        mp.graph = G;
        if (replay(MacroName::CutE, {prem}, mp, all) != ctx.skeleton)
            throw SchemaError("CutE");
    });
    run("Theorem 9 cases", [&] {
        Graph G = rg(), H = rg(), J = rg();
        if (G.empty()) G = parse("p");
        Item bg = Item::bcut(G);
        Item redex1 = Item::bcut(Graph::juxtapose(H, Graph::single(bg)));
        Graph prem1 = Graph::juxtapose(J, Graph::single(redex1));
        MacroParams mp;
        mp.index = locate(prem1, redex1);
        mp.graph = G;
        Item fixed1 = Item::bcut(Graph::juxtapose(H, Graph::cut(G)));
        if (replay(MacroName::TMinusCase1, {prem1}, mp, ktplus) !=
            Graph::juxtapose(J, Graph::single(fixed1)))
            throw SchemaError("T-minus-case1");
        Item redex2 = Item::cut(Graph::juxtapose(H, Graph::single(bg)));
        Graph prem2 = Graph::juxtapose(J, Graph::single(redex2));
        MacroParams mp2;
        mp2.index = locate(prem2, redex2);
        mp2.graph = G;
        Item fixed2 = Item::cut(Graph::juxtapose(H, Graph::cut(G)));
        if (replay(MacroName::TMinusCase2, {prem2}, mp2, ktplus) !=
            Graph::juxtapose(J, Graph::single(fixed2)))
            throw SchemaError("T-minus-case2");
    });

    report(2, "admissible-rule elaborations (>= 20 instantiations each)", bad == 0, what);
}

void criterion3(std::mt19937_64& rng) {
    GenConfig cfg;
    cfg.max_depth = 3;
    cfg.max_width = 2;
    OracleLimits lim;
    long violations = 0, checked = 0;
    std::string what;
    for (SystemId s : kAllSystems) {
        if (s == SystemId::K) continue; // Def 8's fourteen extension systems
        FrameClass cls = frame_class_of(s);
        int done = 0;
        while (done < 5000) {
            Graph g = random_graph(rng, cfg);
            auto inst = random_instance(g, s, rng);
            if (!inst) continue;
            Graph h = apply_rule(g, *inst);
            ++done;
            for (int f = 0; f < 20; ++f) {
                std::uniform_int_distribution<int> nw(1, 4);
                KripkeFrame frame = random_frame(nw(rng), cls, rng);
                bool prem = valid(g, frame, lim);
                if (prem && inst->rule == RuleName::JUX)
                    prem = valid(*inst->payload, frame, lim);
                if (!prem) continue;
                ++checked;
                if (!valid(h, frame, lim)) {
                    ++violations;
                    if (what.empty())
                        what = std::string(system_name(s)) + ": " + g.print() + " --" +
                               rule_name(inst->rule) + "--> " + h.print();
                }
            }
        }
    }
    report(3, "rule soundness fuzz (5,000 applications x 14 systems x 20 frames)",
           violations == 0,
           violations ? what : std::to_string(checked) + " non-vacuous checks");
}

void criterion4() {
    // Remark 4 (I): iteration into a possibility cut.
    Graph x1 = parse("p {(q)}");
    Graph prem1 = Graph::implies(x1, x1);
    Graph concl1 = Graph::implies(x1, parse("p {(p q)}"));
    // Remark 4 (II): deiteration out of a broken cut.
    Graph x2 = parse("p {q}");
    Graph prem2 = Graph::implies(x2, x2);
    Graph concl2 = Graph::implies(parse("p {p q}"), x2);

    bool ok = true;
    std::string what;
    auto require = [&](bool b, const char* msg) {
        if (!b && ok) {
            ok = false;
            what = msg;
        }
    };

    require(!countermodel(prem1, FrameClass{}, 2).has_value(), "(I) premise not valid");
    require(!countermodel(prem2, FrameClass{}, 2).has_value(), "(II) premise not valid");
    require(countermodel(concl1, FrameClass{}, 2).has_value(), "(I) conclusion lacks witness");
    require(countermodel(concl2, FrameClass{}, 2).has_value(), "(II) conclusion lacks witness");

    {
        Graph g = prem1;
        std::size_t qi = locate(g.items()[0].area(), Item::cut(x1));
        Graph qarea = subgraph_at(g, Address::area({0, qi}));
        std::size_t pidx = locate(qarea, Item::atom("p"));
        std::size_t bidx = locate(qarea, parse("{(q)}").items()[0]);
        RuleInstance bad{RuleName::IT, Address::area({0, qi}), {pidx},
                         Address::area({0, qi, bidx, 0}), {}, {}};
        try {
            apply_rule(g, bad);
            require(false, "(I) illegal iteration accepted");
        } catch (const RuleError& e) {
            require(e.kind == RuleErrorKind::BrokenCutFreeViolation,
                    "(I) wrong rejection kind");
        }
    }
    {
        Graph g = concl2;
        Graph area = g.items()[0].area();
        std::size_t pidx = locate(area, Item::atom("p"));
        std::size_t bidx = locate(area, parse("{p q}").items()[0]);
        RuleInstance bad{RuleName::DEIT, Address::area({0}), {pidx},
                         Address::area({0, bidx}), {}, {}};
        try {
            apply_rule(g, bad);
            require(false, "(II) illegal deiteration accepted");
        } catch (const RuleError& e) {
            require(e.kind == RuleErrorKind::BrokenCutFreeViolation,
                    "(II) wrong rejection kind");
        }
    }
    report(4, "Remark 4 negatives (countermodels + named rejections)", ok, what);
}

void criterion5(std::mt19937_64& rng) {
    int bad = 0;
    GenConfig cfg;
    for (int i = 0; i < 10000; ++i) {
        Formula f = random_formula(rng, cfg);
        if (pi(sigma(f)) != delta(f)) ++bad;
    }
    for (int i = 0; i < 10000; ++i) {
        Graph g = random_graph(rng, cfg);
        if (sigma(pi(g)) != rho(g)) ++bad;
    }
    report(5, "commuting diagrams pi.sigma = delta and sigma.pi = rho (10,000 each)",
           bad == 0, bad ? std::to_string(bad) + " failures" : "");
}

void criterion6() {
    bool ok = true;
    std::string what;
    int done = 0;
    for (auto& [goal, proof] : provable_corpus(SystemId::K)) {
        if (done >= 10) break;
        ++done;
        try {
            SKProof sk = translate_proof_g_to_sk(proof);
            auto r = check_sk(sk, SigmaSet::none());
            if (!r.ok || !(sk.seq == Sequent{Formula::top(), pi(goal)})) {
                ok = false;
                what = goal.print() + ": " + r.reason;
            }
        } catch (const std::exception& e) {
            ok = false;
            what = goal.print() + ": " + e.what();
        }
    }
    Formula p = Formula::atom("p"), q = Formula::atom("q");
    std::vector<SKProof> sk_corpus;
    sk_corpus.push_back(sb::id(p));
    sk_corpus.push_back(sb::ax_top(Formula::conj(p, q)));
    sk_corpus.push_back(sb::em(p));
    sk_corpus.push_back(
        SKProof{SKRule::Gen, {Formula::top(), Formula::box(Formula::top())}, {}});
    sk_corpus.push_back(SKProof{SKRule::BoxAnd,
                                {Formula::conj(Formula::box(p), Formula::box(q)),
                                 Formula::box(Formula::conj(p, q))},
                                {}});
    {
        Formula dl = Formula::conj(p, Formula::disj(q, Formula::top()));
        Formula dr = Formula::disj(Formula::conj(p, q), Formula::conj(p, Formula::top()));
        sk_corpus.push_back(SKProof{SKRule::D, {dl, dr}, {}});
    }
    sk_corpus.push_back(sb::dneg_intro(p));
    sk_corpus.push_back(sb::neg_antitone(sb::id(p)));
    sk_corpus.push_back(sb::and_r(sb::and_l1(q, sb::id(p)), sb::and_l2(p, sb::id(q))));
    sk_corpus.push_back(sb::box_rule(sb::id(p)));
    for (const SKProof& sk : sk_corpus) {
        try {
            Proof g = translate_proof_sk_to_g(sk, SigmaSet::none(), SystemId::K);
            auto r = check(g);
            if (!r.ok ||
                g.conclusion() != Graph::implies(sigma(sk.seq.left), sigma(sk.seq.right))) {
                ok = false;
                what = sk.seq.print() + ": " + r.reason;
            }
        } catch (const std::exception& e) {
            ok = false;
            what = sk.seq.print() + ": " + e.what();
        }
    }
    report(6, "Theorem 18 corpus (10 proofs each direction)", ok, what);
}

void criterion7() {
    bool ok = true;
    std::string what;
    Formula p = Formula::atom("p");
    struct Row {
        AxiomSchema schema;
        SystemId system;
        int k_worlds;
    } rows[] = {{AxiomSchema::T, SystemId::KT, 3},
                {AxiomSchema::Four, SystemId::K4, 3},
                {AxiomSchema::B, SystemId::KB, 3},
                {AxiomSchema::Five, SystemId::K5, 3},
                {AxiomSchema::D, SystemId::KD, 1}};
    for (const Row& row : rows) {
        Graph goal = sigma(axiom_instance(row.schema, p));
        bool found = false;
        for (auto& [g, proof] : provable_corpus(row.system)) {
            if (g != goal) continue;
            found = true;
            auto r = check(proof);
            if (!r.ok) {
                ok = false;
                what = std::string(system_name(row.system)) + " script: " + r.reason;
            }
        }
        if (!found) {
            ok = false;
            what = std::string("no corpus script for ") + system_name(row.system);
        }
        if (countermodel(goal, frame_class_of(row.system), 3).has_value()) {
            ok = false;
            what = std::string(system_name(row.system)) + " axiom invalid on its class";
        }
        if (!countermodel(goal, FrameClass{}, row.k_worlds).has_value()) {
            ok = false;
            what = std::string(system_name(row.system)) + " axiom lacks a K countermodel";
        }
    }
    report(7, "extension axioms: scripts, class validity, K countermodels", ok, what);
}

void criterion8() {
    bool ok = true;
    std::string what;
    std::vector<Graph> theorems;
    for (auto& [goal, proof] : provable_corpus(SystemId::K)) theorems.push_back(goal);
    for (const char* x : {"p", "q", "r", "p q", "(p)", "{p}", "p p", "(p) q"}) {
        theorems.push_back(Graph::implies(parse(x), parse(x)));
    }
    std::sort(theorems.begin(), theorems.end());
    theorems.erase(std::unique(theorems.begin(), theorems.end()), theorems.end());
    while (theorems.size() > 20) theorems.pop_back();

    std::vector<Graph> non_theorems;
    for (const char* x :
         {"p", "(p)", "{p}", "(p ({p}))", "(({p}) p)", "p q", "(p (q))", "({p q} ({p}))",
          "(({p}) ({({p})}))", "(p ({({(p)})}))", "({(p)} ({({(p)})}))", "{(p)}",
          "{q} p", "((p) ({(p)}))", "() p", "{p q}", "(p (q r))",
          "((p q) p r)", "({p}) p", "((p) (q))"}) {
        non_theorems.push_back(parse(x));
    }

    SearchConfig cfg;
    cfg.depth = 8;
    cfg.node_budget = 8000;
    int proved = 0;
    for (const Graph& t : theorems) {
        auto cm = countermodel(t, FrameClass{}, 3);
        auto pf = prove(t, cfg);
        if (pf) {
            ++proved;
            if (!check(*pf).ok || pf->conclusion() != t) {
                ok = false;
                what = "bad proof for " + t.print();
            }
            if (cm) {
                ok = false;
                what = "contradiction on " + t.print();
            }
        }
        if (cm) {
            ok = false;
            what = "countermodel for theorem " + t.print();
        }
    }
    for (const Graph& t : non_theorems) {
        auto cm = countermodel(t, FrameClass{}, 3);
        if (!cm) {
            ok = false;
            what = "no witness for non-theorem " + t.print();
        }
        auto pf = prove(t, cfg);
        if (pf) {
            ok = false;
            what = "proved a non-theorem: " + t.print();
        }
    }
    report(8, "prover/oracle agreement on the 40-item corpus", ok,
           ok ? std::to_string(proved) + "/20 theorems proved within bounds" : what);
}

void criterion9(std::mt19937_64& rng) {
    int bad = 0;
    Formula boxtop = Formula::box(Formula::top());
    Formula lhs = parse_formula("[](p & q)");
    Formula rhs = parse_formula("([]p & []q)");
    for (int i = 0; i < 500; ++i) {
        std::uniform_int_distribution<int> nw(1, 4);
        KripkeFrame f = random_frame(nw(rng), FrameClass{}, rng);
        if (!valid(boxtop, f)) ++bad;
        std::size_t per = std::size_t{1} << f.n;
        for (std::size_t pv = 0; pv < per; ++pv)
            for (std::size_t qv = 0; qv < per; ++qv) {
                Valuation v;
                v.sets = {{"p", static_cast<WorldSet>(pv)}, {"q", static_cast<WorldSet>(qv)}};
                if (eval(lhs, f, v) != eval(rhs, f, v)) ++bad;
            }
    }
    report(9, "normality and additivity on 500 random frames", bad == 0,
           bad ? std::to_string(bad) + " failures" : "");
}

} // namespace

int main() {
    std::mt19937_64 rng(seed_from_env());
    auto t0 = std::chrono::steady_clock::now();
    criterion1(rng);
    criterion2(rng);
    criterion3(rng);
    criterion4();
    criterion5(rng);
    criterion6();
    criterion7();
    criterion8();
    criterion9(rng);
    auto dt = std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::printf("%d criteria failed (%llds total)\n", failures,
                static_cast<long long>(dt));
    return failures;
}
