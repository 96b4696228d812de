// pmk — command-line front door: parsing, proof checking, translations,
// bounded search, countermodels and soundness fuzzing.
//
// stdout carries one JSON object per line; diagnostics go to stderr.
// Exit codes: 0 success/valid, 1 checked failure, 2 usage or I/O error.

#include "pmk/bridge.hpp"
#include "pmk/gen.hpp"
#include "pmk/json_io.hpp"
#include "pmk/oracle.hpp"
#include "pmk/prover.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace pmk;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FrameClass class_from_name(const std::string& name) {
    if (name == "K") return FrameClass{};
    if (auto sys = system_from_name(name)) return frame_class_of(*sys);
    FrameClass c;
    for (char ch : name) {
        switch (ch) {
        case 'D': c.serial = true; break;
        case 'T': c.reflexive = true; break;
        case '4': c.transitive = true; break;
        case 'B': c.symmetric = true; break;
        case '5': c.euclidean = true; break;
        default: throw CLI::ValidationError("unknown frame class: " + name);
        }
    }
    return c;
}

SigmaSet sigma_of_system(SystemId s) {
    SigmaSet out;
    RuleSet r = rules_of(s);
    if (has_rule(r, RuleName::Dpos)) out.schemas.insert(AxiomSchema::D);
    if (has_rule(r, RuleName::Tpos)) out.schemas.insert(AxiomSchema::T);
    if (has_rule(r, RuleName::FourPos)) out.schemas.insert(AxiomSchema::Four);
    if (has_rule(r, RuleName::Bpos)) out.schemas.insert(AxiomSchema::B);
    if (has_rule(r, RuleName::FivePos)) out.schemas.insert(AxiomSchema::Five);
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Deep-inference proof kernel for Peirce-style modal graphs"};
    app.require_subcommand(1);

    // parse / print
    std::string graph_text;
    auto* cmd_parse = app.add_subcommand("parse", "Parse a graph and print its canonical form");
    cmd_parse->add_option("graph", graph_text)->required();
    auto* cmd_print = app.add_subcommand("print", "Canonical form of a graph (alias of parse)");
    cmd_print->add_option("graph", graph_text)->required();

    // check
    std::string proof_path;
    auto* cmd_check = app.add_subcommand("check", "Check a graphical proof file");
    cmd_check->add_option("file", proof_path)->required();

    // check-sk
    std::string sk_path, sk_sigma;
    auto* cmd_check_sk = app.add_subcommand("check-sk", "Check an SK proof file");
    cmd_check_sk->add_option("file", sk_path)->required();
    cmd_check_sk->add_option("--sigma", sk_sigma, "Axiom schemas, e.g. T45");

    // translate
    std::string dir, input;
    auto* cmd_tr = app.add_subcommand("translate", "Translate between graphs and formulas");
    cmd_tr->add_option("--dir", dir, "g2f | f2g | delta | rho")->required();
    cmd_tr->add_option("input", input)->required();

    // prove
    std::string prove_system = "K";
    int prove_depth = 6;
    std::string prove_goal;
    std::string prove_out;
    auto* cmd_prove = app.add_subcommand("prove", "Bounded backward proof search");
    cmd_prove->add_option("--system", prove_system);
    cmd_prove->add_option("--depth", prove_depth);
    cmd_prove->add_option("--out", prove_out, "Write the proof file here");
    cmd_prove->add_option("goal", prove_goal)->required();

    // countermodel
    std::string cm_class = "K", cm_input;
    int cm_max_worlds = 3;
    bool cm_formula = false;
    int cm_max_atoms = 3;
    auto* cmd_cm = app.add_subcommand("countermodel", "Exhaustive countermodel search");
    cmd_cm->add_option("--class", cm_class, "Frame class (K or subset of DT4B5 or system)");
    cmd_cm->add_option("--max-worlds", cm_max_worlds);
    cmd_cm->add_option("--max-atoms", cm_max_atoms);
    cmd_cm->add_flag("--formula", cm_formula, "Interpret the input as a formula");
    cmd_cm->add_option("input", cm_input)->required();

    // fuzz-soundness
    std::string fz_system = "K";
    int fz_iters = 100, fz_frames = 10;
    auto* cmd_fz = app.add_subcommand("fuzz-soundness",
                                      "Random legal rule applications preserve frame validity");
    cmd_fz->add_option("--system", fz_system);
    cmd_fz->add_option("--iters", fz_iters);
    cmd_fz->add_option("--frames", fz_frames);

    // corpus
    std::string corpus_system = "all";
    auto* cmd_corpus = app.add_subcommand("corpus", "Run the built-in regression corpus");
    cmd_corpus->add_option("--system", corpus_system);

    CLI11_PARSE(app, argc, argv);

    if (cmd_parse->parsed() || cmd_print->parsed()) {
        Graph g = parse(graph_text);
        std::cout << json{{"graph", g.print()}}.dump() << "\n";
        return 0;
    }

    if (cmd_check->parsed()) {
        Proof p = proof_from_json(slurp(proof_path));
        CheckResult r = check(p);
        if (r.ok) {
            std::cout << json{{"ok", true}, {"conclusion", p.conclusion().print()}}.dump()
                      << "\n";
            return 0;
        }
        std::cout << json{{"ok", false}, {"step", r.step}, {"reason", r.reason}}.dump() << "\n";
        return 1;
    }

    if (cmd_check_sk->parsed()) {
        SKProof p = sk_from_json(slurp(sk_path));
        SigmaSet sigma;
        for (char ch : sk_sigma) {
            switch (ch) {
            case 'D': sigma.schemas.insert(AxiomSchema::D); break;
            case 'T': sigma.schemas.insert(AxiomSchema::T); break;
            case '4': sigma.schemas.insert(AxiomSchema::Four); break;
            case 'B': sigma.schemas.insert(AxiomSchema::B); break;
            case '5': sigma.schemas.insert(AxiomSchema::Five); break;
            default: throw CLI::ValidationError("bad --sigma");
            }
        }
        SkCheckResult r = check_sk(p, sigma);
        if (r.ok) {
            std::cout << json{{"ok", true}, {"conclusion", p.seq.print()}}.dump() << "\n";
            return 0;
        }
        std::cout << json{{"ok", false}, {"node", r.node}, {"reason", r.reason}}.dump() << "\n";
        return 1;
    }

    if (cmd_tr->parsed()) {
        std::string out;
        if (dir == "g2f") out = pi(parse(input)).print();
        else if (dir == "f2g") out = sigma(parse_formula(input)).print();
        else if (dir == "delta") out = delta(parse_formula(input)).print();
        else if (dir == "rho") out = rho(parse(input)).print();
        else throw CLI::ValidationError("--dir must be g2f, f2g, delta or rho");
        std::cout << json{{"result", out}}.dump() << "\n";
        return 0;
    }

    if (cmd_prove->parsed()) {
        auto sys = system_from_name(prove_system);
        if (!sys) throw CLI::ValidationError("unknown system " + prove_system);
        SearchConfig cfg;
        cfg.system = *sys;
        cfg.depth = prove_depth;
        SearchStats st;
        auto pf = prove(parse(prove_goal), cfg, &st);
        if (pf) {
            if (!prove_out.empty()) {
                std::ofstream f(prove_out);
                f << proof_to_json(*pf) << "\n";
            }
            std::cout << json{{"proved", true},
                              {"steps", pf->steps.size()},
                              {"expanded", st.expanded}}
                             .dump()
                      << "\n";
            return 0;
        }
        std::cout << json{{"proved", false}, {"expanded", st.expanded}}.dump() << "\n";
        return 1;
    }

    if (cmd_cm->parsed()) {
        FrameClass cls = class_from_name(cm_class);
        OracleLimits lim;
        lim.max_atoms = static_cast<std::size_t>(cm_max_atoms);
        std::optional<Countermodel> cm;
        if (cm_formula)
            cm = countermodel(parse_formula(cm_input), cls, cm_max_worlds, lim);
        else
            cm = countermodel(parse(cm_input), cls, cm_max_worlds, lim);
        if (cm) {
            std::cout << countermodel_to_json(*cm) << "\n";
            return 0;
        }
        std::cout << json{{"found", false}, {"max_worlds", cm_max_worlds}}.dump() << "\n";
        return 1;
    }

    if (cmd_fz->parsed()) {
        auto sys = system_from_name(fz_system);
        if (!sys) throw CLI::ValidationError("unknown system " + fz_system);
        std::mt19937_64 rng(seed_from_env());
        FrameClass cls = frame_class_of(*sys);
        OracleLimits lim;
        int violations = 0, checked = 0;
        GenConfig gc;
        for (int i = 0; i < fz_iters; ++i) {
            Graph g = random_graph(rng, gc);
            auto inst = random_instance(g, *sys, rng);
            if (!inst) continue;
            Graph h;
            try {
                h = apply_rule(g, *inst);
            } catch (const RuleError&) {
                continue;
            }
            for (int f = 0; f < fz_frames; ++f) {
                std::uniform_int_distribution<int> nw(1, 4);
                KripkeFrame frame = random_frame(nw(rng), cls, rng);
                bool prem = valid(g, frame, lim);
                // JUX asserts its payload as a second premise.
                if (prem && inst->rule == RuleName::JUX)
                    prem = valid(*inst->payload, frame, lim);
                if (!prem) continue;
                ++checked;
                if (!valid(h, frame, lim)) {
                    ++violations;
                    std::cerr << "violation: " << g.print() << " --" << rule_name(inst->rule)
                              << "--> " << h.print() << "\n";
                }
            }
        }
        std::cout << json{{"iters", fz_iters}, {"checked", checked}, {"violations", violations}}
                         .dump()
                  << "\n";
        return violations == 0 ? 0 : 1;
    }

    if (cmd_corpus->parsed()) {
        bool all_ok = true;
        auto run_system = [&](SystemId s) {
            for (auto& [goal, proof] : provable_corpus(s)) {
                CheckResult r = check(proof);
                bool ok = r.ok && proof.conclusion() == goal;
                all_ok = all_ok && ok;
                std::cout << json{{"system", system_name(s)},
                                  {"graph", goal.print()},
                                  {"ok", ok}}
                                 .dump()
                          << "\n";
                if (!ok) std::cerr << "corpus failure: " << r.reason << "\n";
            }
        };
        if (corpus_system == "all") {
            for (SystemId s : kAllSystems) run_system(s);
        } else {
            auto sys = system_from_name(corpus_system);
            if (!sys) throw CLI::ValidationError("unknown system " + corpus_system);
            run_system(*sys);
        }
        return all_ok ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error at byte " << e.offset << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
