// proof.hpp — proof objects for the graphical calculi, the step checker,
// and elaboration of the admissible rules into kernel steps.
//
// A proof is a sequence of steps.  Each step is the axiom SA, a kernel
// rule applied to an earlier step, the juxtaposition of two earlier
// steps, or a macro (an admissible rule) with earlier steps as premises.
// Every step stores its claimed result graph; check() recomputes each
// one and compares canonically, elaborating macros down to kernel steps
// first.

#pragma once

#include "pmk/graph.hpp"
#include "pmk/rules.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pmk {

struct SchemaError : std::runtime_error {
    explicit SchemaError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

enum class StepKind { Axiom, Kernel, Jux, Macro };

enum class MacroName : std::uint8_t {
    DM1, DM2, CP, TR, PF, MP, AndL, AndR, OrL1, OrL2, OrIntro, NL, NR,
    RG1, RG2, D1, D2, UMN, UMP, UMDB, RE, Nec, CutE, TMinusCase1, TMinusCase2,
};

inline constexpr MacroName kAllMacros[] = {
    MacroName::DM1, MacroName::DM2, MacroName::CP, MacroName::TR, MacroName::PF,
    MacroName::MP, MacroName::AndL, MacroName::AndR, MacroName::OrL1, MacroName::OrL2,
    MacroName::OrIntro, MacroName::NL, MacroName::NR, MacroName::RG1, MacroName::RG2,
    MacroName::D1, MacroName::D2, MacroName::UMN, MacroName::UMP, MacroName::UMDB,
    MacroName::RE, MacroName::Nec, MacroName::CutE, MacroName::TMinusCase1,
    MacroName::TMinusCase2,
};

const char* macro_name(MacroName m);
std::optional<MacroName> macro_from_name(std::string_view s);

// A graph with a hole: filling adds the filler's items to the area at
// `slot` (an area address into `skeleton`).
struct GraphContext {
    Graph skeleton;
    Address slot = Address::root();
    Graph fill(const Graph& x) const;
};

struct MacroParams {
    std::optional<std::size_t> index;
    std::optional<std::size_t> index2;
    std::optional<Graph> graph;
    std::optional<Graph> graph2;
    std::optional<GraphContext> context;
};

struct ProofStep {
    StepKind kind = StepKind::Axiom;
    // Kernel
    RuleInstance rule;
    // Kernel: one premise; Jux: two; Macro: as many as the schema needs.
    std::vector<std::size_t> premises;
    // Macro
    MacroName macro = MacroName::DM1;
    MacroParams params;
    // Claimed result, cross-checked by check().
    Graph result;
};

struct Proof {
    SystemId system = SystemId::K;
    std::vector<ProofStep> steps;
    const Graph& conclusion() const { return steps.back().result; }
};

struct CheckResult {
    bool ok = true;
    std::size_t step = 0;
    std::string reason;
};

CheckResult check(const Proof& p);
CheckResult check_with_rules(const Proof& p, RuleSet rules);

// ---------------------------------------------------------------------------
// Macro elaboration.  Elaborated steps are kernel-only; premise references
// are either macro inputs or earlier elaborated steps.

struct ElabRef {
    bool is_input = false;
    std::size_t index = 0;
};

struct ElabStep {
    StepKind kind = StepKind::Axiom; // Axiom, Kernel or Jux
    RuleInstance rule;               // Kernel only
    ElabRef premise;                 // Kernel, Jux first
    ElabRef premise2;                // Jux second
    Graph result;
};

std::vector<ElabStep> elaborate(MacroName m, const std::vector<Graph>& premises,
                                const MacroParams& params);

// Convenience used by proof construction: runs a macro and returns its
// conclusion (the last elaborated step's result, or the single premise
// for empty elaborations).
Graph macro_conclusion(MacroName m, const std::vector<Graph>& premises,
                       const MacroParams& params);

// ---------------------------------------------------------------------------
// Script construction helper.

class ProofBuilder {
  public:
    explicit ProofBuilder(SystemId system) { proof_.system = system; }

    std::size_t axiom();
    std::size_t kernel(std::size_t premise, RuleInstance r);
    std::size_t jux(std::size_t a, std::size_t b);
    std::size_t macro(MacroName m, std::vector<std::size_t> premises, MacroParams params);

    const Graph& at(std::size_t i) const { return proof_.steps[i].result; }
    const Proof& proof() const { return proof_; }
    Proof take() { return std::move(proof_); }

  private:
    Proof proof_;
};

// A proof with macros expanded: axiom, kernel and juxtaposition steps only.
struct FlatStep {
    StepKind kind = StepKind::Axiom;
    RuleInstance rule;
    std::size_t premise = 0;
    std::size_t premise2 = 0;
    Graph result;
};

std::vector<FlatStep> flatten_proof(const Proof& p);

// Built-in regression corpus: theorem/proof pairs that check under their
// system (used by tests, the CLI `corpus` subcommand and the prover
// agreement suite).
std::vector<std::pair<Graph, Proof>> provable_corpus(SystemId system);

} // namespace pmk
