// sk.hpp — the basic sequent calculus SK: axioms Id, ⊤, D, Em, Gen, □∧
// (plus Σ-axioms), rules ¬L, ¬R, Tr, ∧L(i), ∧R, □.  Proofs are trees;
// each node stores its conclusion sequent, which check_sk re-derives.

#pragma once

#include "pmk/formula.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pmk {

enum class SKRule {
    Id, Top, D, Em, Gen, BoxAnd, Sigma, // axioms
    NegL, NegR, Tr, AndL1, AndL2, AndR, Box,
};

const char* sk_rule_name(SKRule r);
std::optional<SKRule> sk_rule_from_name(std::string_view s);

struct SKProof {
    SKRule rule = SKRule::Id;
    Sequent seq;
    std::vector<SKProof> children;
};

// Axiom schemata of the standard extensions; a Σ-axiom leaf must be an
// instance of an enabled schema or equal to a listed formula.
enum class AxiomSchema { D, T, Four, B, Five };

struct SigmaSet {
    std::set<AxiomSchema> schemas;
    std::vector<Formula> formulas;
    bool contains(const Formula& f) const;
    static SigmaSet none() { return {}; }
    static SigmaSet of(AxiomSchema s) { return SigmaSet{{s}, {}}; }
};

// Returns the schema's formula with metavariable instantiated to x
// (D ignores x).
Formula axiom_instance(AxiomSchema s, const Formula& x);

// If f is an instance of the schema, returns the instantiation (⊤ for D).
std::optional<Formula> match_axiom(AxiomSchema s, const Formula& f);

struct SkCheckResult {
    bool ok = true;
    std::vector<std::size_t> node; // path of child indices to the failure
    std::string reason;
};

SkCheckResult check_sk(const SKProof& p, const SigmaSet& sigma = SigmaSet::none());

// A formula with a single slot, identified by a path of child steps
// (0 = Not/Box child or And-left, 1 = And-right).
struct FormulaContext {
    Formula skeleton;
    std::vector<int> slot;

    Formula fill(const Formula& x) const;
    // Number of negations enclosing the slot; Box does not flip polarity.
    bool slot_positive() const;
};

enum class FormulaPolarity { Positive, Negative };

// Lemma-style monotone replacement: given a proof of β⊢γ, returns a proof
// of α{β}⊢α{γ} for a positive slot or α{γ}⊢α{β} for a negative one.
SKProof sk_mono_replace(const FormulaContext& context, const Formula& beta,
                        const Formula& gamma, const SKProof& subproof,
                        FormulaPolarity polarity);

} // namespace pmk
