// bridge.hpp — translations between graphs and formulas (π, σ and the
// composites δ, ρ), plus the proof translations between the graphical
// systems and SK.

#pragma once

#include "pmk/formula.hpp"
#include "pmk/graph.hpp"
#include "pmk/proof.hpp"
#include "pmk/sk.hpp"

namespace pmk {

// π: graphs → formulas.  Atoms map to atoms, SA to ⊤, a continuous cut to
// ¬, a broken cut to ◇¬ (core: ¬□¬¬), juxtaposition to a right-nested ∧
// chain over canonical child order; singleton areas carry no ∧⊤ wrapper.
Formula pi(const Graph& g);

// σ: formulas → graphs.  ⊤ to SA, ¬ to a continuous cut, □ to a necessity
// cut, ∧ to juxtaposition.
Graph sigma(const Formula& f);

// δ = π∘σ and ρ = σ∘π as standalone recursions; the commuting diagrams
// pi(sigma(f)) == delta(f) and sigma(pi(g)) == rho(g) hold structurally.
Formula delta(const Formula& f);
Graph rho(const Graph& g);

// The formula context obtained by replacing the area at `a` in π(g) with
// a slot; filling it with the fold of that area's contents reproduces
// π(g) exactly.
FormulaContext pi_context(const Graph& g, const Address& a);

// Lemma-15-style proof translation: a checked graphical proof in a system
// becomes an SK proof of ⊤⊢π(G) over the system's Σ-axioms.
SKProof translate_proof_g_to_sk(const Proof& p);

// Lemma-16-style proof translation: a checked SK proof of α⊢β becomes a
// graphical proof (macros allowed) of σ(α)⊃σ(β) in the system whose
// axioms cover the Σ-leaves used.
Proof translate_proof_sk_to_g(const SKProof& p, const SigmaSet& sigma,
                              SystemId system = SystemId::K);

} // namespace pmk
