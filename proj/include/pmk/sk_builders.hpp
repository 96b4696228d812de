// sk_builders.hpp — mechanical constructors for derived SK inferences.
// Every function returns a proof tree that check_sk accepts; conclusions
// are stated in the comments with ∨ meaning the usual ¬(¬a∧¬b) sugar.

#pragma once

#include "pmk/sk.hpp"

#include <vector>

namespace pmk::sk_build {

SKProof id(const Formula& a);                 // a ⊢ a
SKProof ax_top(const Formula& a);             // a ⊢ T
SKProof em(const Formula& a);                 // T ⊢ a ∨ ~a
SKProof tr(SKProof a, SKProof b);             // from x⊢y, y⊢z: x ⊢ z
SKProof and_l1(const Formula& extra, SKProof p); // from a⊢b: (a & extra) ⊢ b
SKProof and_l2(const Formula& extra, SKProof p); // from a⊢b: (extra & a) ⊢ b
SKProof and_r(SKProof a, SKProof b);          // from x⊢a, x⊢b: x ⊢ (a & b)
SKProof box_rule(SKProof p);                  // from a⊢b: []a ⊢ []b

SKProof dneg_intro(const Formula& a);         // a ⊢ ~~a
SKProof dneg_elim(const Formula& a);          // ~~a ⊢ a
SKProof neg_antitone(SKProof u_v);            // from u⊢v: ~v ⊢ ~u
SKProof diamond_mono(SKProof p);              // from a⊢b: ~[]~a ⊢ ~[]~b

SKProof noncontradiction(const Formula& a);   // T ⊢ ~(a & ~a)
SKProof exfalso(const Formula& a, const Formula& target); // (a & ~a) ⊢ target
// From x⊢l∨r (sugar shape), l⊢t, r⊢t: x ⊢ t.
SKProof or_elim(SKProof x_lr, SKProof l_t, SKProof r_t);
// From T⊢~(x & ~y): x ⊢ y.
SKProof seq_of_valid_impl(const Formula& x, const Formula& y, SKProof valid);
// From x⊢y: T ⊢ ~(x & ~y).
SKProof impl_of_seq(SKProof p);

// Right-nested conjunction of a list; T for empty, the element itself for
// singletons (mirrors the π-image of an area).
Formula conj_fold(const std::vector<Formula>& fs);
// fold(fs) ⊢ fs[i]
SKProof proj(const std::vector<Formula>& fs, std::size_t i);
// From proofs fold(from)⊢tᵢ for every element of `to`: fold(from) ⊢ fold(to).
SKProof conj_assemble(const std::vector<Formula>& from, const std::vector<Formula>& to,
                      std::vector<SKProof> parts);
// fold(from) ⊢ fold(to) where `to` is obtained from `from` by projections
// (a sub-multiset, in any order; `pick[j]` is the index in `from` used for
// to[j]).
SKProof conj_sub(const std::vector<Formula>& from, const std::vector<Formula>& to,
                 const std::vector<std::size_t>& pick);

} // namespace pmk::sk_build
