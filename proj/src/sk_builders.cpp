#include "pmk/sk_builders.hpp"

namespace pmk::sk_build {

SKProof id(const Formula& a) { return SKProof{SKRule::Id, {a, a}, {}}; }

SKProof ax_top(const Formula& a) { return SKProof{SKRule::Top, {a, Formula::top()}, {}}; }

SKProof em(const Formula& a) {
    return SKProof{SKRule::Em, {Formula::top(), Formula::disj(a, Formula::negate(a))}, {}};
}

SKProof tr(SKProof a, SKProof b) {
    Sequent s{a.seq.left, b.seq.right};
    SKProof out{SKRule::Tr, s, {}};
    out.children.push_back(std::move(a));
    out.children.push_back(std::move(b));
    return out;
}

SKProof and_l1(const Formula& extra, SKProof p) {
    Sequent s{Formula::conj(p.seq.left, extra), p.seq.right};
    SKProof out{SKRule::AndL1, s, {}};
    out.children.push_back(std::move(p));
    return out;
}

SKProof and_l2(const Formula& extra, SKProof p) {
    Sequent s{Formula::conj(extra, p.seq.left), p.seq.right};
    SKProof out{SKRule::AndL2, s, {}};
    out.children.push_back(std::move(p));
    return out;
}

SKProof and_r(SKProof a, SKProof b) {
    Sequent s{a.seq.left, Formula::conj(a.seq.right, b.seq.right)};
    SKProof out{SKRule::AndR, s, {}};
    out.children.push_back(std::move(a));
    out.children.push_back(std::move(b));
    return out;
}

SKProof box_rule(SKProof p) {
    Sequent s{Formula::box(p.seq.left), Formula::box(p.seq.right)};
    SKProof out{SKRule::Box, s, {}};
    out.children.push_back(std::move(p));
    return out;
}

SKProof dneg_intro(const Formula& a) {
    // ~a ⊢ ~a, then ¬R (α⊢~β ⟹ β⊢~α) with α = ~a, β = a.
    SKProof base = id(Formula::negate(a));
    SKProof out{SKRule::NegR, {a, Formula::negate(Formula::negate(a))}, {}};
    out.children.push_back(std::move(base));
    return out;
}

SKProof dneg_elim(const Formula& a) {
    // ~a ⊢ ~a, then ¬L (~α⊢β ⟹ ~β⊢α) with α = a, β = ~a.
    SKProof base = id(Formula::negate(a));
    SKProof out{SKRule::NegL, {Formula::negate(Formula::negate(a)), a}, {}};
    out.children.push_back(std::move(base));
    return out;
}

SKProof neg_antitone(SKProof u_v) {
    Formula u = u_v.seq.left, v = u_v.seq.right;
    SKProof step = tr(std::move(u_v), dneg_intro(v)); // u ⊢ ~~v
    SKProof out{SKRule::NegR, {Formula::negate(v), Formula::negate(u)}, {}};
    out.children.push_back(std::move(step));
    return out;
}

SKProof diamond_mono(SKProof p) {
    Formula a = p.seq.left, b = p.seq.right;
    SKProof boxed = box_rule(neg_antitone(std::move(p))); // []~b ⊢ []~a
    return neg_antitone(std::move(boxed));               // ~[]~a ⊢ ~[]~b
}

SKProof noncontradiction(const Formula& a) {
    Formula na = Formula::negate(a);
    // a & ~a ⊢ ~~a & ~~~a
    SKProof up = and_r(and_l1(na, dneg_intro(a)), and_l2(a, dneg_intro(na)));
    // ~(~~a & ~~~a) ⊢ ~(a & ~a)
    SKProof flipped = neg_antitone(std::move(up));
    // Em(~a): T ⊢ ~a | ~~a, whose core form is ~(~~a & ~~~a).
    return tr(em(na), std::move(flipped));
}

SKProof exfalso(const Formula& a, const Formula& target) {
    Formula contra = Formula::conj(a, Formula::negate(a));
    // ~target ⊢ ~(a & ~a)
    SKProof up = tr(ax_top(Formula::negate(target)), noncontradiction(a));
    // ¬R: contra ⊢ ~~target
    SKProof flip{SKRule::NegR, {contra, Formula::negate(Formula::negate(target))}, {}};
    flip.children.push_back(std::move(up));
    return tr(std::move(flip), dneg_elim(target));
}

SKProof or_elim(SKProof x_lr, SKProof l_t, SKProof r_t) {
    Formula t = l_t.seq.right;
    Formula nl = Formula::negate(l_t.seq.left);
    Formula nr = Formula::negate(r_t.seq.left);
    // ~t ⊢ ~l & ~r
    SKProof nt_both = and_r(neg_antitone(std::move(l_t)), neg_antitone(std::move(r_t)));
    // ~(~l & ~r) ⊢ ~~t
    SKProof flipped = neg_antitone(std::move(nt_both));
    return tr(tr(std::move(x_lr), std::move(flipped)), dneg_elim(t));
}

SKProof seq_of_valid_impl(const Formula& x, const Formula& y, SKProof valid) {
    Formula ny = Formula::negate(y);
    Formula xny = Formula::conj(x, ny);
    // x ⊢ x & (y | ~y)
    SKProof split = and_r(id(x), tr(ax_top(x), em(y)));
    // D axiom: x & (y | ~y) ⊢ (x & y) | (x & ~y)
    Formula dl = Formula::conj(x, Formula::disj(y, ny));
    Formula dr = Formula::disj(Formula::conj(x, y), xny);
    SKProof dist{SKRule::D, {dl, dr}, {}};
    // x & y ⊢ y
    SKProof left_case = and_l2(x, id(y));
    // x & ~y ⊢ (x & ~y) & ~(x & ~y) ⊢ y
    SKProof right_case =
        tr(and_r(id(xny), tr(ax_top(xny), std::move(valid))), exfalso(xny, y));
    return or_elim(tr(std::move(split), std::move(dist)), std::move(left_case),
                   std::move(right_case));
}

SKProof impl_of_seq(SKProof p) {
    Formula x = p.seq.left, y = p.seq.right;
    Formula ny = Formula::negate(y);
    Formula xny = Formula::conj(x, ny);
    // x & ~y ⊢ y & ~y
    SKProof contra = and_r(and_l1(ny, std::move(p)), and_l2(x, id(ny)));
    // y & ~y ⊢ ~T, so x & ~y ⊢ ~T
    SKProof to_bot = tr(std::move(contra), exfalso(y, Formula::negate(Formula::top())));
    // ¬R with α = x & ~y, β = T.
    SKProof out{SKRule::NegR, {Formula::top(), Formula::negate(xny)}, {}};
    out.children.push_back(std::move(to_bot));
    return out;
}

Formula conj_fold(const std::vector<Formula>& fs) {
    if (fs.empty()) return Formula::top();
    Formula out = fs.back();
    for (std::size_t i = fs.size() - 1; i-- > 0;) out = Formula::conj(fs[i], out);
    return out;
}

SKProof proj(const std::vector<Formula>& fs, std::size_t i) {
    // fold(fs) = fs[0] & (fs[1] & (... )), peel with AndL from the outside.
    SKProof p = id(fs[i]);
    if (fs.size() == 1) return p;
    // Wrap from the innermost level containing fs[i] outward.
    if (i + 1 < fs.size()) {
        std::vector<Formula> rest(fs.begin() + static_cast<std::ptrdiff_t>(i) + 1, fs.end());
        p = and_l1(conj_fold(rest), std::move(p));
    }
    for (std::size_t k = i; k-- > 0;)
        p = and_l2(fs[k], std::move(p));
    return p;
}

SKProof conj_assemble(const std::vector<Formula>& from, const std::vector<Formula>& to,
                      std::vector<SKProof> parts) {
    Formula src = conj_fold(from);
    if (to.empty()) return ax_top(src);
    SKProof out = std::move(parts.back());
    for (std::size_t i = parts.size() - 1; i-- > 0;)
        out = and_r(std::move(parts[i]), std::move(out));
    return out;
}

SKProof conj_sub(const std::vector<Formula>& from, const std::vector<Formula>& to,
                 const std::vector<std::size_t>& pick) {
    std::vector<SKProof> parts;
    for (std::size_t j = 0; j < to.size(); ++j) parts.push_back(proj(from, pick[j]));
    return conj_assemble(from, to, std::move(parts));
}

} // namespace pmk::sk_build
