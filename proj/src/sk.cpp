#include "pmk/sk.hpp"

#include "pmk/graph.hpp" // AddressError for context paths
#include "pmk/sk_builders.hpp"

#include <array>
#include <functional>

namespace pmk {

namespace {
constexpr std::array<const char*, 14> kSkNames = {
    "Id", "Top", "D", "Em", "Gen", "BoxAnd", "Sigma",
    "NegL", "NegR", "Tr", "AndL1", "AndL2", "AndR", "Box",
};
}

const char* sk_rule_name(SKRule r) { return kSkNames[static_cast<std::size_t>(r)]; }

std::optional<SKRule> sk_rule_from_name(std::string_view s) {
    for (std::size_t i = 0; i < kSkNames.size(); ++i)
        if (s == kSkNames[i]) return static_cast<SKRule>(i);
    return std::nullopt;
}

Formula axiom_instance(AxiomSchema s, const Formula& x) {
    switch (s) {
    case AxiomSchema::D: return Formula::diamond(Formula::top());
    case AxiomSchema::T: return Formula::implies(Formula::box(x), x);
    case AxiomSchema::Four:
        return Formula::implies(Formula::box(x), Formula::box(Formula::box(x)));
    case AxiomSchema::B: return Formula::implies(x, Formula::box(Formula::diamond(x)));
    case AxiomSchema::Five:
        return Formula::implies(Formula::diamond(x), Formula::box(Formula::diamond(x)));
    }
    return Formula::top();
}

std::optional<Formula> match_axiom(AxiomSchema s, const Formula& f) {
    using K = FormulaKind;
    if (s == AxiomSchema::D) {
        if (f == Formula::diamond(Formula::top())) return Formula::top();
        return std::nullopt;
    }
    // All remaining schemas desugar to ~(lhs & ~rhs).
    if (f.kind() != K::Not || f.left().kind() != K::And) return std::nullopt;
    Formula lhs = f.left().left();
    Formula rhs_n = f.left().right();
    if (rhs_n.kind() != K::Not) return std::nullopt;
    Formula rhs = rhs_n.left();
    switch (s) {
    case AxiomSchema::T: // []x -> x
    case AxiomSchema::Four: // []x -> [][]x
        if (lhs.kind() == K::Box && f == axiom_instance(s, lhs.left())) return lhs.left();
        return std::nullopt;
    case AxiomSchema::B: // x -> []<>x
        if (f == axiom_instance(s, lhs)) return lhs;
        return std::nullopt;
    case AxiomSchema::Five: // <>x -> []<>x
        if (rhs.kind() == K::Box && rhs.left().kind() == K::Not &&
            rhs.left().left().kind() == K::Box && rhs.left().left().left().kind() == K::Not &&
            f == axiom_instance(s, rhs.left().left().left().left()))
            return rhs.left().left().left().left();
        return std::nullopt;
    default: return std::nullopt;
    }
}

bool SigmaSet::contains(const Formula& f) const {
    for (AxiomSchema s : schemas)
        if (match_axiom(s, f)) return true;
    for (const Formula& g : formulas)
        if (f == g) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Checking

namespace {

struct SkChecker {
    const SigmaSet& sigma;
    SkCheckResult result;
    std::vector<std::size_t> path;

    bool fail(const std::string& reason) {
        result.ok = false;
        result.node = path;
        result.reason = reason;
        return false;
    }

    bool arity(const SKProof& p, std::size_t n) {
        if (p.children.size() != n)
            return fail(std::string(sk_rule_name(p.rule)) + ": wrong number of premises");
        return true;
    }

    bool check(const SKProof& p) {
        using K = FormulaKind;
        const Formula& l = p.seq.left;
        const Formula& r = p.seq.right;
        switch (p.rule) {
        case SKRule::Id:
            if (!arity(p, 0)) return false;
            if (!(l == r)) return fail("Id: sides differ");
            return true;
        case SKRule::Top:
            if (!arity(p, 0)) return false;
            if (r.kind() != K::Top) return fail("Top: right side is not T");
            return true;
        case SKRule::D: {
            if (!arity(p, 0)) return false;
            // a & (b | c) |- (a & b) | (a & c)
            if (l.kind() != K::And) return fail("D: bad left shape");
            Formula a = l.left();
            Formula orbc = l.right();
            if (orbc.kind() != K::Not || orbc.left().kind() != K::And ||
                orbc.left().left().kind() != K::Not || orbc.left().right().kind() != K::Not)
                return fail("D: left disjunction shape");
            Formula b = orbc.left().left().left();
            Formula c = orbc.left().right().left();
            Formula want = Formula::disj(Formula::conj(a, b), Formula::conj(a, c));
            if (!(r == want)) return fail("D: right side mismatch");
            return true;
        }
        case SKRule::Em: {
            if (!arity(p, 0)) return false;
            if (l.kind() != K::Top) return fail("Em: left side is not T");
            if (r.kind() != K::Not || r.left().kind() != K::And)
                return fail("Em: bad right shape");
            Formula na = r.left().left();
            if (na.kind() != K::Not) return fail("Em: bad right shape");
            Formula a = na.left();
            if (!(r == Formula::disj(a, Formula::negate(a))))
                return fail("Em: right side is not a | ~a");
            return true;
        }
        case SKRule::Gen:
            if (!arity(p, 0)) return false;
            if (l.kind() != K::Top || !(r == Formula::box(Formula::top())))
                return fail("Gen: sequent is not T |- []T");
            return true;
        case SKRule::BoxAnd: {
            if (!arity(p, 0)) return false;
            if (l.kind() != K::And || l.left().kind() != K::Box || l.right().kind() != K::Box)
                return fail("BoxAnd: bad left shape");
            Formula want =
                Formula::box(Formula::conj(l.left().left(), l.right().left()));
            if (!(r == want)) return fail("BoxAnd: right side mismatch");
            return true;
        }
        case SKRule::Sigma:
            if (!arity(p, 0)) return false;
            if (l.kind() != K::Top) return fail("Sigma: left side is not T");
            if (!sigma.contains(r)) return fail("Sigma: formula not in sigma");
            return true;
        case SKRule::NegL: {
            if (!arity(p, 1)) return false;
            const Sequent& c = p.children[0].seq;
            if (c.left.kind() != K::Not) return fail("NegL: premise left is not a negation");
            if (!(l == Formula::negate(c.right)) || !(r == c.left.left()))
                return fail("NegL: conclusion mismatch");
            break;
        }
        case SKRule::NegR: {
            if (!arity(p, 1)) return false;
            const Sequent& c = p.children[0].seq;
            if (c.right.kind() != K::Not) return fail("NegR: premise right is not a negation");
            if (!(l == c.right.left()) || !(r == Formula::negate(c.left)))
                return fail("NegR: conclusion mismatch");
            break;
        }
        case SKRule::Tr: {
            if (!arity(p, 2)) return false;
            const Sequent& c1 = p.children[0].seq;
            const Sequent& c2 = p.children[1].seq;
            if (!(c1.right == c2.left)) return fail("Tr: middle formulas differ");
            if (!(l == c1.left) || !(r == c2.right)) return fail("Tr: conclusion mismatch");
            break;
        }
        case SKRule::AndL1:
        case SKRule::AndL2: {
            if (!arity(p, 1)) return false;
            const Sequent& c = p.children[0].seq;
            if (l.kind() != K::And) return fail("AndL: left side is not a conjunction");
            Formula used = p.rule == SKRule::AndL1 ? l.left() : l.right();
            if (!(used == c.left) || !(r == c.right)) return fail("AndL: conclusion mismatch");
            break;
        }
        case SKRule::AndR: {
            if (!arity(p, 2)) return false;
            const Sequent& c1 = p.children[0].seq;
            const Sequent& c2 = p.children[1].seq;
            if (!(c1.left == l) || !(c2.left == l)) return fail("AndR: premise left mismatch");
            if (!(r == Formula::conj(c1.right, c2.right)))
                return fail("AndR: conclusion mismatch");
            break;
        }
        case SKRule::Box: {
            if (!arity(p, 1)) return false;
            const Sequent& c = p.children[0].seq;
            if (!(l == Formula::box(c.left)) || !(r == Formula::box(c.right)))
                return fail("Box: conclusion mismatch");
            break;
        }
        }
        for (std::size_t i = 0; i < p.children.size(); ++i) {
            path.push_back(i);
            if (!check(p.children[i])) return false;
            path.pop_back();
        }
        return true;
    }
};

} // namespace

SkCheckResult check_sk(const SKProof& p, const SigmaSet& sigma) {
    SkChecker c{sigma, {}, {}};
    c.check(p);
    return c.result;
}

// ---------------------------------------------------------------------------
// Formula contexts and monotone replacement

Formula FormulaContext::fill(const Formula& x) const {
    std::function<Formula(const Formula&, std::size_t)> rec =
        [&](const Formula& f, std::size_t d) -> Formula {
        if (d == slot.size()) return x;
        int step = slot[d];
        switch (f.kind()) {
        case FormulaKind::Not:
            if (step != 0) throw AddressError("bad context path");
            return Formula::negate(rec(f.left(), d + 1));
        case FormulaKind::Box:
            if (step != 0) throw AddressError("bad context path");
            return Formula::box(rec(f.left(), d + 1));
        case FormulaKind::And:
            if (step == 0) return Formula::conj(rec(f.left(), d + 1), f.right());
            if (step == 1) return Formula::conj(f.left(), rec(f.right(), d + 1));
            throw AddressError("bad context path");
        default: throw AddressError("context path descends into a leaf");
        }
    };
    return rec(skeleton, 0);
}

bool FormulaContext::slot_positive() const {
    std::size_t negs = 0;
    Formula f = skeleton;
    for (std::size_t d = 0; d < slot.size(); ++d) {
        switch (f.kind()) {
        case FormulaKind::Not:
            ++negs;
            f = f.left();
            break;
        case FormulaKind::Box: f = f.left(); break;
        case FormulaKind::And: f = slot[d] == 0 ? f.left() : f.right(); break;
        default: throw AddressError("context path descends into a leaf");
        }
    }
    return negs % 2 == 0;
}

namespace {

// Builds the replacement proof by recursion over the context path.  The
// returned proof is fill(β)⊢fill(γ) when the remaining path crosses an
// even number of negations, and fill(γ)⊢fill(β) otherwise.
SKProof mono_rec(const Formula& f, const std::vector<int>& path, std::size_t d,
                 const Formula& beta, const Formula& gamma, const SKProof& sub) {
    if (d == path.size()) return sub;
    switch (f.kind()) {
    case FormulaKind::Not: {
        SKProof inner = mono_rec(f.left(), path, d + 1, beta, gamma, sub);
        return sk_build::neg_antitone(std::move(inner));
    }
    case FormulaKind::Box: {
        SKProof inner = mono_rec(f.left(), path, d + 1, beta, gamma, sub);
        return sk_build::box_rule(std::move(inner));
    }
    case FormulaKind::And: {
        bool in_left = path[d] == 0;
        SKProof inner =
            mono_rec(in_left ? f.left() : f.right(), path, d + 1, beta, gamma, sub);
        Formula fixed = in_left ? f.right() : f.left();
        SKProof proj_changed = in_left ? sk_build::and_l1(fixed, std::move(inner))
                                       : sk_build::and_l2(fixed, std::move(inner));
        SKProof proj_fixed = in_left
                                 ? sk_build::and_l2(proj_changed.seq.left.left(),
                                                    sk_build::id(fixed))
                                 : sk_build::and_l1(proj_changed.seq.left.right(),
                                                    sk_build::id(fixed));
        return in_left ? sk_build::and_r(std::move(proj_changed), std::move(proj_fixed))
                       : sk_build::and_r(std::move(proj_fixed), std::move(proj_changed));
    }
    default: throw AddressError("context path descends into a leaf");
    }
}

} // namespace

SKProof sk_mono_replace(const FormulaContext& context, const Formula& beta,
                        const Formula& gamma, const SKProof& subproof,
                        FormulaPolarity polarity) {
    bool pos = context.slot_positive();
    if ((polarity == FormulaPolarity::Positive) != pos)
        throw AddressError("declared polarity does not match the context slot");
    return mono_rec(context.skeleton, context.slot, 0, beta, gamma, subproof);
}

} // namespace pmk
