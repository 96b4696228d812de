#include "pmk/gen.hpp"
#include "pmk/sk.hpp"
#include "pmk/sk_builders.hpp"
#include "pmk/oracle.hpp"

#include <doctest.h>

using namespace pmk;
namespace sb = sk_build;

TEST_CASE("formula parsing and sugar elimination") {
    CHECK(parse_formula("T").print() == "T");
    CHECK(parse_formula("~p").print() == "~p");
    CHECK(parse_formula("(p & q)").print() == "(p & q)");
    CHECK(parse_formula("[]p").print() == "[]p");
    CHECK(parse_formula("<>p").print() == "~[]~p");
    CHECK(parse_formula("(p -> q)").print() == "~(p & ~q)");
    CHECK(parse_formula("(p | q)").print() == "~(~p & ~q)");
    CHECK(parse_formula("F").print() == "~T");
    CHECK(parse_formula("(p <-> q)") ==
          Formula::conj(parse_formula("(p -> q)"), parse_formula("(q -> p)")));
}

TEST_CASE("parse of print is the identity") {
    std::mt19937_64 rng(0xAB);
    for (int i = 0; i < 500; ++i) {
        Formula f = random_formula(rng, {});
        CHECK(parse_formula(f.print()) == f);
    }
}

TEST_CASE("check_sk accepts the axioms") {
    Formula p = Formula::atom("p"), q = Formula::atom("q");
    CHECK(check_sk(SKProof{SKRule::Id, {p, p}, {}}).ok);
    CHECK(check_sk(SKProof{SKRule::Top, {p, Formula::top()}, {}}).ok);
    CHECK(check_sk(sb::em(p)).ok);
    CHECK(check_sk(SKProof{SKRule::Gen, {Formula::top(), Formula::box(Formula::top())}, {}})
              .ok);
    Formula ba = Formula::conj(Formula::box(p), Formula::box(q));
    CHECK(check_sk(SKProof{SKRule::BoxAnd, {ba, Formula::box(Formula::conj(p, q))}, {}}).ok);
    Formula dl = Formula::conj(p, Formula::disj(q, Formula::top()));
    Formula dr = Formula::disj(Formula::conj(p, q), Formula::conj(p, Formula::top()));
    CHECK(check_sk(SKProof{SKRule::D, {dl, dr}, {}}).ok);
}

TEST_CASE("check_sk rejects bad instances") {
    Formula p = Formula::atom("p"), q = Formula::atom("q");
    CHECK_FALSE(check_sk(SKProof{SKRule::Id, {p, q}, {}}).ok);
    SKProof bad{SKRule::Tr,
                {p, Formula::atom("s")},
                {SKProof{SKRule::Id, {p, q}, {}},
                 SKProof{SKRule::Id, {Formula::atom("r"), Formula::atom("s")}, {}}}};
    auto r = check_sk(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.reason.find("middle") != std::string::npos);
    SKProof box{SKRule::Box,
                {Formula::box(p), Formula::box(q)},
                {SKProof{SKRule::Id, {p, p}, {}}}};
    CHECK_FALSE(check_sk(box).ok);
}

TEST_CASE("sigma axioms match schemata") {
    Formula p = Formula::atom("p");
    SigmaSet t = SigmaSet::of(AxiomSchema::T);
    CHECK(t.contains(axiom_instance(AxiomSchema::T, p)));
    CHECK(t.contains(axiom_instance(AxiomSchema::T, Formula::box(p))));
    CHECK_FALSE(t.contains(axiom_instance(AxiomSchema::Four, p)));
    SKProof leaf{SKRule::Sigma, {Formula::top(), axiom_instance(AxiomSchema::T, p)}, {}};
    CHECK(check_sk(leaf, t).ok);
    CHECK_FALSE(check_sk(leaf, SigmaSet::none()).ok);
    for (AxiomSchema s : {AxiomSchema::D, AxiomSchema::B, AxiomSchema::Five}) {
        CHECK(match_axiom(s, axiom_instance(s, p)).has_value());
    }
}

TEST_CASE("builders produce checkable proofs") {
    Formula p = Formula::atom("p"), q = Formula::atom("q");
    CHECK(check_sk(sb::dneg_intro(p)).ok);
    CHECK(check_sk(sb::dneg_elim(p)).ok);
    CHECK(check_sk(sb::neg_antitone(sb::id(p))).ok);
    CHECK(check_sk(sb::diamond_mono(SKProof{SKRule::Top, {p, Formula::top()}, {}})).ok);
    CHECK(check_sk(sb::noncontradiction(p)).ok);
    CHECK(check_sk(sb::exfalso(p, q)).ok);
    CHECK(check_sk(sb::impl_of_seq(sb::id(p))).ok);
    SKProof valid = sb::impl_of_seq(sb::id(p));
    CHECK(check_sk(sb::seq_of_valid_impl(p, p, std::move(valid))).ok);
    std::vector<Formula> fs{p, q, p};
    for (std::size_t i = 0; i < fs.size(); ++i) CHECK(check_sk(sb::proj(fs, i)).ok);
    CHECK(check_sk(sb::conj_sub(fs, {q, p}, {1, 0})).ok);
}

TEST_CASE("monotone replacement through each connective") {
    Formula p = Formula::atom("p");
    SKProof sub{SKRule::Top, {p, Formula::top()}, {}}; // p ⊢ T

    SUBCASE("identity context") {
        FormulaContext ctx{p, {}};
        SKProof out = sk_mono_replace(ctx, p, Formula::top(), sub, FormulaPolarity::Positive);
        CHECK(check_sk(out).ok);
        CHECK(out.seq == Sequent{p, Formula::top()});
    }
    SUBCASE("negation flips") {
        FormulaContext ctx{Formula::negate(p), {0}};
        SKProof out = sk_mono_replace(ctx, p, Formula::top(), sub, FormulaPolarity::Negative);
        CHECK(check_sk(out).ok);
        CHECK(out.seq ==
              Sequent{Formula::negate(Formula::top()), Formula::negate(p)});
    }
    SUBCASE("box preserves") {
        FormulaContext ctx{Formula::box(p), {0}};
        SKProof out = sk_mono_replace(ctx, p, Formula::top(), sub, FormulaPolarity::Positive);
        CHECK(check_sk(out).ok);
        CHECK(out.seq == Sequent{Formula::box(p), Formula::box(Formula::top())});
    }
    SUBCASE("conjunction keeps the sibling") {
        Formula q = Formula::atom("q");
        FormulaContext ctx{Formula::conj(p, q), {0}};
        SKProof out = sk_mono_replace(ctx, p, Formula::top(), sub, FormulaPolarity::Positive);
        CHECK(check_sk(out).ok);
        CHECK(out.seq == Sequent{Formula::conj(p, q), Formula::conj(Formula::top(), q)});
    }
    SUBCASE("diamond-shaped context is positive") {
        Formula ctxf = Formula::diamond(p);
        FormulaContext ctx{ctxf, {0, 0, 0}};
        CHECK(ctx.slot_positive());
        SKProof out = sk_mono_replace(ctx, p, Formula::top(), sub, FormulaPolarity::Positive);
        CHECK(check_sk(out).ok);
    }
    SUBCASE("random contexts") {
        std::mt19937_64 rng(99);
        for (int i = 0; i < 100; ++i) {
            Formula f = random_formula(rng, {});
            std::vector<int> path;
            Formula cur = f;
            while (true) {
                int choices = cur.kind() == FormulaKind::And      ? 2
                              : cur.kind() == FormulaKind::Not ||
                                      cur.kind() == FormulaKind::Box
                                  ? 1
                                  : 0;
                if (!choices || (rng() & 3) == 0) break;
                int step = choices == 2 ? static_cast<int>(rng() & 1) : 0;
                path.push_back(step);
                cur = step == 0 ? cur.left() : cur.right();
            }
            FormulaContext ctx{f, path};
            bool pos = ctx.slot_positive();
            SKProof s2{SKRule::Top, {cur, Formula::top()}, {}};
            SKProof out = sk_mono_replace(ctx, cur, Formula::top(), s2,
                                          pos ? FormulaPolarity::Positive
                                              : FormulaPolarity::Negative);
            auto res = check_sk(out);
            CHECK(res.ok);
            Formula filled = ctx.fill(Formula::top());
            if (pos) CHECK(out.seq == Sequent{f, filled});
            else CHECK(out.seq == Sequent{filled, f});
        }
    }
}

TEST_CASE("checked SK sequents are frame-valid") {
    // Builder-composed random proofs, validated against the oracle.
    std::mt19937_64 rng(0xF1);
    GenConfig cfg;
    cfg.max_depth = 2;
    for (int i = 0; i < 60; ++i) {
        Formula a = random_formula(rng, cfg);
        Formula b = random_formula(rng, cfg);
        std::vector<SKProof> proofs;
        proofs.push_back(sb::dneg_intro(a));
        proofs.push_back(sb::neg_antitone(sb::and_l1(b, sb::id(a))));
        proofs.push_back(sb::diamond_mono(sb::ax_top(a)));
        proofs.push_back(sb::noncontradiction(a));
        proofs.push_back(sb::exfalso(a, b));
        proofs.push_back(sb::impl_of_seq(sb::and_l2(b, sb::id(a))));
        for (const SKProof& p : proofs) {
            REQUIRE(check_sk(p).ok);
            KripkeFrame f = random_frame(static_cast<int>(1 + (rng() % 3)), FrameClass{}, rng);
            OracleLimits lim;
            lim.max_atoms = 4;
            std::vector<std::string> atoms =
                Formula::conj(p.seq.left, p.seq.right).atoms();
            if (atoms.size() > lim.max_atoms) continue;
            CHECK(valid(p.seq, f, lim));
        }
    }
}
