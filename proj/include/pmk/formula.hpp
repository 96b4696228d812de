// formula.hpp — modal formulas over {atoms, ⊤, ¬, ∧, □} with the usual
// defined connectives as constructor sugar.  Stored formulas contain core
// nodes only; sugar never persists.
//
// Text syntax: `T`, `~a`, `(a & b)`, `[]a`; sugar `<>a`, `(a -> b)`,
// `(a | b)`, `(a <-> b)`, `F`.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pmk {

enum class FormulaKind { Atom, Top, Not, And, Box };

class Formula {
  public:
    Formula(); // ⊤

    static Formula atom(std::string name);
    static Formula top();
    static Formula negate(Formula f);
    static Formula conj(Formula a, Formula b);
    static Formula box(Formula f);

    // Sugar.
    static Formula bottom() { return negate(top()); }
    static Formula diamond(Formula f) { return negate(box(negate(std::move(f)))); }
    static Formula implies(Formula a, Formula b) {
        return negate(conj(std::move(a), negate(std::move(b))));
    }
    static Formula disj(Formula a, Formula b) {
        return negate(conj(negate(std::move(a)), negate(std::move(b))));
    }
    static Formula iff(Formula a, Formula b) {
        Formula ab = implies(a, b);
        Formula ba = implies(std::move(b), std::move(a));
        return conj(std::move(ab), std::move(ba));
    }

    FormulaKind kind() const;
    const std::string& name() const;
    Formula left() const;   // Not/Box child, And left
    Formula right() const;  // And right

    std::string print() const;
    bool operator==(const Formula& o) const;
    bool operator!=(const Formula& o) const { return !(*this == o); }

    // Collects atom names, sorted and deduplicated.
    std::vector<std::string> atoms() const;

  private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

Formula parse_formula(std::string_view text);

struct Sequent {
    Formula left;
    Formula right;
    bool operator==(const Sequent& o) const { return left == o.left && right == o.right; }
    std::string print() const { return left.print() + " |- " + right.print(); }
};

} // namespace pmk
