#include "pmk/formula.hpp"

#include "pmk/graph.hpp" // SyntaxError

#include <algorithm>
#include <cctype>
#include <functional>

namespace pmk {

struct Formula::Node {
    FormulaKind kind;
    std::string name;
    std::shared_ptr<const Node> a, b;

    static std::shared_ptr<const Node> make(FormulaKind k) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        return n;
    }
};

Formula::Formula() : node_(nullptr) { *this = top(); }

Formula Formula::atom(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Atom;
    n->name = std::move(name);
    return Formula(n);
}

Formula Formula::top() {
    static const std::shared_ptr<const Node> t = Node::make(FormulaKind::Top);
    return Formula(t);
}

Formula Formula::negate(Formula f) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Not;
    n->a = std::move(f.node_);
    return Formula(n);
}

Formula Formula::conj(Formula a, Formula b) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::And;
    n->a = std::move(a.node_);
    n->b = std::move(b.node_);
    return Formula(n);
}

Formula Formula::box(Formula f) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Box;
    n->a = std::move(f.node_);
    return Formula(n);
}

FormulaKind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
Formula Formula::left() const { return Formula(node_->a); }
Formula Formula::right() const { return Formula(node_->b); }

std::string Formula::print() const {
    switch (kind()) {
    case FormulaKind::Atom: return name();
    case FormulaKind::Top: return "T";
    case FormulaKind::Not: return "~" + left().print();
    case FormulaKind::And: return "(" + left().print() + " & " + right().print() + ")";
    case FormulaKind::Box: return "[]" + left().print();
    }
    return {};
}

bool Formula::operator==(const Formula& o) const {
    if (node_ == o.node_) return true;
    if (kind() != o.kind()) return false;
    switch (kind()) {
    case FormulaKind::Atom: return name() == o.name();
    case FormulaKind::Top: return true;
    case FormulaKind::Not:
    case FormulaKind::Box: return left() == o.left();
    case FormulaKind::And: return left() == o.left() && right() == o.right();
    }
    return false;
}

std::vector<std::string> Formula::atoms() const {
    std::vector<std::string> out;
    std::function<void(const Formula&)> walk = [&](const Formula& f) {
        switch (f.kind()) {
        case FormulaKind::Atom: out.push_back(f.name()); break;
        case FormulaKind::Top: break;
        case FormulaKind::Not:
        case FormulaKind::Box: walk(f.left()); break;
        case FormulaKind::And:
            walk(f.left());
            walk(f.right());
            break;
        }
    };
    walk(*this);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct FParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(std::string_view tok) {
        skip_ws();
        if (text.substr(pos, tok.size()) == tok) {
            pos += tok.size();
            return true;
        }
        return false;
    }

    Formula parse_unary() {
        skip_ws();
        if (pos >= text.size()) throw SyntaxError("unexpected end of formula", pos);
        if (eat("~")) return Formula::negate(parse_unary());
        if (eat("[]")) return Formula::box(parse_unary());
        if (eat("<>")) return Formula::diamond(parse_unary());
        char c = text[pos];
        if (c == 'T' ) { ++pos; return Formula::top(); }
        if (c == 'F' ) { ++pos; return Formula::bottom(); }
        if (c == '(') {
            ++pos;
            Formula a = parse_unary();
            skip_ws();
            Formula out = a;
            if (eat("&")) out = Formula::conj(a, parse_unary());
            else if (eat("->")) out = Formula::implies(a, parse_unary());
            else if (eat("|")) out = Formula::disj(a, parse_unary());
            else if (eat("<->")) out = Formula::iff(a, parse_unary());
            skip_ws();
            if (pos >= text.size() || text[pos] != ')')
                throw SyntaxError("expected ')'", pos);
            ++pos;
            return out;
        }
        if (c >= 'a' && c <= 'z') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            return Formula::atom(std::string(text.substr(start, pos - start)));
        }
        throw SyntaxError(std::string("unexpected character '") + c + "' in formula", pos);
    }
};

} // namespace

Formula parse_formula(std::string_view text) {
    FParser p{text};
    Formula f = p.parse_unary();
    p.skip_ws();
    if (p.pos != text.size())
        throw SyntaxError("trailing input after formula", p.pos);
    return f;
}

} // namespace pmk
