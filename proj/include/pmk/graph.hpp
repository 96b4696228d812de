// graph.hpp — modal graphs: atoms, continuous cuts, broken cuts.
//
// A Graph is an area: a finite multiset of items.  An item is an atom,
// a continuous cut around an area, or a broken cut around an area.  The
// empty root area is the sheet of assertion (SA).
//
// Canonical form invariants (maintained by every constructor here):
//   * children of every area are sorted by byte-wise comparison of their
//     canonical printed strings (juxtaposition is the multiset itself;
//     there is no juxtaposition node),
//   * no broken cut has an empty area: {} is rewritten to () everywhere
//     (the Normality identification),
//   * atom names match [a-z][a-zA-Z0-9_]*.
//
// Concrete text syntax:  ( ) continuous cut, { } broken cut, whitespace
// juxtaposition, empty string = SA.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pmk {

class Graph;

enum class NodeKind { Atom, ContinuousCut, BrokenCut };

enum class CutKind {
    Continuous,
    Broken,
    DoubleContinuous,
    DoubleBroken,
    Necessity,   // continuous cut enclosing exactly one broken cut
    Possibility, // broken cut enclosing exactly one continuous cut
};

enum class Polarity { Positive, Negative };

inline Polarity flip(Polarity p) {
    return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

struct SyntaxError : std::runtime_error {
    std::size_t offset;
    SyntaxError(std::string msg, std::size_t off)
        : std::runtime_error(std::move(msg)), offset(off) {}
};

struct AddressError : std::runtime_error {
    explicit AddressError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// One node of a graph: an atom or a cut with its enclosed area.
class Item {
  public:
    static Item atom(std::string name);
    static Item cut(Graph area);   // continuous
    static Item bcut(Graph area);  // broken (normalized to cut if empty)

    NodeKind kind() const { return kind_; }
    bool is_atom() const { return kind_ == NodeKind::Atom; }
    bool is_cut() const { return kind_ != NodeKind::Atom; }
    const std::string& name() const { return name_; }
    const Graph& area() const;

    std::string print() const;
    bool operator==(const Item& o) const { return print() == o.print(); }
    bool operator<(const Item& o) const { return print() < o.print(); }

  private:
    Item() = default;
    NodeKind kind_ = NodeKind::Atom;
    std::string name_;                  // Atom only
    std::vector<Graph> enclosed_;       // cuts only; 0 or 1 element
};

// An address into a graph.  `path` selects successive child indices in
// canonical order; every non-final step must land on a cut item.  The
// address denotes either the final item itself or the area enclosed by
// it (the root area for the empty path).
struct Address {
    std::vector<std::size_t> path;
    bool into_area = true;

    static Address root() { return Address{{}, true}; }
    static Address area(std::vector<std::size_t> p) { return Address{std::move(p), true}; }
    static Address item(std::vector<std::size_t> p) { return Address{std::move(p), false}; }

    Address child_item(std::size_t i) const {
        Address a{path, false};
        a.path.push_back(i);
        return a;
    }
    Address child_area(std::size_t i) const {
        Address a{path, true};
        a.path.push_back(i);
        return a;
    }
    bool operator==(const Address& o) const {
        return path == o.path && into_area == o.into_area;
    }
};

// A graph, i.e. a canonical area.
class Graph {
  public:
    Graph() = default;                       // SA
    explicit Graph(std::vector<Item> items); // canonicalizes

    static Graph sa() { return Graph{}; }
    static Graph atom(std::string name) { return single(Item::atom(std::move(name))); }
    static Graph cut(const Graph& g) { return single(Item::cut(g)); }
    static Graph bcut(const Graph& g) { return single(Item::bcut(g)); }
    static Graph ncut(const Graph& g) { return cut(bcut(g)); }  // necessity
    static Graph pcut(const Graph& g) { return bcut(cut(g)); }  // possibility
    static Graph single(Item it);

    // Shorthand constructors; these expand to their cut definitions and
    // never introduce node kinds of their own.
    static Graph implies(const Graph& g, const Graph& h) { return cut(juxtapose(g, cut(h))); }
    static Graph gor(const Graph& g, const Graph& h) { return cut(juxtapose(cut(g), cut(h))); }
    static Graph iff(const Graph& g, const Graph& h) {
        return juxtapose(implies(g, h), implies(h, g));
    }
    static Graph juxtapose(const Graph& a, const Graph& b);

    const std::vector<Item>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    bool is_sa() const { return items_.empty(); }

    std::string print() const;
    bool operator==(const Graph& o) const { return print() == o.print(); }
    bool operator!=(const Graph& o) const { return !(*this == o); }
    bool operator<(const Graph& o) const { return print() < o.print(); }

    bool contains_broken_cut() const;

  private:
    std::vector<Item> items_;
};

Graph parse(std::string_view text);
std::string print(const Graph& g);
Graph canonicalize(const Graph& g);

// Address resolution.  `item_at` requires an item address (non-empty,
// final step on any node); `area_at` accepts an area address.
const Item& item_at(const Graph& g, const Address& a);
// Result of subgraph_at: an item address yields a singleton graph, an
// area address yields the area's contents as a graph.
Graph subgraph_at(const Graph& g, const Address& a);
// Replaces the denoted item (spliced — h's items take its place) or the
// denoted area's whole contents by h; result is canonical.
Graph replace_at(const Graph& g, const Address& a, const Graph& h);

Polarity polarity(const Graph& g, const Address& a);
CutKind classify_cut(const Graph& g, const Address& a);

// True iff the item at `context_item`, with the contents of the area at
// `slot` excised, contains no broken cut anywhere.  `slot` must lie
// inside the item at `context_item`, or be that item's own enclosing
// area (in which case the item itself is excised and the context is
// trivially broken-cut-free).
bool is_broken_cut_free(const Graph& g, const Address& context_item, const Address& slot);

} // namespace pmk
