#include "pmk/graph.hpp"

#include <algorithm>
#include <cctype>

namespace pmk {

// ---------------------------------------------------------------------------
// Item

Item Item::atom(std::string name) {
    if (name.empty() || !(name[0] >= 'a' && name[0] <= 'z'))
        throw SyntaxError("atom name must start with a lowercase letter: " + name, 0);
    for (char c : name)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            throw SyntaxError("illegal character in atom name: " + name, 0);
    Item it;
    it.kind_ = NodeKind::Atom;
    it.name_ = std::move(name);
    return it;
}

Item Item::cut(Graph area) {
    Item it;
    it.kind_ = NodeKind::ContinuousCut;
    it.enclosed_.push_back(std::move(area));
    return it;
}

Item Item::bcut(Graph area) {
    // Normality: the empty broken cut is the empty continuous cut.
    if (area.empty()) return cut(std::move(area));
    Item it;
    it.kind_ = NodeKind::BrokenCut;
    it.enclosed_.push_back(std::move(area));
    return it;
}

const Graph& Item::area() const {
    if (kind_ == NodeKind::Atom)
        throw AddressError("atom has no enclosed area");
    return enclosed_.front();
}

std::string Item::print() const {
    switch (kind_) {
    case NodeKind::Atom: return name_;
    case NodeKind::ContinuousCut: return "(" + enclosed_.front().print() + ")";
    case NodeKind::BrokenCut: return "{" + enclosed_.front().print() + "}";
    }
    return {};
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::vector<Item> items) : items_(std::move(items)) {
    std::stable_sort(items_.begin(), items_.end(),
                     [](const Item& a, const Item& b) { return a.print() < b.print(); });
}

Graph Graph::single(Item it) {
    std::vector<Item> v;
    v.push_back(std::move(it));
    return Graph{std::move(v)};
}

Graph Graph::juxtapose(const Graph& a, const Graph& b) {
    std::vector<Item> v = a.items_;
    v.insert(v.end(), b.items_.begin(), b.items_.end());
    return Graph{std::move(v)};
}

std::string Graph::print() const {
    std::string out;
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out += ' ';
        out += items_[i].print();
    }
    return out;
}

bool Graph::contains_broken_cut() const {
    for (const Item& it : items_) {
        if (it.kind() == NodeKind::BrokenCut) return true;
        if (it.is_cut() && it.area().contains_broken_cut()) return true;
    }
    return false;
}

std::string print(const Graph& g) { return g.print(); }

// Items are canonical by construction, so canonicalize is the identity on
// values built through the public constructors; re-sorting keeps it total
// for graphs assembled from moved parts.
Graph canonicalize(const Graph& g) { return Graph{g.items()}; }

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
            ++pos;
    }

    Graph parse_items(char closer) {
        std::vector<Item> items;
        for (;;) {
            skip_ws();
            if (pos >= text.size()) {
                if (closer != '\0')
                    throw SyntaxError("unbalanced delimiters: expected closing delimiter", pos);
                break;
            }
            char c = text[pos];
            if (c == ')' || c == '}') {
                if (c != closer)
                    throw SyntaxError(std::string("unbalanced delimiters: unexpected '") + c + "'",
                                      pos);
                break;
            }
            items.push_back(parse_item());
        }
        return Graph{std::move(items)};
    }

    Item parse_item() {
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Graph area = parse_items(')');
            ++pos; // consume ')'
            return Item::cut(std::move(area));
        }
        if (c == '{') {
            ++pos;
            Graph area = parse_items('}');
            ++pos; // consume '}'
            return Item::bcut(std::move(area));
        }
        if (c >= 'a' && c <= 'z') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            return Item::atom(std::string(text.substr(start, pos - start)));
        }
        throw SyntaxError(std::string("illegal character '") + c + "'", pos);
    }
};

} // namespace

Graph parse(std::string_view text) {
    Parser p{text};
    Graph g = p.parse_items('\0');
    return g;
}

// ---------------------------------------------------------------------------
// Addresses

namespace {

const Graph* walk_to_parent(const Graph& g, const Address& a) {
    // Returns the area containing the final path step; requires non-empty path.
    const Graph* cur = &g;
    for (std::size_t d = 0; d + 1 < a.path.size(); ++d) {
        std::size_t i = a.path[d];
        if (i >= cur->items().size())
            throw AddressError("address index out of range");
        const Item& it = cur->items()[i];
        if (!it.is_cut())
            throw AddressError("address descends into an atom");
        cur = &it.area();
    }
    if (a.path.back() >= cur->items().size())
        throw AddressError("address index out of range");
    return cur;
}

} // namespace

const Item& item_at(const Graph& g, const Address& a) {
    if (a.path.empty())
        throw AddressError("empty address denotes the root area, not an item");
    const Graph* parent = walk_to_parent(g, a);
    return parent->items()[a.path.back()];
}

Graph subgraph_at(const Graph& g, const Address& a) {
    if (a.path.empty()) {
        if (!a.into_area)
            throw AddressError("empty address denotes the root area, not an item");
        return g;
    }
    const Item& it = item_at(g, a);
    if (!a.into_area) return Graph::single(it);
    if (!it.is_cut())
        throw AddressError("area address ends on an atom");
    return it.area();
}

namespace {

Graph replace_rec(const Graph& g, const Address& a, std::size_t depth, const Graph& h) {
    if (depth == a.path.size()) {
        // Only reached for the root-area case.
        return h;
    }
    std::size_t i = a.path[depth];
    if (i >= g.items().size())
        throw AddressError("address index out of range");
    std::vector<Item> items = g.items();
    const Item& target = items[i];
    bool last = depth + 1 == a.path.size();
    if (last && !a.into_area) {
        // Replace the item itself; h's items are spliced into this area.
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(i));
        items.insert(items.end(), h.items().begin(), h.items().end());
        return Graph{std::move(items)};
    }
    if (!target.is_cut())
        throw AddressError("address descends into an atom");
    Graph inner = last ? h : replace_rec(target.area(), a, depth + 1, h);
    Item repl = target.kind() == NodeKind::ContinuousCut ? Item::cut(std::move(inner))
                                                         : Item::bcut(std::move(inner));
    items[i] = std::move(repl);
    return Graph{std::move(items)};
}

} // namespace

Graph replace_at(const Graph& g, const Address& a, const Graph& h) {
    if (a.path.empty()) {
        if (!a.into_area)
            throw AddressError("empty address denotes the root area, not an item");
        return h;
    }
    return replace_rec(g, a, 0, h);
}

Polarity polarity(const Graph& g, const Address& a) {
    // Validate the address and count cut items traversed by the path: every
    // descent step is a cut, plus the final item when the address denotes
    // its enclosed area.
    std::size_t cuts = 0;
    const Graph* cur = &g;
    for (std::size_t d = 0; d < a.path.size(); ++d) {
        std::size_t i = a.path[d];
        if (i >= cur->items().size())
            throw AddressError("address index out of range");
        const Item& it = cur->items()[i];
        bool last = d + 1 == a.path.size();
        if (!last || a.into_area) {
            if (!it.is_cut())
                throw AddressError("address descends into an atom");
            ++cuts;
            cur = &it.area();
        }
    }
    if (a.path.empty() && !a.into_area)
        throw AddressError("empty address denotes the root area, not an item");
    return cuts % 2 == 0 ? Polarity::Positive : Polarity::Negative;
}

CutKind classify_cut(const Graph& g, const Address& a) {
    if (a.into_area && !a.path.empty())
        throw AddressError("classification requires an item address");
    const Item& it = item_at(g, a);
    if (!it.is_cut())
        throw AddressError("classification requires a cut item");
    const Graph& area = it.area();
    bool outer_broken = it.kind() == NodeKind::BrokenCut;
    if (area.size() == 1 && area.items()[0].is_cut()) {
        bool inner_broken = area.items()[0].kind() == NodeKind::BrokenCut;
        if (!outer_broken && !inner_broken) return CutKind::DoubleContinuous;
        if (outer_broken && inner_broken) return CutKind::DoubleBroken;
        if (!outer_broken && inner_broken) return CutKind::Necessity;
        return CutKind::Possibility;
    }
    return outer_broken ? CutKind::Broken : CutKind::Continuous;
}

namespace {

bool prefix_of(const std::vector<std::size_t>& pre, const std::vector<std::size_t>& full) {
    if (pre.size() > full.size()) return false;
    return std::equal(pre.begin(), pre.end(), full.begin());
}

} // namespace

bool is_broken_cut_free(const Graph& g, const Address& context_item, const Address& slot) {
    if (context_item.path.empty() || context_item.into_area)
        throw AddressError("context must be an item address");
    if (!slot.into_area)
        throw AddressError("slot must be an area address");
    // Slot equal to the item's own enclosing area: the whole item is excised.
    std::vector<std::size_t> parent(context_item.path.begin(), context_item.path.end() - 1);
    if (slot.path == parent) {
        subgraph_at(g, slot); // validate
        return true;
    }
    if (!prefix_of(context_item.path, slot.path))
        throw AddressError("slot does not lie inside the context item");
    // Walk the item manually: excising the slot's contents must not let
    // Normality erase an emptied broken-cut boundary, so the boundary on
    // the path still counts, as do all off-path subtrees.
    std::vector<std::size_t> rel(slot.path.begin() +
                                     static_cast<std::ptrdiff_t>(context_item.path.size()),
                                 slot.path.end());
    const Item* cur = &item_at(g, context_item);
    for (std::size_t d = 0;; ++d) {
        if (cur->kind() == NodeKind::BrokenCut) return false;
        if (!cur->is_cut()) throw AddressError("slot path descends into an atom");
        if (d == rel.size()) return true; // slot contents excised
        const Graph& area = cur->area();
        if (rel[d] >= area.size()) throw AddressError("slot index out of range");
        for (std::size_t i = 0; i < area.size(); ++i) {
            if (i == rel[d]) continue;
            const Item& off = area.items()[i];
            if (off.kind() == NodeKind::BrokenCut ||
                (off.is_cut() && off.area().contains_broken_cut()))
                return false;
        }
        cur = &area.items()[rel[d]];
    }
}

} // namespace pmk
