#include "pmk/rules.hpp"

#include <algorithm>
#include <array>

namespace pmk {

namespace {

constexpr std::array<const char*, 20> kRuleNames = {
    "DEL", "INS", "DC1", "DC2", "IT", "DEIT", "K1", "K2", "DMN", "JUX",
    "D+", "D-", "T+", "T-", "4+", "4-", "B+", "B-", "5+", "5-",
};

constexpr std::array<const char*, 15> kSystemNames = {
    "K", "KD", "KT", "K4", "K5", "KB", "KDB", "KB4", "KD4", "KD5", "KB5",
    "K45", "KTB", "S4", "S5",
};

} // namespace

const char* rule_name(RuleName r) { return kRuleNames[static_cast<std::size_t>(r)]; }

std::optional<RuleName> rule_from_name(std::string_view s) {
    for (std::size_t i = 0; i < kRuleNames.size(); ++i)
        if (s == kRuleNames[i]) return static_cast<RuleName>(i);
    return std::nullopt;
}

const char* rule_error_name(RuleErrorKind k) {
    switch (k) {
    case RuleErrorKind::BadAddress: return "bad address";
    case RuleErrorKind::PolarityViolation: return "polarity violation";
    case RuleErrorKind::KindMismatch: return "kind mismatch";
    case RuleErrorKind::BrokenCutFreeViolation: return "broken-cut-free violation";
    case RuleErrorKind::BadIndices: return "bad indices";
    case RuleErrorKind::BadPartition: return "bad partition";
    case RuleErrorKind::BadPayload: return "bad payload";
    case RuleErrorKind::NotInSystem: return "rule not in system";
    }
    return "unknown";
}

const char* system_name(SystemId s) { return kSystemNames[static_cast<std::size_t>(s)]; }

std::optional<SystemId> system_from_name(std::string_view s) {
    for (std::size_t i = 0; i < kSystemNames.size(); ++i)
        if (s == kSystemNames[i]) return static_cast<SystemId>(i);
    return std::nullopt;
}

namespace {

constexpr RuleSet kAlpha = rule_bit(RuleName::DEL) | rule_bit(RuleName::INS) |
                           rule_bit(RuleName::DC1) | rule_bit(RuleName::DC2) |
                           rule_bit(RuleName::IT) | rule_bit(RuleName::DEIT) |
                           rule_bit(RuleName::K1) | rule_bit(RuleName::K2) |
                           rule_bit(RuleName::DMN) | rule_bit(RuleName::JUX);

constexpr RuleSet kD = rule_bit(RuleName::Dpos) | rule_bit(RuleName::Dneg);
constexpr RuleSet kT = rule_bit(RuleName::Tpos) | rule_bit(RuleName::Tneg);
constexpr RuleSet k4 = rule_bit(RuleName::FourPos) | rule_bit(RuleName::FourNeg);
constexpr RuleSet kB = rule_bit(RuleName::Bpos) | rule_bit(RuleName::Bneg);
constexpr RuleSet k5 = rule_bit(RuleName::FivePos) | rule_bit(RuleName::FiveNeg);

} // namespace

RuleSet rules_of(SystemId s) {
    switch (s) {
    case SystemId::K: return kAlpha;
    case SystemId::KD: return kAlpha | kD;
    case SystemId::KT: return kAlpha | kT;
    case SystemId::K4: return kAlpha | k4;
    case SystemId::K5: return kAlpha | k5;
    case SystemId::KB: return kAlpha | kB;
    case SystemId::KDB: return kAlpha | kD | kB;
    case SystemId::KB4: return kAlpha | kB | k4;
    case SystemId::KD4: return kAlpha | kD | k4;
    case SystemId::KD5: return kAlpha | kD | k5;
    case SystemId::KB5: return kAlpha | kB | k5;
    case SystemId::K45: return kAlpha | k4 | k5;
    case SystemId::KTB: return kAlpha | kT | kB;
    case SystemId::S4: return kAlpha | kT | k4;
    case SystemId::S5: return kAlpha | kT | k5;
    }
    return kAlpha;
}

FrameClass frame_class_of(SystemId s) {
    RuleSet r = rules_of(s);
    FrameClass c;
    c.serial = has_rule(r, RuleName::Dpos);
    c.reflexive = has_rule(r, RuleName::Tpos);
    c.transitive = has_rule(r, RuleName::FourPos);
    c.symmetric = has_rule(r, RuleName::Bpos);
    c.euclidean = has_rule(r, RuleName::FivePos);
    return c;
}

// ---------------------------------------------------------------------------
// Pattern matching on cut items.  Primitive patterns accept any cut of the
// right boundary; compound patterns require the exact two-cut shape.  The
// Normality identification makes "()" stand in for the (unrepresentable)
// empty broken cut, so "(())" matches the necessity cut of SA and "{()}"
// matches the double broken cut of SA.

namespace {

bool is_empty_ccut(const Item& it) {
    return it.kind() == NodeKind::ContinuousCut && it.area().empty();
}

// Matches `it` against a compound pattern with the given boundary kinds;
// on success stores the innermost content area in `content`.
bool match_compound(const Item& it, NodeKind outer, NodeKind inner, Graph& content) {
    if (it.kind() != outer) return false;
    const Graph& a = it.area();
    if (a.size() != 1) return false;
    const Item& in = a.items()[0];
    if (in.kind() == inner) {
        content = in.area();
        return true;
    }
    // Normality: an empty "()" doubles as the empty broken cut.
    if (inner == NodeKind::BrokenCut && is_empty_ccut(in)) {
        content = Graph::sa();
        return true;
    }
    return false;
}

bool match_necessity(const Item& it, Graph& content) {
    return match_compound(it, NodeKind::ContinuousCut, NodeKind::BrokenCut, content);
}
bool match_possibility(const Item& it, Graph& content) {
    return match_compound(it, NodeKind::BrokenCut, NodeKind::ContinuousCut, content);
}
bool match_double_broken(const Item& it, Graph& content) {
    return match_compound(it, NodeKind::BrokenCut, NodeKind::BrokenCut, content);
}
bool match_double_continuous(const Item& it, Graph& content) {
    return match_compound(it, NodeKind::ContinuousCut, NodeKind::ContinuousCut, content);
}

struct AreaView {
    Graph contents;
    Polarity pol;
};

AreaView resolve_area(const Graph& g, const Address& a) {
    if (!a.into_area)
        throw RuleError(RuleErrorKind::BadAddress, "rule area must be an area address");
    try {
        return AreaView{subgraph_at(g, a), polarity(g, a)};
    } catch (const AddressError& e) {
        throw RuleError(RuleErrorKind::BadAddress, e.what());
    }
}

void check_indices(const std::vector<std::size_t>& idx, std::size_t n) {
    for (std::size_t i : idx)
        if (i >= n) throw RuleError(RuleErrorKind::BadIndices, "index out of range");
    for (std::size_t k = 1; k < idx.size(); ++k)
        if (idx[k] <= idx[k - 1])
            throw RuleError(RuleErrorKind::BadIndices, "indices must be strictly increasing");
}

std::vector<Item> take(const std::vector<Item>& items, const std::vector<std::size_t>& idx) {
    std::vector<Item> out;
    for (std::size_t i : idx) out.push_back(items[i]);
    return out;
}

std::vector<Item> drop(const std::vector<Item>& items, const std::vector<std::size_t>& idx) {
    std::vector<Item> out;
    for (std::size_t i = 0; i < items.size(); ++i)
        if (!std::binary_search(idx.begin(), idx.end(), i)) out.push_back(items[i]);
    return out;
}

const Item& single_index(const AreaView& av, const RuleInstance& r) {
    if (r.indices.size() != 1)
        throw RuleError(RuleErrorKind::BadIndices, "rule selects exactly one item");
    check_indices(r.indices, av.contents.size());
    return av.contents.items()[r.indices[0]];
}

void require_polarity(const AreaView& av, Polarity want, const char* rule) {
    if (av.pol != want)
        throw RuleError(RuleErrorKind::PolarityViolation,
                        std::string(rule) + " requires " +
                            (want == Polarity::Positive ? "positive" : "negative") +
                            " polarity");
}

// Validates an IT/DEIT target and its broken-cut-free side condition.
// Returns true if the target is the firing area itself.
bool validate_target(const Graph& g, const RuleInstance& r, std::size_t source_index) {
    if (!r.target)
        throw RuleError(RuleErrorKind::BadAddress, "iteration requires a target area");
    const Address& t = *r.target;
    if (!t.into_area)
        throw RuleError(RuleErrorKind::BadAddress, "iteration target must be an area address");
    if (t.path == r.area.path) return true;
    if (t.path.size() <= r.area.path.size() ||
        !std::equal(r.area.path.begin(), r.area.path.end(), t.path.begin()))
        throw RuleError(RuleErrorKind::BadAddress,
                        "iteration target must lie inside the firing area");
    std::size_t j = t.path[r.area.path.size()];
    if (j == source_index)
        throw RuleError(RuleErrorKind::BadAddress,
                        "iteration target may not lie inside the source item");
    Address ctx = Address::item(
        std::vector<std::size_t>(t.path.begin(), t.path.begin() + static_cast<std::ptrdiff_t>(
                                                                      r.area.path.size() + 1)));
    bool ok;
    try {
        ok = is_broken_cut_free(g, ctx, t);
    } catch (const AddressError& e) {
        throw RuleError(RuleErrorKind::BadAddress, e.what());
    }
    if (!ok)
        throw RuleError(RuleErrorKind::BrokenCutFreeViolation,
                        "iteration context contains a broken cut");
    return false;
}

Graph replace_area(const Graph& g, const Address& a, std::vector<Item> items) {
    return replace_at(g, a, Graph{std::move(items)});
}

} // namespace

Graph apply_rule(const Graph& g, const RuleInstance& r) {
    AreaView av = resolve_area(g, r.area);
    const std::vector<Item>& items = av.contents.items();

    switch (r.rule) {
    case RuleName::DEL: {
        require_polarity(av, Polarity::Positive, "DEL");
        check_indices(r.indices, items.size());
        return replace_area(g, r.area, drop(items, r.indices));
    }
    case RuleName::INS: {
        require_polarity(av, Polarity::Negative, "INS");
        if (!r.payload) throw RuleError(RuleErrorKind::BadPayload, "INS requires a payload");
        std::vector<Item> out = items;
        for (const Item& it : r.payload->items()) out.push_back(it);
        return replace_area(g, r.area, std::move(out));
    }
    case RuleName::DC1: {
        check_indices(r.indices, items.size());
        std::vector<Item> out = drop(items, r.indices);
        out.push_back(Item::cut(Graph::cut(Graph{take(items, r.indices)})));
        return replace_area(g, r.area, std::move(out));
    }
    case RuleName::DC2: {
        const Item& it = single_index(av, r);
        Graph content;
        if (!match_double_continuous(it, content))
            throw RuleError(RuleErrorKind::KindMismatch, "DC2 requires a double continuous cut");
        std::vector<Item> out = drop(items, r.indices);
        for (const Item& in : content.items()) out.push_back(in);
        return replace_area(g, r.area, std::move(out));
    }
    case RuleName::IT: {
        const Item& src = single_index(av, r);
        bool same_area = validate_target(g, r, r.indices[0]);
        Graph tcontents = same_area ? av.contents : subgraph_at(g, *r.target);
        std::vector<Item> out = tcontents.items();
        out.push_back(src);
        return replace_area(g, *r.target, std::move(out));
    }
    case RuleName::DEIT: {
        const Item& src = single_index(av, r);
        bool same_area = validate_target(g, r, r.indices[0]);
        Graph tcontents = same_area ? av.contents : subgraph_at(g, *r.target);
        std::vector<Item> out = tcontents.items();
        std::string key = src.print();
        std::size_t found = out.size();
        std::size_t skip = same_area ? r.indices[0] : out.size();
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (i == skip) continue;
            if (out[i].print() == key) { found = i; break; }
        }
        if (found == out.size())
            throw RuleError(RuleErrorKind::KindMismatch,
                            "DEIT target contains no copy of the source");
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(found));
        return replace_area(g, *r.target, std::move(out));
    }
    case RuleName::K1: {
        const Item& it = single_index(av, r);
        Graph content;
        if (!match_necessity(it, content))
            throw RuleError(RuleErrorKind::KindMismatch, "K1 requires a necessity cut");
        if (!r.partition) throw RuleError(RuleErrorKind::BadPartition, "K1 requires a partition");
        const auto& [p1, p2] = *r.partition;
        check_indices(p1, content.size());
        check_indices(p2, content.size());
        std::vector<bool> seen(content.size(), false);
        for (std::size_t i : p1) seen[i] = true;
        for (std::size_t i : p2) {
            if (seen[i]) throw RuleError(RuleErrorKind::BadPartition, "partition blocks overlap");
            seen[i] = true;
        }
        if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
            throw RuleError(RuleErrorKind::BadPartition, "partition does not exhaust the area");
        std::vector<Item> out = drop(items, r.indices);
        out.push_back(Item::cut(Graph::bcut(Graph{take(content.items(), p1)})));
        out.push_back(Item::cut(Graph::bcut(Graph{take(content.items(), p2)})));
        return replace_area(g, r.area, std::move(out));
    }
    case RuleName::K2: {
        if (r.indices.size() != 2)
            throw RuleError(RuleErrorKind::BadIndices, "K2 selects exactly two items");
        check_indices(r.indices, items.size());
        Graph c1, c2;
        if (!match_necessity(items[r.indices[0]], c1) ||
            !match_necessity(items[r.indices[1]], c2))
            throw RuleError(RuleErrorKind::KindMismatch, "K2 requires two necessity cuts");
        std::vector<Item> out = drop(items, r.indices);
        out.push_back(Item::cut(Graph::bcut(Graph::juxtapose(c1, c2))));
        return replace_area(g, r.area, std::move(out));
    }
    case RuleName::DMN: {
        // Downward monotonicity is kept at the root area: the implication
        // ◇¬Q → ◇¬P is not a pointwise consequence of P → Q, so firing it
        // under arbitrary contexts does not preserve per-frame validity.
        if (!r.area.path.empty())
            throw RuleError(RuleErrorKind::BadAddress, "DMN fires at the root area only");
        const Item& it = single_index(av, r);
        if (it.kind() != NodeKind::ContinuousCut)
            throw RuleError(RuleErrorKind::KindMismatch, "DMN requires a continuous cut");
        if (!r.partition) throw RuleError(RuleErrorKind::BadPartition, "DMN requires a partition");
        const Graph& inner = it.area();
        const auto& [pidx, didx] = *r.partition;
        check_indices(pidx, inner.size());
        check_indices(didx, inner.size());
        if (didx.size() != 1 || pidx.size() + 1 != inner.size())
            throw RuleError(RuleErrorKind::BadPartition,
                            "DMN partition selects the antecedent and one consequent cut");
        std::vector<bool> seen(inner.size(), false);
        for (std::size_t i : pidx) seen[i] = true;
        if (seen[didx[0]])
            throw RuleError(RuleErrorKind::BadPartition, "partition blocks overlap");
        const Item& desig = inner.items()[didx[0]];
        if (desig.kind() != NodeKind::ContinuousCut)
            throw RuleError(RuleErrorKind::KindMismatch,
                            "DMN designated item must be a continuous cut");
        Graph p{take(inner.items(), pidx)};
        Graph q = desig.area();
        std::vector<Item> out = drop(items, r.indices);
        Graph concl = Graph::implies(Graph::bcut(q), Graph::bcut(p));
        for (const Item& c : concl.items()) out.push_back(c);
        return replace_area(g, r.area, std::move(out));
    }
    case RuleName::JUX: {
        if (!r.area.path.empty())
            throw RuleError(RuleErrorKind::BadAddress, "JUX fires at the root area only");
        if (!r.payload) throw RuleError(RuleErrorKind::BadPayload, "JUX requires a payload");
        return Graph::juxtapose(g, *r.payload);
    }
    case RuleName::Dpos: {
        require_polarity(av, Polarity::Positive, "D+");
        const Item& it = single_index(av, r);
        Graph content;
        if (!match_necessity(it, content))
            throw RuleError(RuleErrorKind::KindMismatch, "D+ requires a necessity cut");
        std::vector<Item> out = drop(items, r.indices);
        {
            Graph repl_ = Graph::pcut(content);
            for (const Item& c : repl_.items()) out.push_back(c);
        }
        return replace_area(g, r.area, std::move(out));
    }
    case RuleName::Dneg: {
        require_polarity(av, Polarity::Negative, "D-");
        const Item& it = single_index(av, r);
        Graph content;
        if (!match_possibility(it, content))
            throw RuleError(RuleErrorKind::KindMismatch, "D- requires a possibility cut");
        std::vector<Item> out = drop(items, r.indices);
        {
            Graph repl_ = Graph::ncut(content);
            for (const Item& c : repl_.items()) out.push_back(c);
        }
        return replace_area(g, r.area, std::move(out));
    }
    case RuleName::Tpos: {
        require_polarity(av, Polarity::Positive, "T+");
        const Item& it = single_index(av, r);
        if (it.kind() != NodeKind::ContinuousCut)
            throw RuleError(RuleErrorKind::KindMismatch, "T+ requires a continuous cut");
        std::vector<Item> out = drop(items, r.indices);
        {
            Graph repl_ = Graph::bcut(it.area());
            for (const Item& c : repl_.items()) out.push_back(c);
        }
        return replace_area(g, r.area, std::move(out));
    }
    case RuleName::Tneg: {
        require_polarity(av, Polarity::Negative, "T-");
        const Item& it = single_index(av, r);
        if (it.kind() != NodeKind::BrokenCut)
            throw RuleError(RuleErrorKind::KindMismatch, "T- requires a broken cut");
        std::vector<Item> out = drop(items, r.indices);
        {
            Graph repl_ = Graph::cut(it.area());
            for (const Item& c : repl_.items()) out.push_back(c);
        }
        return replace_area(g, r.area, std::move(out));
    }
    case RuleName::FourPos: {
        require_polarity(av, Polarity::Positive, "4+");
        const Item& it = single_index(av, r);
        Graph content;
        if (!match_necessity(it, content))
            throw RuleError(RuleErrorKind::KindMismatch, "4+ requires a necessity cut");
        std::vector<Item> out = drop(items, r.indices);
        {
            Graph repl_ = Graph::ncut(Graph::ncut(content));
            for (const Item& c : repl_.items()) out.push_back(c);
        }
        return replace_area(g, r.area, std::move(out));
    }
    case RuleName::FourNeg: {
        require_polarity(av, Polarity::Negative, "4-");
        const Item& it = single_index(av, r);
        Graph content;
        if (!match_possibility(it, content))
            throw RuleError(RuleErrorKind::KindMismatch, "4- requires a possibility cut");
        std::vector<Item> out = drop(items, r.indices);
        {
            Graph repl_ = Graph::pcut(Graph::pcut(content));
            for (const Item& c : repl_.items()) out.push_back(c);
        }
        return replace_area(g, r.area, std::move(out));
    }
    case RuleName::Bpos: {
        require_polarity(av, Polarity::Positive, "B+");
        const Item& it = single_index(av, r);
        Graph content;
        if (!match_double_broken(it, content))
            throw RuleError(RuleErrorKind::KindMismatch, "B+ requires a double broken cut");
        std::vector<Item> out = drop(items, r.indices);
        for (const Item& c : content.items()) out.push_back(c);
        return replace_area(g, r.area, std::move(out));
    }
    case RuleName::Bneg: {
        require_polarity(av, Polarity::Negative, "B-");
        check_indices(r.indices, items.size());
        std::vector<Item> out = drop(items, r.indices);
        Graph m{take(items, r.indices)};
        {
            Graph repl_ = Graph::bcut(Graph::bcut(m));
            for (const Item& c : repl_.items()) out.push_back(c);
        }
        return replace_area(g, r.area, std::move(out));
    }
    case RuleName::FivePos: {
        require_polarity(av, Polarity::Positive, "5+");
        const Item& it = single_index(av, r);
        Graph content;
        if (!match_double_broken(it, content))
            throw RuleError(RuleErrorKind::KindMismatch, "5+ requires a double broken cut");
        std::vector<Item> out = drop(items, r.indices);
        {
            Graph repl_ = Graph::ncut(content);
            for (const Item& c : repl_.items()) out.push_back(c);
        }
        return replace_area(g, r.area, std::move(out));
    }
    case RuleName::FiveNeg: {
        require_polarity(av, Polarity::Negative, "5-");
        const Item& it = single_index(av, r);
        Graph content;
        if (!match_necessity(it, content))
            throw RuleError(RuleErrorKind::KindMismatch, "5- requires a necessity cut");
        std::vector<Item> out = drop(items, r.indices);
        {
            Graph repl_ = Graph::bcut(Graph::bcut(content));
            for (const Item& c : repl_.items()) out.push_back(c);
        }
        return replace_area(g, r.area, std::move(out));
    }
    }
    throw RuleError(RuleErrorKind::BadAddress, "unknown rule");
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void all_area_addresses(const Graph& g, const Address& at, std::vector<Address>& out) {
    out.push_back(at);
    const Graph area = subgraph_at(g, at);
    for (std::size_t i = 0; i < area.size(); ++i)
        if (area.items()[i].is_cut()) all_area_addresses(g, at.child_area(i), out);
}

// Area addresses strictly inside item j of `at`, including its own area.
void areas_under(const Graph& g, const Address& at, std::size_t j, std::vector<Address>& out) {
    const Graph area = subgraph_at(g, at);
    if (!area.items()[j].is_cut()) return;
    all_area_addresses(g, at.child_area(j), out);
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, bool include_empty) {
    std::vector<std::vector<std::size_t>> out;
    std::size_t total = std::size_t{1} << n;
    for (std::size_t mask = include_empty ? 0 : 1; mask < total; ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) s.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

bool try_apply(const Graph& g, const RuleInstance& r) {
    try {
        apply_rule(g, r);
        return true;
    } catch (const RuleError&) {
        return false;
    }
}

} // namespace

std::vector<RuleInstance> enumerate_instances(const Graph& g, RuleSet rules,
                                              const std::vector<Graph>& payload_pool) {
    std::vector<RuleInstance> out;
    std::vector<Address> areas;
    all_area_addresses(g, Address::root(), areas);

    auto add = [&](RuleInstance r) {
        if (try_apply(g, r)) out.push_back(std::move(r));
    };

    for (const Address& a : areas) {
        Graph area = subgraph_at(g, a);
        Polarity pol = polarity(g, a);
        std::size_t n = area.size();
        const auto& items = area.items();

        if (has_rule(rules, RuleName::DEL) && pol == Polarity::Positive)
            for (auto& s : subsets(n, false))
                add(RuleInstance{RuleName::DEL, a, s, {}, {}, {}});

        if (has_rule(rules, RuleName::INS) && pol == Polarity::Negative)
            for (const Graph& p : payload_pool)
                add(RuleInstance{RuleName::INS, a, {}, {}, p, {}});

        if (has_rule(rules, RuleName::DC1))
            for (auto& s : subsets(n, true))
                add(RuleInstance{RuleName::DC1, a, s, {}, {}, {}});

        for (std::size_t i = 0; i < n; ++i) {
            Graph content;
            if (has_rule(rules, RuleName::DC2) && match_double_continuous(items[i], content))
                add(RuleInstance{RuleName::DC2, a, {i}, {}, {}, {}});

            if (has_rule(rules, RuleName::K1) && match_necessity(items[i], content))
                for (auto& s : subsets(content.size(), true)) {
                    std::vector<std::size_t> rest;
                    for (std::size_t k = 0; k < content.size(); ++k)
                        if (!std::binary_search(s.begin(), s.end(), k)) rest.push_back(k);
                    add(RuleInstance{RuleName::K1, a, {i}, {}, {}, std::make_pair(s, rest)});
                }

            if (has_rule(rules, RuleName::K2) && match_necessity(items[i], content))
                for (std::size_t j = i + 1; j < n; ++j)
                    if (match_necessity(items[j], content))
                        add(RuleInstance{RuleName::K2, a, {i, j}, {}, {}, {}});

            if (has_rule(rules, RuleName::DMN) && a.path.empty() &&
                items[i].kind() == NodeKind::ContinuousCut) {
                const Graph& inner = items[i].area();
                for (std::size_t d = 0; d < inner.size(); ++d) {
                    if (inner.items()[d].kind() != NodeKind::ContinuousCut) continue;
                    std::vector<std::size_t> rest;
                    for (std::size_t k = 0; k < inner.size(); ++k)
                        if (k != d) rest.push_back(k);
                    add(RuleInstance{RuleName::DMN, a, {i}, {}, {},
                                     std::make_pair(rest, std::vector<std::size_t>{d})});
                }
            }

            // IT/DEIT: same-area targets plus every area under a sibling.
            if (has_rule(rules, RuleName::IT) || has_rule(rules, RuleName::DEIT)) {
                std::vector<Address> targets{a};
                for (std::size_t j = 0; j < n; ++j)
                    if (j != i) areas_under(g, a, j, targets);
                for (const Address& t : targets) {
                    if (has_rule(rules, RuleName::IT))
                        add(RuleInstance{RuleName::IT, a, {i}, t, {}, {}});
                    if (has_rule(rules, RuleName::DEIT))
                        add(RuleInstance{RuleName::DEIT, a, {i}, t, {}, {}});
                }
            }

            // Extension rules on single items.
            const struct {
                RuleName rule;
            } singles[] = {{RuleName::Dpos},  {RuleName::Dneg},  {RuleName::Tpos},
                           {RuleName::Tneg},  {RuleName::FourPos}, {RuleName::FourNeg},
                           {RuleName::Bpos},  {RuleName::FivePos}, {RuleName::FiveNeg}};
            for (auto s : singles)
                if (has_rule(rules, s.rule))
                    add(RuleInstance{s.rule, a, {i}, {}, {}, {}});
        }

        if (has_rule(rules, RuleName::Bneg) && pol == Polarity::Negative)
            for (auto& s : subsets(n, true))
                add(RuleInstance{RuleName::Bneg, a, s, {}, {}, {}});
    }

    if (has_rule(rules, RuleName::JUX))
        for (const Graph& p : payload_pool)
            add(RuleInstance{RuleName::JUX, Address::root(), {}, {}, p, {}});

    return out;
}

std::vector<RuleInstance> enumerate_instances(const Graph& g, SystemId system,
                                              const std::vector<Graph>& payload_pool) {
    return enumerate_instances(g, rules_of(system), payload_pool);
}

} // namespace pmk
