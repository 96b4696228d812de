#include "pmk/gen.hpp"

#include <cstdlib>
#include <functional>

namespace pmk {

namespace {

std::string atom_name(int i) {
    static const char* names[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
    if (i < 8) return names[i];
    return "x" + std::to_string(i);
}

Graph random_area(std::mt19937_64& rng, const GenConfig& cfg, int depth) {
    std::uniform_int_distribution<int> width(0, cfg.max_width);
    int n = width(rng);
    std::vector<Item> items;
    for (int i = 0; i < n; ++i) {
        std::uniform_int_distribution<int> kind(0, depth >= cfg.max_depth ? 0 : 2);
        switch (kind(rng)) {
        case 0: {
            std::uniform_int_distribution<int> a(0, cfg.atoms - 1);
            items.push_back(Item::atom(atom_name(a(rng))));
            break;
        }
        case 1: items.push_back(Item::cut(random_area(rng, cfg, depth + 1))); break;
        default: items.push_back(Item::bcut(random_area(rng, cfg, depth + 1))); break;
        }
    }
    return Graph{std::move(items)};
}

} // namespace

Graph random_graph(std::mt19937_64& rng, const GenConfig& cfg) {
    return random_area(rng, cfg, 0);
}

Formula random_formula(std::mt19937_64& rng, const GenConfig& cfg) {
    std::function<Formula(int)> rec = [&](int depth) -> Formula {
        std::uniform_int_distribution<int> kind(0, depth >= cfg.max_depth ? 1 : 6);
        switch (kind(rng)) {
        case 0: {
            std::uniform_int_distribution<int> a(0, cfg.atoms - 1);
            return Formula::atom(atom_name(a(rng)));
        }
        case 1: return Formula::top();
        case 2: return Formula::negate(rec(depth + 1));
        case 3: return Formula::conj(rec(depth + 1), rec(depth + 1));
        case 4: return Formula::box(rec(depth + 1));
        case 5: return Formula::diamond(rec(depth + 1));
        default: return Formula::implies(rec(depth + 1), rec(depth + 1));
        }
    };
    return rec(0);
}

namespace {

void collect_subgraphs(const Graph& g, std::vector<Graph>& out) {
    out.push_back(g);
    for (const Item& it : g.items()) {
        out.push_back(Graph::single(it));
        if (it.is_cut()) collect_subgraphs(it.area(), out);
    }
}

} // namespace

std::optional<RuleInstance> random_instance(const Graph& g, SystemId system,
                                            std::mt19937_64& rng) {
    std::vector<Graph> pool;
    collect_subgraphs(g, pool);
    pool.push_back(Graph::atom("p"));
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    std::vector<RuleInstance> all = enumerate_instances(g, system, pool);
    if (all.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
}

std::uint64_t seed_from_env() {
    if (const char* s = std::getenv("PMK_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 0);
        if (end && *end == '\0') return v;
    }
    return 0x5EED;
}

} // namespace pmk
