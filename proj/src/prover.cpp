#include "pmk/prover.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace pmk {

namespace {

void all_areas(const Graph& g, const Address& at, std::vector<Address>& out) {
    out.push_back(at);
    Graph area = subgraph_at(g, at);
    for (std::size_t i = 0; i < area.size(); ++i)
        if (area.items()[i].is_cut()) all_areas(g, at.child_area(i), out);
}

void subsets_upto(std::size_t n, std::size_t cap, std::vector<std::vector<std::size_t>>& out) {
    out.push_back({});
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            out.push_back(cur);
            if (cur.size() < cap) rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

// Candidate predecessor states g' with the instance that maps them to g.
struct Pred {
    Graph state;
    RuleInstance inst;
};

void collect_subgraphs(const Graph& g, std::vector<Graph>& out) {
    out.push_back(g);
    for (const Item& it : g.items()) {
        out.push_back(Graph::single(it));
        if (it.is_cut()) collect_subgraphs(it.area(), out);
    }
}

class Backward {
  public:
    Backward(const Graph& goal, const SearchConfig& cfg) : cfg_(cfg) {
        collect_subgraphs(goal, pool_);
        pool_.push_back(Graph::sa());
        std::sort(pool_.begin(), pool_.end());
        pool_.erase(std::unique(pool_.begin(), pool_.end()), pool_.end());
        rules_ = rules_of(cfg.system);
    }

    std::vector<Pred> predecessors(const Graph& g) {
        std::vector<Pred> out;
        shrinking_.clear();
        growing_.clear();
        std::vector<Address> areas;
        all_areas(g, Address::root(), areas);
        for (const Address& a : areas) {
            Graph area = subgraph_at(g, a);
            Polarity pol = polarity(g, a);
            std::size_t n = area.size();
            const auto& items = area.items();

            // un-DEL: a deleted sub-multiset reappears.
            if (pol == Polarity::Positive)
                for (const Graph& m : pool_) {
                    if (m.empty()) continue;
                    Graph prev_area = Graph::juxtapose(area, m);
                    add(out, g, a, prev_area, [&](const Graph& prev) {
                        RuleInstance r{RuleName::DEL, a, {}, {}, {}, {}};
                        r.indices = indices_of(subgraph_at(prev, a), m);
                        return r;
                    });
                }

            // un-INS: inserted items disappear.
            if (pol == Polarity::Negative && n > 0) {
                std::vector<std::vector<std::size_t>> subs;
                subsets_upto(n, 2, subs);
                for (const auto& s : subs) {
                    if (s.empty()) continue;
                    std::vector<Item> kept;
                    std::vector<Item> removed;
                    for (std::size_t i = 0; i < n; ++i)
                        (std::binary_search(s.begin(), s.end(), i) ? removed : kept)
                            .push_back(items[i]);
                    add(out, g, a, Graph{kept}, [&](const Graph&) {
                        return RuleInstance{RuleName::INS, a, {}, {}, Graph{removed}, {}};
                    });
                }
            }

            for (std::size_t i = 0; i < n; ++i) {
                const Item& it = items[i];
                // un-DC1: a double cut unwraps.
                if (it.kind() == NodeKind::ContinuousCut && it.area().size() == 1 &&
                    it.area().items()[0].kind() == NodeKind::ContinuousCut) {
                    Graph m = it.area().items()[0].area();
                    std::vector<Item> prev = items;
                    prev.erase(prev.begin() + static_cast<std::ptrdiff_t>(i));
                    for (const Item& mi : m.items()) prev.push_back(mi);
                    add(out, g, a, Graph{prev}, [&](const Graph& pg) {
                        RuleInstance r{RuleName::DC1, a, {}, {}, {}, {}};
                        r.indices = indices_of(subgraph_at(pg, a), m);
                        return r;
                    });
                }
                // un-K1: two necessity cuts merge back.
                for (std::size_t j = i + 1; j < n; ++j) {
                    Graph ci, cj;
                    if (!necessity_content(items[i], ci) || !necessity_content(items[j], cj))
                        continue;
                    std::vector<Item> prev;
                    for (std::size_t k = 0; k < n; ++k)
                        if (k != i && k != j) prev.push_back(items[k]);
                    Graph merged_content = Graph::juxtapose(ci, cj);
                    Item merged = Item::cut(Graph::bcut(merged_content));
                    prev.push_back(merged);
                    add(out, g, a, Graph{prev}, [&](const Graph& pg) {
                        Graph parea = subgraph_at(pg, a);
                        std::size_t mi = index_of(parea, merged);
                        Graph mc = parea.items()[mi].area().items()[0].kind() ==
                                           NodeKind::BrokenCut
                                       ? parea.items()[mi].area().items()[0].area()
                                       : Graph::sa();
                        auto p1 = indices_of(mc, ci);
                        std::vector<std::size_t> p2;
                        for (std::size_t k = 0; k < mc.size(); ++k)
                            if (!std::binary_search(p1.begin(), p1.end(), k)) p2.push_back(k);
                        RuleInstance r{RuleName::K1, a, {mi}, {}, {},
                                       std::make_pair(p1, p2)};
                        return r;
                    });
                }
                // un-K2: a merged necessity cut splits back in two.
                {
                    Graph mc;
                    if (necessity_content(it, mc) && mc.size() <= 6) {
                        std::vector<std::vector<std::size_t>> subs;
                        subsets_upto(mc.size(), mc.size(), subs);
                        for (const auto& s : subs) {
                            std::vector<Item> left, right;
                            for (std::size_t k = 0; k < mc.size(); ++k)
                                (std::binary_search(s.begin(), s.end(), k) ? left : right)
                                    .push_back(mc.items()[k]);
                            std::vector<Item> prev = items;
                            prev.erase(prev.begin() + static_cast<std::ptrdiff_t>(i));
                            Item n1 = Item::cut(Graph::bcut(Graph{left}));
                            Item n2 = Item::cut(Graph::bcut(Graph{right}));
                            prev.push_back(n1);
                            prev.push_back(n2);
                            add(out, g, a, Graph{prev}, [&](const Graph& pg) {
                                Graph parea = subgraph_at(pg, a);
                                std::size_t i1 = index_of(parea, n1);
                                std::size_t i2 = index_of(parea, n2, i1);
                                RuleInstance r{RuleName::K2, a,
                                               {std::min(i1, i2), std::max(i1, i2)},
                                               {}, {}, {}};
                                return r;
                            });
                        }
                    }
                }
                // un-extension rules.
                un_extension(out, g, a, pol, items, i);
            }

            // un-IT / un-DEIT between siblings and same area.
            un_iteration(out, g, a, items);

            // un-DMN at the root.
            if (a.path.empty()) un_dmn(out, g, items);
        }
        out = std::move(shrinking_);
        for (Pred& p : growing_) out.push_back(std::move(p));
        return out;
    }

    const std::vector<Graph>& pool() const { return pool_; }

  private:
    template <typename MakeInst>
    void add(std::vector<Pred>& out, const Graph& g, const Address& a, const Graph& prev_area,
             MakeInst&& mk) {
        Graph prev;
        try {
            prev = replace_at(g, a, prev_area);
        } catch (const AddressError&) {
            return;
        }
        RuleInstance inst;
        try {
            inst = mk(prev);
            if (apply_rule(prev, inst) != g) return;
        } catch (const RuleError&) {
            return;
        } catch (const AddressError&) {
            return;
        } catch (const SchemaError&) {
            return;
        }
        if (!has_rule(rules_, inst.rule)) return;
        (void)out;
        std::string pk = prev.print();
        std::string gk = g.print();
        (pk.size() <= gk.size() ? shrinking_ : growing_)
            .push_back(Pred{std::move(prev), std::move(inst)});
    }

    static bool necessity_content(const Item& it, Graph& content) {
        if (it.kind() != NodeKind::ContinuousCut || it.area().size() != 1) return false;
        const Item& in = it.area().items()[0];
        if (in.kind() == NodeKind::BrokenCut) {
            content = in.area();
            return true;
        }
        if (in.kind() == NodeKind::ContinuousCut && in.area().empty()) {
            content = Graph::sa();
            return true;
        }
        return false;
    }

    static std::size_t index_of(const Graph& area, const Item& it,
                                std::size_t exclude = SIZE_MAX) {
        std::string key = it.print();
        for (std::size_t i = 0; i < area.size(); ++i)
            if (i != exclude && area.items()[i].print() == key) return i;
        throw SchemaError("missing item");
    }

    static std::vector<std::size_t> indices_of(const Graph& area, const Graph& sub) {
        std::vector<bool> used(area.size(), false);
        std::vector<std::size_t> out;
        for (const Item& it : sub.items()) {
            std::string key = it.print();
            bool found = false;
            for (std::size_t i = 0; i < area.size(); ++i)
                if (!used[i] && area.items()[i].print() == key) {
                    used[i] = true;
                    out.push_back(i);
                    found = true;
                    break;
                }
            if (!found) throw SchemaError("missing sub-multiset");
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void un_extension(std::vector<Pred>& out, const Graph& g, const Address& a, Polarity pol,
                      const std::vector<Item>& items, std::size_t i) {
        const Item& it = items[i];
        auto replace_with = [&](RuleName rule, const Graph& prev_items) {
            std::vector<Item> prev;
            for (std::size_t k = 0; k < items.size(); ++k)
                if (k != i) prev.push_back(items[k]);
            for (const Item& pi : prev_items.items()) prev.push_back(pi);
            add(out, g, a, Graph{prev}, [&](const Graph& pg) {
                Graph parea = subgraph_at(pg, a);
                RuleInstance r{rule, a, {index_of(parea, prev_items.items()[0])}, {}, {}, {}};
                return r;
            });
        };
        Graph content;
        // un-T+: broken cut was a continuous cut.
        if (pol == Polarity::Positive && it.kind() == NodeKind::BrokenCut)
            replace_with(RuleName::Tpos, Graph::cut(it.area()));
        // un-T-: continuous was broken (only for nonempty areas).
        if (pol == Polarity::Negative && it.kind() == NodeKind::ContinuousCut &&
            !it.area().empty())
            replace_with(RuleName::Tneg, Graph::bcut(it.area()));
        // un-D+: possibility cut was a necessity cut.
        if (pol == Polarity::Positive && possibility_content(it, content))
            replace_with(RuleName::Dpos, Graph::ncut(content));
        if (pol == Polarity::Negative && necessity_content(it, content))
            replace_with(RuleName::Dneg, Graph::pcut(content));
        // un-4+: ncut(ncut X) was ncut X.
        if (pol == Polarity::Positive && necessity_content(it, content) &&
            content.size() == 1) {
            Graph inner;
            if (necessity_content(content.items()[0], inner))
                replace_with(RuleName::FourPos, Graph::ncut(inner));
        }
        if (pol == Polarity::Negative && possibility_content(it, content) &&
            content.size() == 1) {
            Graph inner;
            if (possibility_content(content.items()[0], inner))
                replace_with(RuleName::FourNeg, Graph::pcut(inner));
        }
        // un-B+: a deleted double broken cut returns (pool-bounded).
        if (pol == Polarity::Positive)
            for (const Graph& m : pool_) {
                if (m.empty() || m.size() > 2) continue;
                // Only try when the area currently contains m.
                std::vector<Item> prev = items;
                try {
                    auto idx = indices_of(Graph{items}, m);
                    std::vector<std::size_t> sorted = idx;
                    for (std::size_t k = sorted.size(); k-- > 0;)
                        prev.erase(prev.begin() + static_cast<std::ptrdiff_t>(sorted[k]));
                } catch (const SchemaError&) {
                    continue;
                }
                prev.push_back(Item::bcut(Graph::bcut(m)));
                Item dd = Item::bcut(Graph::bcut(m));
                add(out, g, a, Graph{prev}, [&](const Graph& pg) {
                    Graph parea = subgraph_at(pg, a);
                    return RuleInstance{RuleName::Bpos, a, {index_of(parea, dd)}, {}, {}, {}};
                });
            }
        if (pol == Polarity::Negative && double_broken_content(it, content)) {
            std::vector<Item> prev;
            for (std::size_t k = 0; k < items.size(); ++k)
                if (k != i) prev.push_back(items[k]);
            for (const Item& ci : content.items()) prev.push_back(ci);
            add(out, g, a, Graph{prev}, [&](const Graph& pg) {
                Graph parea = subgraph_at(pg, a);
                RuleInstance r{RuleName::Bneg, a, indices_of(parea, content), {}, {}, {}};
                return r;
            });
        }
        // un-5+: necessity was a double broken cut.
        if (pol == Polarity::Positive && necessity_content(it, content))
            replace_with(RuleName::FivePos, Graph::bcut(Graph::bcut(content)));
        if (pol == Polarity::Negative && double_broken_content(it, content))
            replace_with(RuleName::FiveNeg, Graph::ncut(content));
    }

    static bool possibility_content(const Item& it, Graph& content) {
        if (it.kind() != NodeKind::BrokenCut || it.area().size() != 1) return false;
        const Item& in = it.area().items()[0];
        if (in.kind() != NodeKind::ContinuousCut) return false;
        content = in.area();
        return true;
    }

    static bool double_broken_content(const Item& it, Graph& content) {
        if (it.kind() != NodeKind::BrokenCut || it.area().size() != 1) return false;
        const Item& in = it.area().items()[0];
        if (in.kind() == NodeKind::BrokenCut) {
            content = in.area();
            return true;
        }
        if (in.kind() == NodeKind::ContinuousCut && in.area().empty()) {
            content = Graph::sa();
            return true;
        }
        return false;
    }

    void un_iteration(std::vector<Pred>& out, const Graph& g, const Address& a,
                      const std::vector<Item>& items) {
        std::size_t n = items.size();
        // un-IT: remove a copy that equals a sibling (same area) or an item
        // inside a sibling's nested areas.
        for (std::size_t i = 0; i < n; ++i) {
            // Same-area copy.
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || items[i].print() != items[j].print()) continue;
                std::vector<Item> prev = items;
                prev.erase(prev.begin() + static_cast<std::ptrdiff_t>(j));
                const Item src = items[i];
                add(out, g, a, Graph{prev}, [&](const Graph& pg) {
                    Graph parea = subgraph_at(pg, a);
                    return RuleInstance{RuleName::IT, a, {index_of(parea, src)}, a, {}, {}};
                });
                break;
            }
            // Copies inside sibling areas: search one level of nesting per
            // sibling cut (deeper copies are found through repeated steps).
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || !items[j].is_cut()) continue;
                remove_copy_rec(out, g, a, items, i, j, items[j].area(),
                                {a.path});
            }
        }
        // un-DEIT: a removed copy returns next to its source (pool-free).
        for (std::size_t i = 0; i < n; ++i) {
            const Item src = items[i];
            // Same area.
            {
                std::vector<Item> prev = items;
                prev.push_back(src);
                add(out, g, a, Graph{prev}, [&](const Graph& pg) {
                    Graph parea = subgraph_at(pg, a);
                    return RuleInstance{RuleName::DEIT, a, {index_of(parea, src)}, a, {}, {}};
                });
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || !items[j].is_cut()) continue;
                // Reinsert into the sibling's immediate area only.
                std::vector<Item> prev = items;
                Graph inner = Graph::juxtapose(items[j].area(), Graph::single(src));
                prev[j] = items[j].kind() == NodeKind::ContinuousCut ? Item::cut(inner)
                                                                     : Item::bcut(inner);
                const Item host_after = prev[j];
                add(out, g, a, Graph{prev}, [&](const Graph& pg) {
                    Graph parea = subgraph_at(pg, a);
                    std::size_t si = index_of(parea, src);
                    std::size_t hj = index_of(parea, host_after, si);
                    std::vector<std::size_t> tpath = a.path;
                    tpath.push_back(hj);
                    return RuleInstance{RuleName::DEIT, a, {si}, Address::area(tpath), {}, {}};
                });
            }
        }
    }

    struct PathCtx {
        std::vector<std::size_t> area_path;
    };

    void remove_copy_rec(std::vector<Pred>& out, const Graph& g, const Address& firing,
                         const std::vector<Item>& firing_items, std::size_t src_idx,
                         std::size_t host_idx, const Graph& host_area, PathCtx) {
        // Only the host's immediate area is searched; deep copies are
        // reached by chaining single-level steps during the search.
        const Item& src = firing_items[src_idx];
        std::string key = src.print();
        for (std::size_t k = 0; k < host_area.size(); ++k) {
            if (host_area.items()[k].print() != key) continue;
            std::vector<Item> inner = host_area.items();
            inner.erase(inner.begin() + static_cast<std::ptrdiff_t>(k));
            std::vector<Item> prev = firing_items;
            prev[host_idx] = firing_items[host_idx].kind() == NodeKind::ContinuousCut
                                 ? Item::cut(Graph{inner})
                                 : Item::bcut(Graph{inner});
            const Item host_after = prev[host_idx];
            const Item src_copy = src;
            add(out, g, firing, Graph{prev}, [&](const Graph& pg) {
                Graph parea = subgraph_at(pg, firing);
                std::size_t si = index_of(parea, src_copy);
                std::size_t hj = index_of(parea, host_after, si);
                std::vector<std::size_t> tpath = firing.path;
                tpath.push_back(hj);
                return RuleInstance{RuleName::IT, firing, {si}, Address::area(tpath), {}, {}};
            });
            break;
        }
    }

    void un_dmn(std::vector<Pred>& out, const Graph& g, const std::vector<Item>& items) {
        // Look for the ({Q} ({P})) shape produced by DMN.
        for (std::size_t i = 0; i < items.size(); ++i) {
            const Item& it = items[i];
            if (it.kind() != NodeKind::ContinuousCut) continue;
            const Graph& area = it.area();
            if (area.size() != 2) continue;
            for (int flip = 0; flip < 2; ++flip) {
                const Item& bq = area.items()[static_cast<std::size_t>(flip)];
                const Item& wrap = area.items()[static_cast<std::size_t>(1 - flip)];
                if (bq.kind() != NodeKind::BrokenCut) continue;
                if (wrap.kind() != NodeKind::ContinuousCut || wrap.area().size() != 1)
                    continue;
                const Item& bp = wrap.area().items()[0];
                if (bp.kind() != NodeKind::BrokenCut) continue;
                Graph q = bq.area();
                Graph p = bp.area();
                std::vector<Item> prev;
                for (std::size_t k = 0; k < items.size(); ++k)
                    if (k != i) prev.push_back(items[k]);
                Item imp = Item::cut(Graph::juxtapose(p, Graph::cut(q)));
                prev.push_back(imp);
                add(out, g, Address::root(), Graph{prev}, [&](const Graph& pg) {
                    std::size_t ii = index_of(pg, imp);
                    const Graph& inner = pg.items()[ii].area();
                    std::size_t di = index_of(inner, Item::cut(q));
                    std::vector<std::size_t> pidx;
                    for (std::size_t k = 0; k < inner.size(); ++k)
                        if (k != di) pidx.push_back(k);
                    return RuleInstance{RuleName::DMN, Address::root(), {ii}, {}, {},
                                        std::make_pair(pidx,
                                                       std::vector<std::size_t>{di})};
                });
            }
        }
    }

    SearchConfig cfg_;
    std::vector<Graph> pool_;
    RuleSet rules_;
    std::vector<Pred> shrinking_, growing_;
};

} // namespace

std::optional<Proof> prove(const Graph& goal, const SearchConfig& cfg, SearchStats* stats) {
    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    if (goal.is_sa()) {
        ProofBuilder b(cfg.system);
        b.axiom();
        return b.take();
    }
    Backward bw(goal, cfg);
    // Iterative deepening DFS over predecessors; `failed` records the
    // largest remaining depth at which a state was already explored
    // without success, pruning re-expansion.
    std::vector<std::pair<Graph, RuleInstance>> path; // from goal downward
    std::unordered_set<std::string> on_path;
    std::unordered_map<std::string, int> failed;
    std::optional<Proof> found;

    std::function<bool(const Graph&, int)> dfs = [&](const Graph& cur, int depth) -> bool {
        if (st.expanded >= cfg.node_budget) {
            st.budget_exhausted = true;
            return false;
        }
        if (depth == 0) return false;
        {
            auto it = failed.find(cur.print());
            if (it != failed.end() && it->second >= depth) return false;
        }
        ++st.expanded;
        for (Pred& p : bw.predecessors(cur)) {
            std::string key = p.state.print();
            if (on_path.count(key)) continue;
            path.emplace_back(p.state, p.inst);
            if (p.state.is_sa()) {
                // Reconstruct the forward proof.
                ProofBuilder b(cfg.system);
                std::size_t step = b.axiom();
                for (std::size_t k = path.size(); k-- > 0;)
                    step = b.kernel(step, path[k].second);
                Proof pr = b.take();
                if (check(pr).ok && pr.conclusion() == goal) {
                    found = std::move(pr);
                    path.pop_back();
                    return true;
                }
                path.pop_back();
                continue;
            }
            on_path.insert(key);
            bool ok = dfs(p.state, depth - 1);
            on_path.erase(key);
            path.pop_back();
            if (ok) return true;
        }
        int& best = failed[cur.print()];
        if (depth > best) best = depth;
        return false;
    };

    on_path.insert(goal.print());
    for (int d = 1; d <= cfg.depth && !found; ++d) {
        if (st.budget_exhausted) break;
        dfs(goal, d);
    }
    return found;
}

} // namespace pmk
