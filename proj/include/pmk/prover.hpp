// prover.hpp — bounded backward proof search.  Incomplete by design:
// payloads for un-deletion are restricted to subgraphs of the goal, and
// the search stops at its depth/node budget.  Any proof returned passes
// check().

#pragma once

#include "pmk/proof.hpp"

#include <cstdint>
#include <optional>

namespace pmk {

struct SearchConfig {
    SystemId system = SystemId::K;
    int depth = 6;
    std::uint64_t node_budget = 200000;
};

struct SearchStats {
    std::uint64_t expanded = 0;
    bool budget_exhausted = false;
};

// Proof of the goal, or nullopt when the bounded search fails (never a
// wrong answer).
std::optional<Proof> prove(const Graph& goal, const SearchConfig& cfg,
                           SearchStats* stats = nullptr);

} // namespace pmk
