// gen.hpp — seeded random generators for graphs, formulas and rule
// instances; used by the fuzzing CLI and the property suites.

#pragma once

#include "pmk/formula.hpp"
#include "pmk/graph.hpp"
#include "pmk/rules.hpp"

#include <random>

namespace pmk {

struct GenConfig {
    int max_depth = 4;
    int max_width = 3;
    int atoms = 3; // drawn from p, q, r, ...
};

Graph random_graph(std::mt19937_64& rng, const GenConfig& cfg = {});
Formula random_formula(std::mt19937_64& rng, const GenConfig& cfg = {});

// A uniformly chosen legal instance for the system on g, or nullopt when
// none exists.  Payload pool: subgraphs of g plus SA plus single atoms.
std::optional<RuleInstance> random_instance(const Graph& g, SystemId system,
                                            std::mt19937_64& rng);

std::uint64_t seed_from_env(); // PMK_SEED, default 0x5EED

} // namespace pmk
