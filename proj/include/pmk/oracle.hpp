// oracle.hpp — finite Kripke frames as the semantic oracle: validity
// evaluation with exhaustive valuation sweeps, frame generation per
// class, and countermodel search.  Every frame's powerset algebra is a
// modal algebra, so a countermodel here refutes provability.

#pragma once

#include "pmk/formula.hpp"
#include "pmk/graph.hpp"
#include "pmk/rules.hpp" // FrameClass

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace pmk {

struct OracleError : std::runtime_error {
    explicit OracleError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

using WorldSet = std::uint32_t;

struct KripkeFrame {
    int n = 1;                      // worlds 0..n-1
    std::vector<WorldSet> rows;     // rows[w] = successors of w

    WorldSet all() const { return n == 32 ? ~WorldSet{0} : ((WorldSet{1} << n) - 1); }
    bool serial() const;
    bool reflexive() const;
    bool transitive() const;
    bool symmetric() const;
    bool euclidean() const;
    bool in_class(const FrameClass& c) const;
};

struct Valuation {
    std::vector<std::pair<std::string, WorldSet>> sets; // sorted by atom name
    WorldSet get(const std::string& atom) const;
};

struct OracleLimits {
    std::size_t max_atoms = 3; // exhaustive valuation sweep cap
};

WorldSet eval(const Formula& f, const KripkeFrame& frame, const Valuation& val);

bool valid(const Formula& f, const KripkeFrame& frame, const OracleLimits& lim = {});
bool valid(const Sequent& s, const KripkeFrame& frame, const OracleLimits& lim = {});
bool valid(const Graph& g, const KripkeFrame& frame, const OracleLimits& lim = {});

// Exhaustive enumeration of frames on n worlds in the class (n ≤ 4);
// uniform samples beyond.
std::vector<KripkeFrame> generate_frames(int n, const FrameClass& c);
KripkeFrame random_frame(int n, const FrameClass& c, std::mt19937_64& rng);

struct Countermodel {
    KripkeFrame frame;
    Valuation val;
    int world = 0;
};

// Exhaustive search over frames of the class up to max_n worlds and all
// valuations; any witness is re-verified before being returned.
std::optional<Countermodel> countermodel(const Formula& f, const FrameClass& c, int max_n,
                                         const OracleLimits& lim = {});
std::optional<Countermodel> countermodel(const Sequent& s, const FrameClass& c, int max_n,
                                         const OracleLimits& lim = {});
std::optional<Countermodel> countermodel(const Graph& g, const FrameClass& c, int max_n,
                                         const OracleLimits& lim = {});

} // namespace pmk
