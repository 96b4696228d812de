// rules.hpp — the primitive transformations of the graphical calculi:
// alpha rules (DEL, INS, DC1, DC2, IT, DEIT), modal rules (K1, K2, DMN),
// juxtaposition of theorems (JUX), and the ten extension rules
// D/T/4/B/5 in positive and negative form.

#pragma once

#include "pmk/graph.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pmk {

enum class RuleName : std::uint8_t {
    DEL, INS, DC1, DC2, IT, DEIT, K1, K2, DMN, JUX,
    Dpos, Dneg, Tpos, Tneg, FourPos, FourNeg, Bpos, Bneg, FivePos, FiveNeg,
};

const char* rule_name(RuleName r);
std::optional<RuleName> rule_from_name(std::string_view s);

enum class RuleErrorKind {
    BadAddress,
    PolarityViolation,
    KindMismatch,
    BrokenCutFreeViolation,
    BadIndices,
    BadPartition,
    BadPayload,
    NotInSystem,
};

const char* rule_error_name(RuleErrorKind k);

struct RuleError : std::runtime_error {
    RuleErrorKind kind;
    RuleError(RuleErrorKind k, std::string msg)
        : std::runtime_error(std::move(msg)), kind(k) {}
};

// A fully parameterized rule application site.
struct RuleInstance {
    RuleName rule = RuleName::DEL;
    Address area = Address::root();     // the area the rule fires in
    std::vector<std::size_t> indices;   // selected children of that area
    std::optional<Address> target;      // IT/DEIT landing area
    std::optional<Graph> payload;       // INS insertion; JUX second premise
    // K1: split of the necessity cut's inner area.  DMN: antecedent part
    // and the designated inner continuous cut.
    std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> partition;
};

Graph apply_rule(const Graph& g, const RuleInstance& r);

// ---------------------------------------------------------------------------
// Systems (Def 8) and their rule sets.

enum class SystemId : std::uint8_t {
    K, KD, KT, K4, K5, KB, KDB, KB4, KD4, KD5, KB5, K45, KTB, S4, S5,
};

inline constexpr SystemId kAllSystems[] = {
    SystemId::K,   SystemId::KD,  SystemId::KT,  SystemId::K4,  SystemId::K5,
    SystemId::KB,  SystemId::KDB, SystemId::KB4, SystemId::KD4, SystemId::KD5,
    SystemId::KB5, SystemId::K45, SystemId::KTB, SystemId::S4,  SystemId::S5,
};

const char* system_name(SystemId s);
std::optional<SystemId> system_from_name(std::string_view s);

using RuleSet = std::uint32_t; // bit per RuleName

constexpr RuleSet rule_bit(RuleName r) { return RuleSet{1} << static_cast<unsigned>(r); }
constexpr bool has_rule(RuleSet s, RuleName r) { return (s & rule_bit(r)) != 0; }

RuleSet rules_of(SystemId s);

// Frame-class correspondents of a system's axioms.
struct FrameClass {
    bool serial = false;     // D
    bool reflexive = false;  // T
    bool transitive = false; // 4
    bool symmetric = false;  // B
    bool euclidean = false;  // 5
};

FrameClass frame_class_of(SystemId s);

// ---------------------------------------------------------------------------
// Instance enumeration for search and fuzzing.  Complete over the rules
// in `rules`, with INS/JUX payloads drawn from `payload_pool`, in a
// deterministic order.
std::vector<RuleInstance> enumerate_instances(const Graph& g, RuleSet rules,
                                              const std::vector<Graph>& payload_pool);
std::vector<RuleInstance> enumerate_instances(const Graph& g, SystemId system,
                                              const std::vector<Graph>& payload_pool);

} // namespace pmk
