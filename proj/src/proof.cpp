#include "pmk/proof.hpp"

#include <array>

namespace pmk {

namespace {
constexpr std::array<const char*, 25> kMacroNames = {
    "DM1", "DM2", "CP", "TR", "PF", "MP", "AndL", "AndR", "OrL1", "OrL2",
    "OrIntro", "NL", "NR", "RG1", "RG2", "D1", "D2", "UMN", "UMP", "UMDB",
    "RE", "Nec", "CutE", "T-minus-case1", "T-minus-case2",
};
}

const char* macro_name(MacroName m) { return kMacroNames[static_cast<std::size_t>(m)]; }

std::optional<MacroName> macro_from_name(std::string_view s) {
    for (std::size_t i = 0; i < kMacroNames.size(); ++i)
        if (s == kMacroNames[i]) return static_cast<MacroName>(i);
    return std::nullopt;
}

Graph GraphContext::fill(const Graph& x) const {
    Graph area = subgraph_at(skeleton, slot);
    return replace_at(skeleton, slot, Graph::juxtapose(area, x));
}

namespace {

CheckResult fail(std::size_t step, std::string reason) {
    return CheckResult{false, step, std::move(reason)};
}

} // namespace

CheckResult check_with_rules(const Proof& p, RuleSet rules) {
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        const ProofStep& s = p.steps[i];
        for (std::size_t pr : s.premises)
            if (pr >= i) return fail(i, "premise index does not precede the step");
        Graph got;
        switch (s.kind) {
        case StepKind::Axiom:
            if (!s.premises.empty()) return fail(i, "axiom takes no premises");
            got = Graph::sa();
            break;
        case StepKind::Kernel: {
            if (s.premises.size() != 1) return fail(i, "kernel step takes one premise");
            if (s.rule.rule == RuleName::JUX)
                return fail(i, "juxtaposition must cite two proved premises");
            if (!has_rule(rules, s.rule.rule))
                return fail(i, std::string(rule_error_name(RuleErrorKind::NotInSystem)) + ": " +
                                   rule_name(s.rule.rule));
            try {
                got = apply_rule(p.steps[s.premises[0]].result, s.rule);
            } catch (const RuleError& e) {
                return fail(i, std::string(rule_error_name(e.kind)) + ": " + e.what());
            }
            break;
        }
        case StepKind::Jux: {
            if (s.premises.size() != 2) return fail(i, "juxtaposition takes two premises");
            if (!has_rule(rules, RuleName::JUX))
                return fail(i, rule_error_name(RuleErrorKind::NotInSystem));
            got = Graph::juxtapose(p.steps[s.premises[0]].result,
                                   p.steps[s.premises[1]].result);
            break;
        }
        case StepKind::Macro: {
            std::vector<Graph> prem;
            for (std::size_t pr : s.premises) prem.push_back(p.steps[pr].result);
            std::vector<ElabStep> body;
            try {
                body = elaborate(s.macro, prem, s.params);
            } catch (const SchemaError& e) {
                return fail(i, std::string("schema mismatch: ") + e.what());
            } catch (const RuleError& e) {
                return fail(i, std::string("macro elaboration: ") +
                                   rule_error_name(e.kind) + ": " + e.what());
            }
            // Re-run the elaborated steps against the active rule set.
            std::vector<Graph> local;
            for (const ElabStep& es : body) {
                auto resolve = [&](const ElabRef& r) -> const Graph& {
                    return r.is_input ? prem[r.index] : local[r.index];
                };
                Graph g;
                switch (es.kind) {
                case StepKind::Axiom: g = Graph::sa(); break;
                case StepKind::Kernel: {
                    if (!has_rule(rules, es.rule.rule))
                        return fail(i, std::string(rule_error_name(RuleErrorKind::NotInSystem)) +
                                           " (in macro): " + rule_name(es.rule.rule));
                    try {
                        g = apply_rule(resolve(es.premise), es.rule);
                    } catch (const RuleError& e) {
                        return fail(i, std::string("macro step: ") + rule_error_name(e.kind) +
                                           ": " + e.what());
                    }
                    break;
                }
                case StepKind::Jux:
                    if (!has_rule(rules, RuleName::JUX))
                        return fail(i, rule_error_name(RuleErrorKind::NotInSystem));
                    g = Graph::juxtapose(resolve(es.premise), resolve(es.premise2));
                    break;
                default: return fail(i, "macro elaboration emitted a non-kernel step");
                }
                if (g != es.result) return fail(i, "macro step result mismatch");
                local.push_back(std::move(g));
            }
            if (body.empty()) {
                if (prem.size() != 1) return fail(i, "empty elaboration needs one premise");
                got = prem[0];
            } else {
                got = local.back();
            }
            break;
        }
        }
        if (got != s.result) return fail(i, "claimed result does not match recomputation");
    }
    if (p.steps.empty()) return fail(0, "empty proof");
    return CheckResult{};
}

CheckResult check(const Proof& p) { return check_with_rules(p, rules_of(p.system)); }

Graph macro_conclusion(MacroName m, const std::vector<Graph>& premises,
                       const MacroParams& params) {
    std::vector<ElabStep> body = elaborate(m, premises, params);
    if (body.empty()) {
        if (premises.size() != 1) throw SchemaError("empty elaboration needs one premise");
        return premises[0];
    }
    return body.back().result;
}

std::vector<FlatStep> flatten_proof(const Proof& p) {
    std::vector<FlatStep> out;
    std::vector<std::size_t> step_to_flat(p.steps.size());
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        const ProofStep& s = p.steps[i];
        switch (s.kind) {
        case StepKind::Axiom:
            out.push_back(FlatStep{StepKind::Axiom, {}, 0, 0, Graph::sa()});
            break;
        case StepKind::Kernel:
            out.push_back(FlatStep{StepKind::Kernel, s.rule, step_to_flat[s.premises[0]], 0,
                                   s.result});
            break;
        case StepKind::Jux:
            out.push_back(FlatStep{StepKind::Jux, {}, step_to_flat[s.premises[0]],
                                   step_to_flat[s.premises[1]], s.result});
            break;
        case StepKind::Macro: {
            std::vector<Graph> prem;
            for (std::size_t pr : s.premises) prem.push_back(p.steps[pr].result);
            std::vector<ElabStep> body = elaborate(s.macro, prem, s.params);
            if (body.empty()) {
                step_to_flat[i] = step_to_flat[s.premises[0]];
                continue;
            }
            std::vector<std::size_t> local_to_flat(body.size());
            for (std::size_t k = 0; k < body.size(); ++k) {
                const ElabStep& es = body[k];
                auto ref = [&](const ElabRef& r) {
                    return r.is_input ? step_to_flat[s.premises[r.index]]
                                      : local_to_flat[r.index];
                };
                switch (es.kind) {
                case StepKind::Axiom:
                    out.push_back(FlatStep{StepKind::Axiom, {}, 0, 0, Graph::sa()});
                    break;
                case StepKind::Kernel:
                    out.push_back(
                        FlatStep{StepKind::Kernel, es.rule, ref(es.premise), 0, es.result});
                    break;
                case StepKind::Jux:
                    out.push_back(FlatStep{StepKind::Jux, {}, ref(es.premise),
                                           ref(es.premise2), es.result});
                    break;
                default: throw SchemaError("macro elaboration emitted a macro step");
                }
                local_to_flat[k] = out.size() - 1;
            }
            step_to_flat[i] = out.size() - 1;
            continue;
        }
        }
        step_to_flat[i] = out.size() - 1;
    }
    return out;
}

std::size_t ProofBuilder::axiom() {
    ProofStep s;
    s.kind = StepKind::Axiom;
    s.result = Graph::sa();
    proof_.steps.push_back(std::move(s));
    return proof_.steps.size() - 1;
}

std::size_t ProofBuilder::kernel(std::size_t premise, RuleInstance r) {
    ProofStep s;
    s.kind = StepKind::Kernel;
    s.result = apply_rule(proof_.steps[premise].result, r);
    s.rule = std::move(r);
    s.premises = {premise};
    proof_.steps.push_back(std::move(s));
    return proof_.steps.size() - 1;
}

std::size_t ProofBuilder::jux(std::size_t a, std::size_t b) {
    ProofStep s;
    s.kind = StepKind::Jux;
    s.premises = {a, b};
    s.result = Graph::juxtapose(proof_.steps[a].result, proof_.steps[b].result);
    proof_.steps.push_back(std::move(s));
    return proof_.steps.size() - 1;
}

std::size_t ProofBuilder::macro(MacroName m, std::vector<std::size_t> premises,
                                MacroParams params) {
    std::vector<Graph> prem;
    for (std::size_t pr : premises) prem.push_back(proof_.steps[pr].result);
    ProofStep s;
    s.kind = StepKind::Macro;
    s.macro = m;
    s.result = macro_conclusion(m, prem, params);
    s.premises = std::move(premises);
    s.params = std::move(params);
    proof_.steps.push_back(std::move(s));
    return proof_.steps.size() - 1;
}

} // namespace pmk
