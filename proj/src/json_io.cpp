#include "pmk/json_io.hpp"

#include <json.hpp>

namespace pmk {

using nlohmann::json;

namespace {

json address_to_json(const Address& a) {
    json out = json::array();
    for (std::size_t i : a.path) out.push_back(i);
    return out;
}

Address address_from_json(const json& j) {
    Address a = Address::root();
    for (const auto& v : j) a.path.push_back(v.get<std::size_t>());
    return a;
}

json rule_to_json(const RuleInstance& r) {
    json out;
    out["rule"] = rule_name(r.rule);
    out["area"] = address_to_json(r.area);
    if (!r.indices.empty()) out["indices"] = r.indices;
    if (r.target) out["target"] = address_to_json(*r.target);
    if (r.payload) out["payload"] = r.payload->print();
    if (r.partition) {
        out["partition"] = json::array({r.partition->first, r.partition->second});
    }
    return out;
}

RuleInstance rule_from_json(const json& j) {
    RuleInstance r;
    auto rn = rule_from_name(j.at("rule").get<std::string>());
    if (!rn) throw SchemaError("unknown rule name in proof file");
    r.rule = *rn;
    r.area = address_from_json(j.at("area"));
    if (j.contains("indices")) r.indices = j.at("indices").get<std::vector<std::size_t>>();
    if (j.contains("target")) r.target = address_from_json(j.at("target"));
    if (j.contains("payload")) r.payload = parse(j.at("payload").get<std::string>());
    if (j.contains("partition"))
        r.partition = std::make_pair(j.at("partition")[0].get<std::vector<std::size_t>>(),
                                     j.at("partition")[1].get<std::vector<std::size_t>>());
    return r;
}

json params_to_json(const MacroParams& p) {
    json out = json::object();
    if (p.index) out["index"] = *p.index;
    if (p.index2) out["index2"] = *p.index2;
    if (p.graph) out["graph"] = p.graph->print();
    if (p.graph2) out["graph2"] = p.graph2->print();
    if (p.context) {
        out["context"] = json{{"graph", p.context->skeleton.print()},
                              {"slot", address_to_json(p.context->slot)}};
    }
    return out;
}

MacroParams params_from_json(const json& j) {
    MacroParams p;
    if (j.contains("index")) p.index = j.at("index").get<std::size_t>();
    if (j.contains("index2")) p.index2 = j.at("index2").get<std::size_t>();
    if (j.contains("graph")) p.graph = parse(j.at("graph").get<std::string>());
    if (j.contains("graph2")) p.graph2 = parse(j.at("graph2").get<std::string>());
    if (j.contains("context")) {
        GraphContext ctx;
        ctx.skeleton = parse(j.at("context").at("graph").get<std::string>());
        ctx.slot = address_from_json(j.at("context").at("slot"));
        p.context = std::move(ctx);
    }
    return p;
}

} // namespace

std::string proof_to_json(const Proof& p) {
    json steps = json::array();
    for (const ProofStep& s : p.steps) {
        json st;
        switch (s.kind) {
        case StepKind::Axiom: st["kind"] = "axiom"; break;
        case StepKind::Kernel:
            st["kind"] = "kernel";
            st.update(rule_to_json(s.rule));
            st["premises"] = s.premises;
            break;
        case StepKind::Jux:
            st["kind"] = "jux";
            st["premises"] = s.premises;
            break;
        case StepKind::Macro:
            st["kind"] = "macro";
            st["rule"] = macro_name(s.macro);
            st["premises"] = s.premises;
            st["params"] = params_to_json(s.params);
            break;
        }
        st["result"] = s.result.print();
        steps.push_back(std::move(st));
    }
    json out{{"system", system_name(p.system)}, {"steps", std::move(steps)}};
    return out.dump(2);
}

Proof proof_from_json(const std::string& text) {
    json j = json::parse(text);
    Proof p;
    auto sys = system_from_name(j.at("system").get<std::string>());
    if (!sys) throw SchemaError("unknown system in proof file");
    p.system = *sys;
    for (const json& st : j.at("steps")) {
        ProofStep s;
        std::string kind = st.at("kind").get<std::string>();
        if (kind == "axiom") {
            s.kind = StepKind::Axiom;
        } else if (kind == "kernel") {
            s.kind = StepKind::Kernel;
            s.rule = rule_from_json(st);
            s.premises = st.at("premises").get<std::vector<std::size_t>>();
        } else if (kind == "jux") {
            s.kind = StepKind::Jux;
            s.premises = st.at("premises").get<std::vector<std::size_t>>();
        } else if (kind == "macro") {
            s.kind = StepKind::Macro;
            auto m = macro_from_name(st.at("rule").get<std::string>());
            if (!m) throw SchemaError("unknown macro name in proof file");
            s.macro = *m;
            s.premises = st.at("premises").get<std::vector<std::size_t>>();
            if (st.contains("params")) s.params = params_from_json(st.at("params"));
        } else {
            throw SchemaError("unknown step kind: " + kind);
        }
        s.result = parse(st.at("result").get<std::string>());
        p.steps.push_back(std::move(s));
    }
    return p;
}

std::string sk_to_json(const SKProof& p) {
    std::function<json(const SKProof&)> rec = [&](const SKProof& n) -> json {
        json out;
        out["rule"] = sk_rule_name(n.rule);
        out["left"] = n.seq.left.print();
        out["right"] = n.seq.right.print();
        if (!n.children.empty()) {
            json kids = json::array();
            for (const SKProof& c : n.children) kids.push_back(rec(c));
            out["children"] = std::move(kids);
        }
        return out;
    };
    return rec(p).dump(2);
}

SKProof sk_from_json(const std::string& text) {
    json j = json::parse(text);
    std::function<SKProof(const json&)> rec = [&](const json& n) -> SKProof {
        SKProof out;
        auto r = sk_rule_from_name(n.at("rule").get<std::string>());
        if (!r) throw SchemaError("unknown SK rule in proof file");
        out.rule = *r;
        out.seq.left = parse_formula(n.at("left").get<std::string>());
        out.seq.right = parse_formula(n.at("right").get<std::string>());
        if (n.contains("children"))
            for (const json& c : n.at("children")) out.children.push_back(rec(c));
        return out;
    };
    return rec(j);
}

std::string countermodel_to_json(const Countermodel& c) {
    json rows = json::array();
    for (int u = 0; u < c.frame.n; ++u) {
        std::string row;
        for (int v = 0; v < c.frame.n; ++v)
            row += (c.frame.rows[static_cast<std::size_t>(u)] >> v & 1) ? '1' : '0';
        rows.push_back(row);
    }
    json val = json::object();
    for (const auto& [atom, set] : c.val.sets) {
        json worlds = json::array();
        for (int w = 0; w < c.frame.n; ++w)
            if (set >> w & 1) worlds.push_back(w);
        val[atom] = std::move(worlds);
    }
    json out{{"worlds", c.frame.n},
             {"adjacency", std::move(rows)},
             {"valuation", std::move(val)},
             {"world", c.world}};
    return out.dump();
}

} // namespace pmk
