#pragma once

// Serialization of reports: deterministic JSON records and the aligned text
// table. JSON integers outside the 64-bit range are emitted as decimal
// strings so nothing is ever rounded.

#include <json.hpp>

#include <string>
#include <vector>

#include "arith.hpp"
#include "obstruction.hpp"

namespace brieskorn {

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

inline json j_int(const Int& v) {
    if (fits_int64(v)) return json(to_int64(v));
    return json(to_string(v));
}

inline json j_ints(const std::vector<Int>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(j_int(x));
    return a;
}

enum class GraphDump { none, dot, json_graph };

inline json plumbing_to_json(const PlumbingGraph& g) {
    json jg;
    jg["rank"] = g.rank();
    jg["weights"] = j_ints(g.weights);
    json edges = json::array();
    for (const auto& [i, j] : g.edges) edges.push_back(json::array({i, j}));
    jg["edges"] = edges;
    json arms = json::array();
    for (const auto& arm : g.arms) {
        json ja = json::array();
        for (int v : arm) ja.push_back(v);
        arms.push_back(ja);
    }
    jg["arms"] = arms;
    return jg;
}

inline json record_json(const InvariantReport& rep, GraphDump dump = GraphDump::none) {
    json r;
    r["schema_version"] = schema_version;
    r["input"] = rep.input_echo;

    json summands = json::array();
    for (const auto& sr : rep.summands) {
        json js;
        js["multiplicities"] = j_ints(sr.summand.multiplicities);
        js["orientation"] = sr.summand.reversed ? "-" : "+";
        js["trivial"] = sr.trivial;
        if (!sr.trivial) {
            js["e0"] = j_int(sr.inv.e0);
            json fibers = json::array();
            for (const auto& [a, b] : sr.inv.fibers)
                fibers.push_back(json::array({j_int(a), j_int(b)}));
            js["fibers"] = fibers;
            js["plumbing"] = {{"rank", sr.wu.rank}, {"signature", sr.wu.sig}};
            if (dump == GraphDump::json_graph)
                js["plumbing_graph"] = plumbing_to_json(sr.graph);
            else if (dump == GraphDump::dot)
                js["plumbing_dot"] = to_dot(sr.graph);
            js["wu"] = {{"vector", j_ints(sr.wu.wu)}, {"square", j_int(sr.wu.wu_square)}};
            js["mu_bar"] = j_int(sr.mu_bar);
            js["rokhlin"] = sr.rokhlin;
            js["lattice"] = {{"rank", sr.lattice.rank},
                             {"min_char_norm", j_int(sr.lattice.min_char_norm)},
                             {"d", j_int(sr.lattice.d)},
                             {"delta", j_int(sr.lattice.delta)},
                             {"witness", j_ints(sr.lattice.witness)}};
            js["delta"] = j_int(sr.delta);
            js["projective"] =
                sr.certification == Certification::certified ? "certified" : "unknown";
        }
        summands.push_back(js);
    }
    r["summands"] = summands;

    json agg;
    agg["alpha"] = j_int(rep.aggregate.alpha);
    agg["beta"] = j_int(rep.aggregate.beta);
    agg["gamma"] = j_int(rep.aggregate.gamma);
    agg["delta"] = j_int(rep.aggregate.delta);
    agg["provenance"] = to_string(rep.aggregate.provenance);
    agg["mu_bar_total"] = j_int(rep.mu_bar_total);
    agg["rokhlin_total"] = rep.rokhlin_total;
    agg["implied_lambda_sw"] = j_int(rep.implied_lambda_sw);
    agg["lambda_sw_note"] = rep.lambda_sw_note;
    agg["uncertified"] = rep.uncertified;
    agg["order_ambiguous"] = rep.order_ambiguous;
    agg["warnings"] = rep.warnings;
    r["aggregate"] = agg;

    json verdicts = json::array();
    for (const auto& v : rep.verdicts) {
        json jv;
        jv["criterion"] = v.criterion;
        jv["outcome"] = to_string(v.outcome);
        jv["witness"] = j_ints(v.witness);
        jv["citation"] = v.citation;
        jv["statement"] = v.statement;
        verdicts.push_back(jv);
    }
    r["verdicts"] = verdicts;
    return r;
}

inline std::string record_table(const InvariantReport& rep, GraphDump dump = GraphDump::none) {
    std::string out;
    out += "input: " + rep.input_echo + "\n";
    int idx = 0;
    for (const auto& sr : rep.summands) {
        ++idx;
        out += "summand " + std::to_string(idx) + ": ";
        if (sr.summand.reversed) out += "-";
        out += "Sigma(";
        for (std::size_t j = 0; j < sr.summand.multiplicities.size(); ++j) {
            if (j) out += ",";
            out += to_string(sr.summand.multiplicities[j]);
        }
        out += ")";
        if (sr.trivial) {
            out += "  (trivial, S3)\n";
            continue;
        }
        out += "\n  e0 = " + to_string(sr.inv.e0) + ", fibers =";
        for (const auto& [a, b] : sr.inv.fibers)
            out += " (" + to_string(a) + "," + to_string(b) + ")";
        out += "\n  rank = " + std::to_string(sr.wu.rank) +
               ", signature = " + std::to_string(sr.wu.sig) +
               ", wu_square = " + to_string(sr.wu.wu_square) +
               ", mu_bar = " + to_string(sr.mu_bar) +
               ", rokhlin = " + std::to_string(sr.rokhlin);
        out += "\n  min_char_norm = " + to_string(sr.lattice.min_char_norm) +
               ", d = " + to_string(sr.lattice.d) + ", delta = " + to_string(sr.delta);
        out += "\n  projective: ";
        out += sr.certification == Certification::certified ? "certified" : "unknown";
        out += "\n";
        if (dump == GraphDump::dot) out += to_dot(sr.graph);
        else if (dump == GraphDump::json_graph) out += plumbing_to_json(sr.graph).dump() + "\n";
    }
    out += "aggregate: alpha = " + to_string(rep.aggregate.alpha) +
           ", beta = " + to_string(rep.aggregate.beta) +
           ", gamma = " + to_string(rep.aggregate.gamma) +
           ", delta = " + to_string(rep.aggregate.delta) + "  [" +
           to_string(rep.aggregate.provenance) + "]\n";
    out += "  mu_bar_total = " + to_string(rep.mu_bar_total) +
           ", rokhlin_total = " + std::to_string(rep.rokhlin_total) + "\n";
    out += "  " + rep.lambda_sw_note + "\n";
    if (rep.uncertified) out += "  UNCERTIFIED: projectivity assumed, not certified\n";
    for (const auto& w : rep.warnings) out += "  warning: " + w + "\n";
    out += "verdicts:\n";
    for (const auto& v : rep.verdicts) {
        std::string name = v.criterion;
        name.resize(14, ' ');
        out += "  " + name + " " + to_string(v.outcome) + "  witness [" +
               detail::join_ints(v.witness) + "]\n";
        out += "      " + v.statement + "\n";
    }
    return out;
}

}  // namespace brieskorn
