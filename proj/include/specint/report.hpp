#pragma once

// JSON report documents: schema-versioned envelopes plus serializers for the
// domain types that appear in CLI output and golden trace files.

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "specint/family.hpp"
#include "specint/height.hpp"
#include "specint/intset.hpp"
#include "specint/numbertheory.hpp"
#include "specint/numeric.hpp"
#include "specint/procedure.hpp"
#include "specint/search.hpp"
#include "specint/version.hpp"

namespace specint {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Envelope
// ---------------------------------------------------------------------------

struct ReportDocument {
    std::string command;
    Json inputs = Json::object();
    std::optional<uint64_t> seed;  // recorded for every randomized run
    Json results = Json::object();
    std::vector<std::string> violations;
    double timing_ms = 0.0;

    bool ok() const { return violations.empty(); }

    Json to_json() const {
        Json doc;
        doc["tool"] = "specint";
        doc["version"] = version();
        doc["schema_version"] = schema_version;
        doc["command"] = command;
        doc["inputs"] = inputs;
        if (seed) doc["seed"] = *seed;
        doc["results"] = results;
        doc["violations"] = violations;
        doc["timing_ms"] = timing_ms;
        doc["ok"] = ok();
        return doc;
    }
};

// ---------------------------------------------------------------------------
// Domain serializers
// ---------------------------------------------------------------------------

inline Json intset_to_json(const IntSet& s) {
    Json arr = Json::array();
    for (int v : s.values()) arr.push_back(v);
    return arr;
}

// Dyadic densities are exact: numerator (decimal string, always integral) and
// the power-of-two denominator exponent.
inline Json dyadic_to_json(const DyadicRational& d) {
    Json j;
    j["num"] = d.num_str();
    j["log2den"] = d.log2den;
    return j;
}

// Families embed in reports in the family file format (round-trips through
// read_family).
inline Json family_to_json(const Family& f) { return family_to_string(f); }

inline Json step_to_json(const StepRecord& s) {
    Json j;
    j["index"] = s.index;
    j["vertex"] = s.vertex;
    j["case"] = to_string(s.step_case);
    j["P_before"] = intset_to_json(s.P_before);
    j["P_after"] = intset_to_json(s.P_after);
    j["pF"] = dyadic_to_json(s.pF);
    j["pG"] = dyadic_to_json(s.pG);
    j["pF_after"] = dyadic_to_json(s.pF_after);
    j["pG_after"] = dyadic_to_json(s.pG_after);
    return j;
}

inline Json stop_state_to_json(const StoppedStateReport& r) {
    Json j;
    j["remaining_ground"] = r.remaining_ground;
    j["W_F"] = intset_to_json(r.W_F);
    j["W_G"] = intset_to_json(r.W_G);
    j["x"] = r.x;
    j["y"] = r.y;
    j["s"] = r.s;
    j["t"] = r.t;
    j["claim_ok"] = r.claim_ok;
    j["edges_F"] = r.edges_F.str();
    j["edges_G"] = r.edges_G.str();
    j["edge_ok_F"] = r.edge_ok_F;
    j["edge_ok_G"] = r.edge_ok_G;
    j["counting_bound_F"] = r.counting_bound_F.str();
    j["counting_bound_G"] = r.counting_bound_G.str();
    j["counting_claim_ok"] = r.counting_claim_ok;
    if (r.sigma) j["sigma"] = *r.sigma;
    return j;
}

inline Json trace_to_json(const ProcedureTrace& tr) {
    Json j;
    j["n0"] = tr.n0;
    j["M"] = intset_to_json(tr.M);
    j["P0"] = intset_to_json(tr.P0);
    j["strategy"] = tr.strategy == Strategy::Greedy ? "greedy" : "first";
    j["A0"] = family_to_json(tr.A0);
    j["B0"] = family_to_json(tr.B0);
    Json steps = Json::array();
    for (const auto& s : tr.steps) steps.push_back(step_to_json(s));
    j["steps"] = steps;
    j["F_final"] = family_to_json(tr.F_final);
    j["G_final"] = family_to_json(tr.G_final);
    j["stop_reason"] = to_string(tr.stop_reason);
    if (tr.stop_state)
        j["stop_state"] = stop_state_to_json(*tr.stop_state);
    else
        j["stop_state"] = nullptr;
    j["c3_count"] = tr.c3_count();
    return j;
}

inline Json search_result_to_json(const SearchResult& r, bool pair_mode) {
    Json j;
    if (pair_mode) {
        j["best_product"] = r.best_product;
        if (r.witness_pair) {
            j["witness_a"] = family_to_json(r.witness_pair->a);
            j["witness_b"] = family_to_json(r.witness_pair->b);
        }
    } else {
        j["best_size"] = r.best_size;
        j["witness"] = family_to_json(r.witness);
    }
    j["optimal"] = r.optimal;
    j["nodes_explored"] = r.nodes_explored;
    j["wall_time_seconds"] = r.wall_time_seconds;
    return j;
}

inline Json height_report_to_json(const HeightReport& r) {
    Json j;
    j["set"] = intset_to_json(r.L);
    j["h"] = r.h;
    Json chain = Json::array();
    for (const auto& e : r.witness_chain) {
        Json c;
        c["M"] = intset_to_json(e.M);
        c["next"] = intset_to_json(e.next);
        c["branch"] = e.branch;
        c["h_next"] = e.h_next;
        chain.push_back(c);
    }
    j["witness_chain"] = chain;
    j["bound_sharp"] = r.bound_sharp.str();
    return j;
}

inline Json bounds_to_json(const TwoBounds& b) {
    Json j;
    j["first_log2"] = static_cast<double>(b.first_log2);
    j["second_log2"] = static_cast<double>(b.second_log2);
    j["min_log2"] = static_cast<double>(b.min_log2);
    return j;
}

inline Json misint_to_json(const MisintReport& r) {
    Json j;
    j["n"] = r.n;
    j["t"] = r.t;
    j["gamma"] = std::to_string(r.gamma.num) + "/" + std::to_string(r.gamma.den);
    Json rows = Json::array();
    for (const auto& row : r.per_k) {
        Json x;
        x["k"] = row.k;
        x["prime_found"] = row.prime_found;
        if (row.prime_found) {
            x["p"] = row.p;
            x["t_k"] = row.t_k;
            x["term_log2"] = static_cast<double>(row.term_log2);
            x["term_capped"] = row.term_capped;
        }
        rows.push_back(x);
    }
    j["per_k"] = rows;
    j["all_primes_found"] = r.all_primes_found;
    j["all_t_k_in_range"] = r.all_t_k_in_range;
    j["first_range_cap"] = r.first_range_cap.str();
    j["middle_cap"] = r.middle_cap.str();
    j["final_cap_floor"] = r.final_cap_floor.str();
    j["final_cap_ceil"] = r.final_cap_ceil.str();
    j["total_bound"] = r.total_bound.str();
    j["total_bound_log2"] = static_cast<double>(r.total_bound_log2);
    return j;
}

inline Json constants_report_to_json(const ConstantsReport& r) {
    Json j;
    j["f_a0"] = r.f_a0;
    j["f_a0_ok"] = r.f_a0_ok;
    j["f_a"] = r.f_a;
    j["sqrt_eps"] = r.sqrt_eps;
    j["f_a_exceeds_float"] = r.f_a_exceeds_float;
    j["f_a_exceeds_exact"] = r.f_a_exceeds_exact;
    j["four_over_a"] = r.four_over_a;
    j["four_over_a_ok"] = r.four_over_a_ok;
    j["one_minus_log2_a"] = r.one_minus_log2_a;
    j["log_bound_ok"] = r.log_bound_ok;
    j["sigma_max"] = r.sigma_max;
    j["sigma_argmax"] = r.sigma_argmax;
    j["sigma_ok"] = r.sigma_ok;
    j["all_ok"] = r.all_ok;
    return j;
}

// Memo dump: JSON array of {set, h} pairs sorted by mask value.
inline Json memo_to_json(const HeightMemo& memo) {
    Json arr = Json::array();
    for (const auto& [mask, h] : memo.table) {
        Json e;
        e["set"] = intset_to_json(IntSet::from_low_word(mask));
        e["h"] = h;
        arr.push_back(e);
    }
    return arr;
}

// ---------------------------------------------------------------------------
// CSV (tabular sweeps)
// ---------------------------------------------------------------------------

inline std::string csv_escape(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(cells[i]);
    }
    out += '\n';
    return out;
}

}  // namespace specint
