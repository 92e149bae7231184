#pragma once

// Reduction trace: the audit log of a kernelization run.  Serializes to
// the JSON schema {initial:{n,m,k}, events:[{rule, witness, removed,
// forced, k_after}], final:{status, n, m, k}} with a problem tag.

#include <optional>
#include <string>

#include "json.hpp"

#include "graph.hpp"

namespace pick {

struct ReductionEvent {
    std::string rule;                 // cc | twins | sunflower | kjoin | 1branch | 2branch | reject
    std::string witness_kind;
    std::vector<int> witness_vertices;
    std::optional<Edge> pair;         // sunflower forced pair
    int multiplicity = 0;             // sunflower petal count
    VertexSet removed;                // original ids
    EdgeSet forced;                   // original id pairs
    int k_after = 0;
};

struct ReductionTrace {
    std::string problem; // pic | bcc | bcd
    int initial_n = 0;
    long initial_m = 0;
    int initial_k = 0;
    std::vector<ReductionEvent> events;
    std::string status = "reduced"; // reduced | rejected_no_instance | rejected_budget
    int final_n = 0;
    long final_m = 0;
    int final_k = 0;

    bool rejected() const { return status != "reduced"; }

    nlohmann::json to_json() const
    {
        nlohmann::json j;
        j["problem"] = problem;
        j["initial"] = {{"n", initial_n}, {"m", initial_m}, {"k", initial_k}};
        j["events"] = nlohmann::json::array();
        for (const auto& e : events) {
            nlohmann::json w;
            w["kind"] = e.witness_kind;
            w["vertices"] = e.witness_vertices;
            if (e.pair)
                w["pair"] = {e.pair->first, e.pair->second};
            if (e.multiplicity > 0)
                w["multiplicity"] = e.multiplicity;
            nlohmann::json forced = nlohmann::json::array();
            for (auto [u, v] : e.forced)
                forced.push_back({u, v});
            j["events"].push_back({{"rule", e.rule},
                                   {"witness", w},
                                   {"removed", e.removed},
                                   {"forced", forced},
                                   {"k_after", e.k_after}});
        }
        j["final"] = {{"status", status}, {"n", final_n}, {"m", final_m}, {"k", final_k}};
        return j;
    }

    std::string to_json_string() const { return to_json().dump(2) + "\n"; }
};

} // namespace pick
