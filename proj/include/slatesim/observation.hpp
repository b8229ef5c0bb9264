#pragma once

#include <set>
#include <string>

#include "slatesim/types.hpp"

namespace slatesim {

/// Per-field whitelist controlling which latent features leak into the
/// agent-visible observation. Named demographics in
/// UserState::observable_features are always visible.
struct ObservabilityConfig {
    std::set<std::string> user_fields;  // subset of {"interests","budget","satisfaction"}
    std::set<std::string> doc_fields{"topics", "length"};  // "quality" opt-in
};

/// Projects the full state onto the whitelist. Pure: equal inputs yield
/// equal outputs; the returned observation carries no last_response.
inline Observation project_observation(const UserState& state, const Corpus& corpus,
                                       const ObservabilityConfig& cfg) {
    Observation obs;
    obs.user_observable = state.observable_features;
    if (cfg.user_fields.count("interests")) {
        for (std::size_t i = 0; i < state.interests.size(); ++i) {
            obs.user_observable["interest_" + std::to_string(i)] = state.interests[i];
        }
    }
    if (cfg.user_fields.count("budget")) obs.user_observable["budget"] = state.budget;
    if (cfg.user_fields.count("satisfaction")) {
        obs.user_observable["satisfaction"] = state.satisfaction;
    }
    obs.doc_observables.reserve(corpus.size());
    for (const Document& d : corpus.documents()) {
        DocObservable od;
        od.id = d.id;
        if (cfg.doc_fields.count("topics")) od.topics = d.topics;
        if (cfg.doc_fields.count("length")) od.scalars["length"] = d.length;
        if (cfg.doc_fields.count("quality") && d.observable_quality) {
            od.scalars["quality"] = *d.observable_quality;
        }
        obs.doc_observables.push_back(std::move(od));
    }
    return obs;
}

}  // namespace slatesim
