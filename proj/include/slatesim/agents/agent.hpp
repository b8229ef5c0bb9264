#pragma once

#include <map>
#include <memory>
#include <string>

#include <json.hpp>

#include "slatesim/errors.hpp"
#include "slatesim/rng.hpp"
#include "slatesim/types.hpp"

namespace slatesim {

struct AgentStep {
    Slate slate;
    std::map<std::string, double> diagnostics;  // q-values, ucb indices, ...
};

inline constexpr int kCheckpointVersion = 1;

/// A recommender agent. Agents are observation-pure: they see only the
/// observation, the bounded history and the candidate corpus — never the
/// latent user state. Stateful learners are single-owner; frozen clones are
/// read-only and safe to evaluate in parallel.
class Agent {
  public:
    virtual ~Agent() = default;

    virtual AgentStep step(const Observation& obs, const History& history, const Corpus& corpus,
                           int slate_size, Rng& rng) = 0;

    /// Policy update after the environment turn completes. obs is the
    /// post-transition observation (the same one the next step call sees).
    virtual void update(const Observation& obs, double reward, bool terminal) = 0;

    /// Resets per-episode transient state; learned parameters survive.
    virtual void begin_episode() {}

    /// Frozen agents act greedily and never change persistent state.
    virtual void set_frozen(bool frozen) { frozen_ = frozen; }
    bool frozen() const { return frozen_; }

    virtual std::string kind() const = 0;

    /// Versioned serialization of persistent state. Per-episode scratch is
    /// deliberately excluded; checkpoints are taken at episode boundaries.
    virtual nlohmann::json checkpoint() const {
        return {{"version", kCheckpointVersion}, {"kind", kind()}, {"state", state_to_json()}};
    }

    virtual void restore(const nlohmann::json& j) {
        if (!j.is_object() || !j.contains("version") || !j.contains("kind")) {
            throw CorruptCheckpoint("checkpoint lacks version/kind fields");
        }
        if (j.at("version") != kCheckpointVersion) {
            throw VersionMismatch("unsupported checkpoint version");
        }
        if (j.at("kind") != kind()) {
            throw VersionMismatch("checkpoint is for agent kind '" +
                                  j.at("kind").get<std::string>() + "', expected '" + kind() +
                                  "'");
        }
        state_from_json(j.contains("state") ? j.at("state") : nlohmann::json::object());
    }

  protected:
    virtual nlohmann::json state_to_json() const { return nlohmann::json::object(); }
    virtual void state_from_json(const nlohmann::json&) {}

    bool frozen_ = false;
};

}  // namespace slatesim
