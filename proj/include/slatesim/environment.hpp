#pragma once

#include <optional>
#include <string>

#include "slatesim/choice.hpp"
#include "slatesim/observation.hpp"
#include "slatesim/rng.hpp"
#include "slatesim/types.hpp"

namespace slatesim {

/// An environment bundles a user sampler, document sampler, choice model
/// configuration, transition model, reward definition and termination rule.
/// Instances are single-owner mutable state, one per episode stream; clones
/// may run in parallel with independent rngs.
class Environment {
  public:
    virtual ~Environment() = default;

    /// Starts a new episode: samples a fresh user and, unless the corpus is
    /// held fixed, a fresh candidate corpus.
    virtual void reset(Rng& rng) = 0;

    virtual const UserState& state() const = 0;
    virtual const Corpus& corpus() const = 0;
    virtual const ChoiceConfig& choice_config() const = 0;
    virtual const ObservabilityConfig& observability() const = 0;
    virtual int slate_size() const = 0;
    virtual int num_topics() const = 0;

    /// Completes a sampled choice into a full response: engagement and the
    /// post-consumption quality reveal.
    virtual Response respond(const Slate& slate, std::optional<int> chosen_index, Rng& rng) = 0;

    /// Advances the user state given the consumed (or skipped) slate.
    virtual void apply_transition(const Slate& slate, const Response& response, Rng& rng) = 0;

    /// True once the episode must end; step counts completed turns.
    virtual bool is_terminal(int step) const = 0;

    virtual double reward(const Response& response) const = 0;

    virtual std::string kind() const = 0;
};

}  // namespace slatesim
