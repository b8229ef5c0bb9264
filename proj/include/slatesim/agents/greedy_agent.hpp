#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "slatesim/agents/agent.hpp"
#include "slatesim/choice.hpp"

namespace slatesim::agents {

/// Omniscient myopic baseline: knows the environment's choice model and the
/// user prior, and ranks candidates by f(I(u_mean, d) + L_d) using the true
/// latent document quality. Ties break toward the lower document id.
class GreedyAgent final : public Agent {
  public:
    GreedyAgent(ChoiceConfig choice, TopicVector mean_interests)
        : choice_(choice) {
        mean_user_.interests = std::move(mean_interests);
    }

    AgentStep step(const Observation&, const History&, const Corpus& corpus, int slate_size,
                   Rng&) override {
        if (corpus.size() < static_cast<std::size_t>(slate_size)) {
            throw CorpusTooSmall("need " + std::to_string(slate_size) + " documents, corpus has " +
                                 std::to_string(corpus.size()));
        }
        struct Scored {
            double value;
            int id;
        };
        std::vector<Scored> scored;
        scored.reserve(corpus.size());
        for (const Document& d : corpus.documents()) {
            scored.push_back({choice_.transform(score(mean_user_, d, choice_)), d.id});
        }
        std::stable_sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
            if (a.value != b.value) return a.value > b.value;
            return a.id < b.id;
        });
        AgentStep out;
        for (int i = 0; i < slate_size; ++i) {
            out.slate.items.push_back(scored[static_cast<std::size_t>(i)].id);
        }
        out.diagnostics["top_score"] = scored.front().value;
        return out;
    }

    void update(const Observation&, double, bool) override {}

    std::string kind() const override { return "greedy"; }

  private:
    ChoiceConfig choice_;
    UserState mean_user_;
};

}  // namespace slatesim::agents
