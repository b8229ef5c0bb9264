#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "slatesim/agents/agent.hpp"

namespace slatesim::agents {

/// Recommends a uniformly random duplicate-free ordered k-subset of the
/// candidate corpus.
class RandomAgent final : public Agent {
  public:
    AgentStep step(const Observation&, const History&, const Corpus& corpus, int slate_size,
                   Rng& rng) override {
        if (corpus.size() < static_cast<std::size_t>(slate_size)) {
            throw CorpusTooSmall("need " + std::to_string(slate_size) + " documents, corpus has " +
                                 std::to_string(corpus.size()));
        }
        std::vector<int> ids;
        ids.reserve(corpus.size());
        for (const Document& d : corpus.documents()) ids.push_back(d.id);
        // Partial Fisher-Yates: the first k entries are a uniform ordered draw.
        for (int i = 0; i < slate_size; ++i) {
            std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(i),
                                                            ids.size() - 1);
            std::swap(ids[static_cast<std::size_t>(i)], ids[pick(rng)]);
        }
        AgentStep out;
        out.slate.items.assign(ids.begin(), ids.begin() + slate_size);
        return out;
    }

    void update(const Observation&, double, bool) override {}

    std::string kind() const override { return "random"; }
};

}  // namespace slatesim::agents
