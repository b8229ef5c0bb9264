#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "slatesim/agents/agent.hpp"

namespace slatesim::agents {

/// Per-topic impression and click statistics backing the UCB1 index.
struct BanditStats {
    std::vector<int64_t> impressions;
    std::vector<int64_t> clicks;

    int64_t total_impressions() const {
        int64_t n = 0;
        for (int64_t x : impressions) n += x;
        return n;
    }

    void resize(std::size_t num_topics) {
        if (impressions.size() < num_topics) {
            impressions.resize(num_topics, 0);
            clicks.resize(num_topics, 0);
        }
    }
};

/// Topic bandit: picks the topic maximizing x/n_i + sqrt(2 ln n / n_i),
/// trying unpulled topics first in id order, then recommends that topic's
/// best candidates. Statistics come from a ClusterClickStats layer when one
/// wraps this agent; the internal counters cover bare usage.
class Ucb1Agent final : public Agent {
  public:
    AgentStep step(const Observation& obs, const History&, const Corpus& corpus, int slate_size,
                   Rng&) override {
        if (corpus.size() < static_cast<std::size_t>(slate_size)) {
            throw CorpusTooSmall("need " + std::to_string(slate_size) + " documents, corpus has " +
                                 std::to_string(corpus.size()));
        }
        const std::size_t num_topics = topic_count(corpus);
        stats_.resize(num_topics);
        const BanditStats stats = layer_stats(obs, num_topics).value_or(stats_);

        // Topics with no candidate document are never considered.
        std::vector<bool> available(num_topics, false);
        for (const Document& d : corpus.documents()) {
            available[static_cast<std::size_t>(d.dominant_topic())] = true;
        }

        const int64_t total = std::max<int64_t>(stats.total_impressions(), 1);
        int best_topic = -1;
        double best_index = 0.0;
        for (std::size_t t = 0; t < num_topics; ++t) {
            if (!available[t]) continue;
            if (stats.impressions[t] == 0) {  // unpulled first, in id order
                best_topic = static_cast<int>(t);
                best_index = std::numeric_limits<double>::infinity();
                break;
            }
            const double n_t = static_cast<double>(stats.impressions[t]);
            const double mean = static_cast<double>(stats.clicks[t]) / n_t;
            const double index = mean + std::sqrt(2.0 * std::log(static_cast<double>(total)) / n_t);
            if (best_topic < 0 || index > best_index) {
                best_topic = static_cast<int>(t);
                best_index = index;
            }
        }

        AgentStep out;
        out.slate = build_slate(corpus, best_topic, slate_size);
        out.diagnostics["topic"] = static_cast<double>(best_topic);
        out.diagnostics["ucb_index"] = best_index;
        last_slate_topics_.clear();
        for (int id : out.slate.items) {
            last_slate_topics_.push_back(corpus.by_id(id).dominant_topic());
        }
        return out;
    }

    void update(const Observation& obs, double, bool) override {
        if (frozen_) return;
        if (!obs.last_response || last_slate_topics_.empty()) return;
        stats_.resize(max_topic(last_slate_topics_) + 1);
        for (std::size_t pos = 0; pos < last_slate_topics_.size(); ++pos) {
            const auto t = static_cast<std::size_t>(last_slate_topics_[pos]);
            stats_.impressions[t] += 1;
            if (obs.last_response->chosen_index &&
                static_cast<std::size_t>(*obs.last_response->chosen_index) == pos) {
                stats_.clicks[t] += 1;
            }
        }
    }

    void begin_episode() override { last_slate_topics_.clear(); }

    std::string kind() const override { return "ucb1"; }

    const BanditStats& internal_stats() const { return stats_; }

  protected:
    nlohmann::json state_to_json() const override {
        return {{"impressions", stats_.impressions}, {"clicks", stats_.clicks}};
    }

    void state_from_json(const nlohmann::json& j) override {
        if (!j.contains("impressions") || !j.contains("clicks")) {
            throw CorruptCheckpoint("ucb1 checkpoint lacks statistics");
        }
        stats_.impressions = j.at("impressions").get<std::vector<int64_t>>();
        stats_.clicks = j.at("clicks").get<std::vector<int64_t>>();
        last_slate_topics_.clear();
    }

  private:
    static std::size_t topic_count(const Corpus& corpus) {
        return corpus.documents().front().topics.size();
    }

    static std::size_t max_topic(const std::vector<int>& topics) {
        return static_cast<std::size_t>(*std::max_element(topics.begin(), topics.end()));
    }

    /// Reconstructs stats published by a ClusterClickStats layer, if any.
    static std::optional<BanditStats> layer_stats(const Observation& obs,
                                                  std::size_t num_topics) {
        if (!obs.user_observable.count("topic_impressions_0")) return std::nullopt;
        BanditStats stats;
        stats.resize(num_topics);
        for (std::size_t t = 0; t < num_topics; ++t) {
            const std::string suffix = std::to_string(t);
            auto imp = obs.user_observable.find("topic_impressions_" + suffix);
            auto clk = obs.user_observable.find("topic_clicks_" + suffix);
            if (imp == obs.user_observable.end() || clk == obs.user_observable.end()) break;
            stats.impressions[t] = static_cast<int64_t>(imp->second);
            stats.clicks[t] = static_cast<int64_t>(clk->second);
        }
        return stats;
    }

    /// k docs of the chosen topic ranked by observable quality (ties by
    /// lower id); remaining slots fill with the lowest-id unused docs.
    static Slate build_slate(const Corpus& corpus, int topic, int slate_size) {
        struct Ranked {
            double score;
            int id;
        };
        std::vector<Ranked> in_topic;
        std::vector<int> others;
        for (const Document& d : corpus.documents()) {
            if (d.dominant_topic() == topic) {
                in_topic.push_back({d.observable_quality.value_or(0.0), d.id});
            } else {
                others.push_back(d.id);
            }
        }
        std::stable_sort(in_topic.begin(), in_topic.end(), [](const Ranked& a, const Ranked& b) {
            if (a.score != b.score) return a.score > b.score;
            return a.id < b.id;
        });
        std::sort(others.begin(), others.end());
        Slate slate;
        for (const Ranked& r : in_topic) {
            if (static_cast<int>(slate.items.size()) == slate_size) break;
            slate.items.push_back(r.id);
        }
        for (int id : others) {
            if (static_cast<int>(slate.items.size()) == slate_size) break;
            slate.items.push_back(id);
        }
        return slate;
    }

    BanditStats stats_;
    std::vector<int> last_slate_topics_;
};

}  // namespace slatesim::agents
