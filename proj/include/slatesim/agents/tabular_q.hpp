#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "slatesim/agents/agent.hpp"

namespace slatesim::agents {

/// Configuration shared by the tabular Q-learning baselines.
struct QLearningConfig {
    double discount = 0.9;                  // gamma in [0,1)
    double epsilon = 0.1;                   // constant epsilon-greedy while training
    std::optional<double> learning_rate;    // constant alpha; unset = 1/visit_count
    int feature_bins = 5;                   // uniform bins per observation feature
    // Feature selection by name prefix; empty selects every user_observable
    // scalar. Ranges default to [0,1] unless a prefix override matches.
    std::vector<std::string> feature_prefixes;
    std::map<std::string, std::pair<double, double>> feature_ranges;
    int64_t max_actions = 20000;  // slate-enumeration cap
};

/// Q-learning over discretized observations with the slate as the action.
/// The per-document variant ("tabular_q") treats a slate as an unordered
/// document combination; the slate-as-action variant ("full_slate_q") keys
/// on the ordered tuple, enumerating all C(m,k)*k! arrangements. Both
/// enumerate lexicographically by document id, so argmax ties resolve
/// reproducibly.
class QLearningAgent : public Agent {
  public:
    explicit QLearningAgent(QLearningConfig cfg, bool ordered_slates)
        : cfg_(cfg), ordered_slates_(ordered_slates) {}

    AgentStep step(const Observation& obs, const History&, const Corpus& corpus, int slate_size,
                   Rng& rng) override {
        ensure_actions(corpus, slate_size);
        const std::string obs_key = observation_key(obs);

        std::size_t chosen = 0;
        const double eps = frozen_ ? 0.0 : cfg_.epsilon;
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        if (eps > 0.0 && unif(rng) < eps) {
            std::uniform_int_distribution<std::size_t> pick(0, actions_.size() - 1);
            chosen = pick(rng);
        } else {
            chosen = argmax_action(obs_key);
        }

        pending_ = Pending{obs_key, action_keys_[chosen]};

        AgentStep out;
        out.slate.items = actions_[chosen];
        out.diagnostics["q"] = q_value(obs_key, action_keys_[chosen]);
        out.diagnostics["num_actions"] = static_cast<double>(actions_.size());
        return out;
    }

    void update(const Observation& obs, double reward, bool terminal) override {
        if (frozen_ || !pending_) return;
        const std::string next_key = observation_key(obs);
        double bootstrap = 0.0;
        if (!terminal && !actions_.empty()) {
            bootstrap = q_value(next_key, action_keys_[argmax_action(next_key)]);
        }
        Entry& e = table_[pending_->obs_key + "|" + pending_->action_key];
        e.visits += 1;
        const double alpha = cfg_.learning_rate ? *cfg_.learning_rate : 1.0 / e.visits;
        e.q += alpha * (reward + cfg_.discount * bootstrap - e.q);
        if (terminal) pending_.reset();
    }

    void begin_episode() override { pending_.reset(); }

    std::string kind() const override { return ordered_slates_ ? "full_slate_q" : "tabular_q"; }

    double q_value(const std::string& obs_key, const std::string& action_key) const {
        auto it = table_.find(obs_key + "|" + action_key);
        return it == table_.end() ? 0.0 : it->second.q;
    }

    std::size_t table_size() const { return table_.size(); }

  protected:
    nlohmann::json state_to_json() const override {
        // std::map gives a deterministic serialization order.
        std::map<std::string, nlohmann::json> sorted;
        for (const auto& [key, entry] : table_) {
            sorted[key] = nlohmann::json::array({entry.q, entry.visits});
        }
        return {{"table", sorted}};
    }

    void state_from_json(const nlohmann::json& j) override {
        table_.clear();
        if (!j.contains("table")) throw CorruptCheckpoint("q checkpoint lacks table");
        for (const auto& [key, value] : j.at("table").items()) {
            if (!value.is_array() || value.size() != 2) {
                throw CorruptCheckpoint("malformed q table entry");
            }
            table_[key] = Entry{value[0].get<double>(), value[1].get<int64_t>()};
        }
        pending_.reset();
    }

  private:
    struct Entry {
        double q = 0.0;
        int64_t visits = 0;
    };
    struct Pending {
        std::string obs_key;
        std::string action_key;
    };

    std::string observation_key(const Observation& obs) const {
        std::string key;
        for (const auto& [name, value] : obs.user_observable) {
            if (!feature_selected(name)) continue;
            const auto [lo, hi] = feature_range(name);
            double frac = hi > lo ? (value - lo) / (hi - lo) : 0.0;
            int bin = std::clamp(static_cast<int>(frac * cfg_.feature_bins), 0,
                                 cfg_.feature_bins - 1);
            key += std::to_string(bin);
            key += ',';
        }
        return key;
    }

    bool feature_selected(const std::string& name) const {
        if (cfg_.feature_prefixes.empty()) return true;
        for (const auto& prefix : cfg_.feature_prefixes) {
            if (name.rfind(prefix, 0) == 0) return true;
        }
        return false;
    }

    std::pair<double, double> feature_range(const std::string& name) const {
        for (const auto& [prefix, range] : cfg_.feature_ranges) {
            if (name.rfind(prefix, 0) == 0) return range;
        }
        return {0.0, 1.0};
    }

    std::size_t argmax_action(const std::string& obs_key) const {
        std::size_t best = 0;
        double best_q = q_value(obs_key, action_keys_[0]);
        for (std::size_t i = 1; i < action_keys_.size(); ++i) {
            const double q = q_value(obs_key, action_keys_[i]);
            if (q > best_q) {
                best_q = q;
                best = i;
            }
        }
        return best;
    }

    void ensure_actions(const Corpus& corpus, int slate_size) {
        std::vector<int> ids;
        ids.reserve(corpus.size());
        for (const Document& d : corpus.documents()) ids.push_back(d.id);
        std::sort(ids.begin(), ids.end());
        if (ids == action_ids_ && slate_size == action_slate_size_) return;

        if (ids.size() < static_cast<std::size_t>(slate_size)) {
            throw CorpusTooSmall("need " + std::to_string(slate_size) + " documents, corpus has " +
                                 std::to_string(ids.size()));
        }
        check_action_count(ids.size(), slate_size);

        actions_.clear();
        action_keys_.clear();
        std::vector<int> prefix;
        prefix.reserve(static_cast<std::size_t>(slate_size));
        if (ordered_slates_) {
            std::vector<bool> used(ids.size(), false);
            enumerate_permutations(ids, slate_size, used, prefix);
        } else {
            enumerate_combinations(ids, slate_size, 0, prefix);
        }
        action_ids_ = std::move(ids);
        action_slate_size_ = slate_size;
        action_keys_.reserve(actions_.size());
        for (const auto& a : actions_) {
            std::string key;
            for (int id : a) {
                key += std::to_string(id);
                key += ',';
            }
            action_keys_.push_back(std::move(key));
        }
    }

    void check_action_count(std::size_t m, int k) const {
        double count = 1.0;
        for (int i = 0; i < k; ++i) count *= static_cast<double>(m - i);  // P(m,k)
        if (!ordered_slates_) {
            for (int i = 2; i <= k; ++i) count /= i;  // C(m,k)
        }
        if (count > static_cast<double>(cfg_.max_actions)) {
            throw ActionSpaceOverflow("slate enumeration needs " + std::to_string(count) +
                                      " actions, cap is " + std::to_string(cfg_.max_actions));
        }
    }

    // ids come in ascending order, so both recursions emit actions in
    // lexicographic id order.
    void enumerate_combinations(const std::vector<int>& ids, int k, std::size_t start,
                                std::vector<int>& prefix) {
        if (static_cast<int>(prefix.size()) == k) {
            actions_.push_back(prefix);
            return;
        }
        const std::size_t remaining = static_cast<std::size_t>(k) - prefix.size();
        for (std::size_t i = start; i + remaining <= ids.size(); ++i) {
            prefix.push_back(ids[i]);
            enumerate_combinations(ids, k, i + 1, prefix);
            prefix.pop_back();
        }
    }

    void enumerate_permutations(const std::vector<int>& ids, int k, std::vector<bool>& used,
                                std::vector<int>& prefix) {
        if (static_cast<int>(prefix.size()) == k) {
            actions_.push_back(prefix);
            return;
        }
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (used[i]) continue;
            used[i] = true;
            prefix.push_back(ids[i]);
            enumerate_permutations(ids, k, used, prefix);
            prefix.pop_back();
            used[i] = false;
        }
    }

    QLearningConfig cfg_;
    bool ordered_slates_;
    std::unordered_map<std::string, Entry> table_;
    std::optional<Pending> pending_;

    // Enumeration cache, rebuilt when the candidate set changes.
    std::vector<int> action_ids_;
    int action_slate_size_ = -1;
    std::vector<std::vector<int>> actions_;
    std::vector<std::string> action_keys_;
};

}  // namespace slatesim::agents
