#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "slatesim/environment.hpp"

namespace slatesim::envs {

/// Slate environment with drifting topic interests and a session time
/// budget. Consuming a document nudges interest in its topic and burns
/// budget at a rate discounted by the document's appeal.
struct InterestEvolutionConfig {
    int num_topics = 10;
    bool one_hot_topics = true;
    double doc_length = 4.0;            // constant length l(d), time units
    std::vector<double> quality_means;  // per-topic mu_t; empty = all zero
    double quality_stddev = 0.1;
    double satisfaction_weight = 0.7;   // alpha: S = (1-alpha) I + alpha L
    double nudge_fraction = 0.3;        // y
    double positive_nudge_prob = 0.9;   // p+: move toward the topic pole
    double initial_budget = 60.0;       // B0
    double bonus_coefficient = 0.2;     // beta_b in [0,1)
    double no_click_cost = 0.5;         // tau0 charged on a null response
    double user_interest_low = -1.0;    // P_U uniform range per topic
    double user_interest_high = 1.0;
    std::vector<double> doc_topic_weights;  // P_D categorical; empty = uniform
    int slate_size = 2;
    int candidate_count = 15;
    int episode_cap = 200;  // hard cap on turns even if budget survives
    bool resample_corpus_per_episode = true;

    double quality_mean(int topic) const {
        return quality_means.empty() ? 0.0 : quality_means[static_cast<std::size_t>(topic)];
    }
};

inline UserState sample_user(const InterestEvolutionConfig& cfg, Rng& rng) {
    std::uniform_real_distribution<double> unif(cfg.user_interest_low, cfg.user_interest_high);
    std::vector<double> interests(static_cast<std::size_t>(cfg.num_topics));
    for (double& x : interests) {
        x = (cfg.user_interest_low == cfg.user_interest_high) ? cfg.user_interest_low
                                                              : unif(rng);
    }
    UserState u;
    u.interests = TopicVector(std::move(interests));
    u.budget = cfg.initial_budget;
    u.satisfaction = 0.5;
    return u;
}

namespace detail {

inline int sample_topic(const std::vector<double>& weights, int num_topics, Rng& rng) {
    if (weights.empty()) {
        std::uniform_int_distribution<int> d(0, num_topics - 1);
        return d(rng);
    }
    std::discrete_distribution<int> d(weights.begin(), weights.end());
    return d(rng);
}

}  // namespace detail

inline Corpus sample_corpus(const InterestEvolutionConfig& cfg, Rng& rng) {
    std::normal_distribution<double> noise(0.0, cfg.quality_stddev);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Document> docs;
    docs.reserve(static_cast<std::size_t>(cfg.candidate_count));
    for (int i = 0; i < cfg.candidate_count; ++i) {
        Document d;
        d.id = i;
        int topic = detail::sample_topic(cfg.doc_topic_weights, cfg.num_topics, rng);
        if (cfg.one_hot_topics) {
            d.topics = TopicVector::one_hot(static_cast<std::size_t>(cfg.num_topics),
                                            static_cast<std::size_t>(topic));
        } else {
            std::vector<double> t(static_cast<std::size_t>(cfg.num_topics));
            for (double& x : t) x = unit(rng);
            t[static_cast<std::size_t>(topic)] = 1.0;  // keep the sampled topic dominant
            d.topics = TopicVector(std::move(t));
        }
        d.length = cfg.doc_length;
        d.quality = cfg.quality_mean(topic) +
                    (cfg.quality_stddev > 0.0 ? noise(rng) : 0.0);
        docs.push_back(std::move(d));
    }
    return Corpus(std::move(docs));
}

/// S(u,d) = (1-alpha) I(u,d) + alpha L_d.
inline double satisfaction(const UserState& user, const Document& doc, double alpha) {
    return (1.0 - alpha) * user.interests.dot(doc.topics) + alpha * doc.quality;
}

/// Post-consumption state update: interest nudge of magnitude
/// y (1-|I|) |I| toward the consumed topic's pole (away with probability
/// 1 - p+), and budget decrease of l(d) less the appeal bonus. A null
/// response costs tau0 budget and leaves interests unchanged.
inline UserState transition(const UserState& state, const Slate& slate, const Response& response,
                            const Corpus& corpus, const InterestEvolutionConfig& cfg, Rng& rng) {
    UserState next = state;
    if (!response.clicked()) {
        next.budget = std::max(0.0, next.budget - cfg.no_click_cost);
        return next;
    }
    const Document& doc =
        corpus.by_id(slate.items[static_cast<std::size_t>(*response.chosen_index)]);
    const int topic = doc.dominant_topic();
    const double interest = next.interests[static_cast<std::size_t>(topic)];
    const double magnitude = cfg.nudge_fraction * (1.0 - std::abs(interest)) * std::abs(interest);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const bool toward_pole = unif(rng) < cfg.positive_nudge_prob;
    // Document topic entries are non-negative, so the pole is +1.
    const double shifted = toward_pole ? interest + magnitude : interest - magnitude;
    next.interests[static_cast<std::size_t>(topic)] = std::clamp(shifted, -1.0, 1.0);

    const double appeal = std::clamp(satisfaction(state, doc, cfg.satisfaction_weight), 0.0, 1.0);
    const double bonus = cfg.bonus_coefficient * doc.length * appeal;
    next.budget = std::max(0.0, next.budget - (doc.length - bonus));
    return next;
}

inline bool is_terminal(const UserState& state, int step, const InterestEvolutionConfig& cfg) {
    return state.budget <= 0.0 || step >= cfg.episode_cap;
}

class InterestEvolutionEnv final : public Environment {
  public:
    InterestEvolutionEnv(InterestEvolutionConfig cfg, ChoiceConfig choice,
                         ObservabilityConfig obs, uint64_t corpus_seed = 0)
        : cfg_(std::move(cfg)), choice_(choice), obs_(std::move(obs)) {
        if (!cfg_.resample_corpus_per_episode) {
            Rng corpus_rng(corpus_seed);
            corpus_ = sample_corpus(cfg_, corpus_rng);
        }
    }

    void reset(Rng& rng) override {
        user_ = sample_user(cfg_, rng);
        if (cfg_.resample_corpus_per_episode) corpus_ = sample_corpus(cfg_, rng);
    }

    const UserState& state() const override { return user_; }
    const Corpus& corpus() const override { return corpus_; }
    const ChoiceConfig& choice_config() const override { return choice_; }
    const ObservabilityConfig& observability() const override { return obs_; }
    int slate_size() const override { return cfg_.slate_size; }
    int num_topics() const override { return cfg_.num_topics; }

    Response respond(const Slate& slate, std::optional<int> chosen_index, Rng&) override {
        Response r;
        r.chosen_index = chosen_index;
        if (chosen_index) {
            const Document& doc =
                corpus_.by_id(slate.items[static_cast<std::size_t>(*chosen_index)]);
            r.engagement = doc.length;  // time spent consuming the document
            r.revealed_quality = doc.quality;
        }
        return r;
    }

    void apply_transition(const Slate& slate, const Response& response, Rng& rng) override {
        user_ = transition(user_, slate, response, corpus_, cfg_, rng);
    }

    bool is_terminal(int step) const override { return envs::is_terminal(user_, step, cfg_); }

    double reward(const Response& response) const override { return response.engagement; }

    std::string kind() const override { return "interest_evolution"; }

    const InterestEvolutionConfig& config() const { return cfg_; }

  private:
    InterestEvolutionConfig cfg_;
    ChoiceConfig choice_;
    ObservabilityConfig obs_;
    UserState user_;
    Corpus corpus_;
};

}  // namespace slatesim::envs
