#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "slatesim/environment.hpp"

namespace slatesim::envs {

/// Documents carry an observable kaleness q in [0,1]. Low-q ("chocolate")
/// documents draw high immediate engagement; high-q ("kale") documents draw
/// less but slowly push latent satisfaction upward. A deliberately low
/// signal-to-noise regime.
struct ChocKaleConfig {
    double mu_choc = 1.0;
    double sigma_choc = 1.0;
    double mu_kale = 0.3;
    double sigma_kale = 0.3;
    double drift_step = 0.01;   // eta in (0,1)
    double drift_noise = 0.03;  // stddev of the satisfaction noise
    double initial_satisfaction = 0.5;
    int episode_length = 100;
    int slate_size = 1;
    int candidate_count = 10;
    bool resample_corpus_per_episode = true;
};

inline UserState sample_user(const ChocKaleConfig& cfg, Rng& rng) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    UserState u;
    u.interests = TopicVector({unif(rng)});
    u.budget = static_cast<double>(cfg.episode_length);
    u.satisfaction = cfg.initial_satisfaction;
    return u;
}

inline Corpus sample_corpus(const ChocKaleConfig& cfg, Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Document> docs;
    docs.reserve(static_cast<std::size_t>(cfg.candidate_count));
    for (int i = 0; i < cfg.candidate_count; ++i) {
        Document d;
        d.id = i;
        d.topics = TopicVector({1.0});
        d.length = 1.0;
        const double kaleness = unit(rng);
        d.quality = kaleness;
        d.observable_quality = kaleness;  // the quality axis is visible here
        docs.push_back(std::move(d));
    }
    return Corpus(std::move(docs));
}

/// Engagement ~ ln N(mu(q), sigma(q)) with parameters interpolated linearly
/// between the chocolate and kale endpoints in proportion to kaleness.
inline double engagement(const Document& doc, const UserState&, const ChocKaleConfig& cfg,
                         Rng& rng) {
    const double q = doc.observable_quality.value_or(doc.quality);
    const double mu = (1.0 - q) * cfg.mu_choc + q * cfg.mu_kale;
    const double sigma = (1.0 - q) * cfg.sigma_choc + q * cfg.sigma_kale;
    std::lognormal_distribution<double> dist(mu, sigma);
    return dist(rng);
}

/// Satisfaction drifts slowly: up for kale (q > 1/2), down for chocolate.
inline UserState transition(const UserState& state, const Slate& slate, const Response& response,
                            const Corpus& corpus, const ChocKaleConfig& cfg, Rng& rng) {
    UserState next = state;
    if (!response.clicked()) return next;
    const Document& doc =
        corpus.by_id(slate.items[static_cast<std::size_t>(*response.chosen_index)]);
    const double q = doc.observable_quality.value_or(doc.quality);
    std::normal_distribution<double> noise(0.0, cfg.drift_noise);
    const double drift = cfg.drift_step * (2.0 * q - 1.0) +
                         (cfg.drift_noise > 0.0 ? noise(rng) : 0.0);
    next.satisfaction = std::clamp(next.satisfaction + drift, 0.0, 1.0);
    return next;
}

class ChocKaleEnv final : public Environment {
  public:
    ChocKaleEnv(ChocKaleConfig cfg, ChoiceConfig choice, ObservabilityConfig obs,
                uint64_t corpus_seed = 0)
        : cfg_(cfg), choice_(choice), obs_(std::move(obs)) {
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
    int num_topics() const override { return 1; }

    Response respond(const Slate& slate, std::optional<int> chosen_index, Rng& rng) override {
        Response r;
        r.chosen_index = chosen_index;
        if (chosen_index) {
            const Document& doc =
                corpus_.by_id(slate.items[static_cast<std::size_t>(*chosen_index)]);
            r.engagement = engagement(doc, user_, cfg_, rng);
            r.revealed_quality = doc.quality;
        }
        return r;
    }

    void apply_transition(const Slate& slate, const Response& response, Rng& rng) override {
        user_ = transition(user_, slate, response, corpus_, cfg_, rng);
    }

    bool is_terminal(int step) const override { return step >= cfg_.episode_length; }

    double reward(const Response& response) const override { return response.engagement; }

    std::string kind() const override { return "choc_kale"; }

    const ChocKaleConfig& config() const { return cfg_; }

  private:
    ChocKaleConfig cfg_;
    ChoiceConfig choice_;
    ObservabilityConfig obs_;
    UserState user_;
    Corpus corpus_;
};

}  // namespace slatesim::envs
