#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "slatesim/environment.hpp"

namespace slatesim::envs {

/// Single-item recommendation environment with static latent user
/// interests and lognormal document quality. Reward is a click indicator;
/// sessions end after a fixed number of turns.
struct LatentBanditConfig {
    int num_topics = 10;
    std::vector<double> quality_log_means;  // mu_t of ln N(mu_t, sigma^2); empty = ramp
    double quality_log_stddev = 0.5;
    int episode_length = 500;
    std::vector<double> doc_topic_weights;  // P_D categorical; empty = uniform
    double user_interest_low = -1.0;
    double user_interest_high = 1.0;
    int slate_size = 1;
    int candidate_count = 20;
    bool fixed_corpus = true;  // sample once per run so document ids are stable

    // mu_t defaults to a ramp centred on -sigma^2/2, which keeps E[L_d]
    // near 1 while giving topics distinct mean quality.
    double quality_log_mean(int topic) const {
        if (!quality_log_means.empty()) {
            return quality_log_means[static_cast<std::size_t>(topic)];
        }
        const double centre = -0.5 * quality_log_stddev * quality_log_stddev;
        if (num_topics == 1) return centre;
        const double frac = static_cast<double>(topic) / (num_topics - 1) - 0.5;
        return centre + 0.5 * frac;
    }
};

inline UserState sample_user(const LatentBanditConfig& cfg, Rng& rng) {
    std::uniform_real_distribution<double> unif(cfg.user_interest_low, cfg.user_interest_high);
    std::vector<double> interests(static_cast<std::size_t>(cfg.num_topics));
    for (double& x : interests) {
        x = (cfg.user_interest_low == cfg.user_interest_high) ? cfg.user_interest_low
                                                              : unif(rng);
    }
    UserState u;
    u.interests = TopicVector(std::move(interests));
    u.budget = static_cast<double>(cfg.episode_length);  // unused; termination is by turn count
    u.satisfaction = 0.5;
    return u;
}

inline Corpus sample_corpus(const LatentBanditConfig& cfg, Rng& rng) {
    std::vector<Document> docs;
    docs.reserve(static_cast<std::size_t>(cfg.candidate_count));
    for (int i = 0; i < cfg.candidate_count; ++i) {
        Document d;
        d.id = i;
        int topic;
        if (cfg.doc_topic_weights.empty()) {
            std::uniform_int_distribution<int> t(0, cfg.num_topics - 1);
            topic = t(rng);
        } else {
            std::discrete_distribution<int> t(cfg.doc_topic_weights.begin(),
                                              cfg.doc_topic_weights.end());
            topic = t(rng);
        }
        d.topics = TopicVector::one_hot(static_cast<std::size_t>(cfg.num_topics),
                                        static_cast<std::size_t>(topic));
        d.length = 1.0;
        std::lognormal_distribution<double> q(cfg.quality_log_mean(topic),
                                              cfg.quality_log_stddev);
        d.quality = q(rng);
        docs.push_back(std::move(d));
    }
    return Corpus(std::move(docs));
}

class LatentBanditEnv final : public Environment {
  public:
    LatentBanditEnv(LatentBanditConfig cfg, ChoiceConfig choice, ObservabilityConfig obs,
                    uint64_t corpus_seed = 0)
        : cfg_(std::move(cfg)), choice_(choice), obs_(std::move(obs)) {
        if (cfg_.fixed_corpus) {
            Rng corpus_rng(corpus_seed);
            corpus_ = sample_corpus(cfg_, corpus_rng);
        }
    }

    void reset(Rng& rng) override {
        user_ = sample_user(cfg_, rng);
        if (!cfg_.fixed_corpus) corpus_ = sample_corpus(cfg_, rng);
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
            r.engagement = 1.0;  // click indicator
            r.revealed_quality = doc.quality;
        }
        return r;
    }

    // Interests are static for the whole session.
    void apply_transition(const Slate&, const Response&, Rng&) override {}

    bool is_terminal(int step) const override { return step >= cfg_.episode_length; }

    double reward(const Response& response) const override {
        return response.clicked() ? 1.0 : 0.0;
    }

    std::string kind() const override { return "latent_bandit"; }

    const LatentBanditConfig& config() const { return cfg_; }

  private:
    LatentBanditConfig cfg_;
    ChoiceConfig choice_;
    ObservabilityConfig obs_;
    UserState user_;
    Corpus corpus_;
};

}  // namespace slatesim::envs
