#pragma once

#include <memory>
#include <string>

#include "slatesim/envs/choc_kale.hpp"
#include "slatesim/envs/interest_evolution.hpp"
#include "slatesim/envs/latent_bandit.hpp"
#include "slatesim/jsonutil.hpp"

namespace slatesim::envs {

using jsonutil::json;

inline ChoiceConfig parse_choice_config(const json& j, const std::string& path) {
    namespace ju = jsonutil;
    ChoiceConfig cfg;
    const std::string kind = ju::get_string(j, path, "kind", "conditional");
    if (kind == "conditional") {
        cfg.kind = ChoiceKind::Conditional;
    } else if (kind == "logit") {
        cfg.kind = ChoiceKind::Logit;
    } else if (kind == "cascade") {
        cfg.kind = ChoiceKind::Cascade;
    } else {
        throw ConfigError(ju::join(path, "kind") +
                          ": expected one of conditional|logit|cascade, got '" + kind + "'");
    }
    const std::string fn = ju::get_string(j, path, "score_fn", "exp");
    if (fn == "identity") {
        cfg.score_fn = ScoreFn::Identity;
    } else if (fn == "exp") {
        cfg.score_fn = ScoreFn::Exp;
    } else if (fn == "affine") {
        cfg.score_fn = ScoreFn::Affine;
    } else {
        throw ConfigError(ju::join(path, "score_fn") +
                          ": expected one of identity|exp|affine, got '" + fn + "'");
    }
    cfg.affine_scale = ju::get_number(j, path, "affine_scale", 1.0);
    cfg.affine_offset = ju::get_number(j, path, "affine_offset", 0.0);
    if (j.is_object() && j.contains("null_score") && j.at("null_score").is_null()) {
        cfg.null_score.reset();
    } else {
        cfg.null_score = ju::get_number(j, path, "null_score", 0.0);
    }
    cfg.cascade_attention = ju::get_number(j, path, "cascade_attention", 1.0);
    if (cfg.cascade_attention <= 0.0 || cfg.cascade_attention > 1.0) {
        throw ConfigError(ju::join(path, "cascade_attention") + ": must lie in (0, 1]");
    }
    cfg.score_includes_quality = ju::get_bool(j, path, "score_includes_quality", false);
    cfg.affinity_scale = ju::get_number(j, path, "affinity_scale", 1.0);
    ju::check_positive(cfg.affinity_scale, path, "affinity_scale");
    return cfg;
}

inline ObservabilityConfig parse_observability(const json& j, const std::string& path,
                                               const ObservabilityConfig& defaults) {
    namespace ju = jsonutil;
    ObservabilityConfig cfg = defaults;
    if (!j.is_object()) return cfg;
    auto parse_set = [&](const char* key, const std::set<std::string>& allowed) {
        std::set<std::string> out;
        if (!j.contains(key)) return std::optional<std::set<std::string>>{};
        const json& arr = j.at(key);
        if (!arr.is_array()) {
            throw ConfigError(ju::join(path, key) + ": expected an array of field names");
        }
        for (const auto& item : arr) {
            if (!item.is_string()) {
                throw ConfigError(ju::join(path, key) + ": expected string entries");
            }
            const std::string name = item.get<std::string>();
            if (!allowed.count(name)) {
                throw ConfigError(ju::join(path, key) + ": unknown field '" + name + "'");
            }
            out.insert(name);
        }
        return std::optional<std::set<std::string>>{std::move(out)};
    };
    if (auto user = parse_set("user", {"interests", "budget", "satisfaction"})) {
        cfg.user_fields = std::move(*user);
    }
    if (auto docs = parse_set("docs", {"topics", "length", "quality"})) {
        cfg.doc_fields = std::move(*docs);
    }
    return cfg;
}

namespace detail {

inline void parse_common_priors(const json& j, const std::string& path, double& lo, double& hi,
                                std::vector<double>& doc_weights, int num_topics) {
    namespace ju = jsonutil;
    lo = ju::get_number(j, path, "user_interest_low", lo);
    hi = ju::get_number(j, path, "user_interest_high", hi);
    ju::check_range(lo, -1.0, 1.0, path, "user_interest_low");
    ju::check_range(hi, -1.0, 1.0, path, "user_interest_high");
    if (lo > hi) throw ConfigError(ju::join(path, "user_interest_low") + ": low exceeds high");
    doc_weights = ju::get_number_array(j, path, "doc_topic_weights", doc_weights);
    if (!doc_weights.empty() && doc_weights.size() != static_cast<std::size_t>(num_topics)) {
        throw ConfigError(ju::join(path, "doc_topic_weights") + ": expected " +
                          std::to_string(num_topics) + " entries");
    }
}

}  // namespace detail

inline InterestEvolutionConfig parse_interest_evolution(const json& j, const std::string& path) {
    namespace ju = jsonutil;
    InterestEvolutionConfig cfg;
    cfg.num_topics = static_cast<int>(ju::get_int(j, path, "num_topics", cfg.num_topics));
    if (cfg.num_topics < 1) throw ConfigError(ju::join(path, "num_topics") + ": must be >= 1");
    cfg.one_hot_topics = ju::get_bool(j, path, "one_hot_topics", cfg.one_hot_topics);
    cfg.doc_length = ju::get_number(j, path, "doc_length", cfg.doc_length);
    ju::check_positive(cfg.doc_length, path, "doc_length");
    cfg.quality_means = ju::get_number_array(j, path, "quality_means", cfg.quality_means);
    if (!cfg.quality_means.empty() &&
        cfg.quality_means.size() != static_cast<std::size_t>(cfg.num_topics)) {
        throw ConfigError(ju::join(path, "quality_means") + ": expected " +
                          std::to_string(cfg.num_topics) + " entries");
    }
    cfg.quality_stddev = ju::get_number(j, path, "quality_stddev", cfg.quality_stddev);
    if (cfg.quality_stddev < 0.0) {
        throw ConfigError(ju::join(path, "quality_stddev") + ": must be >= 0");
    }
    cfg.satisfaction_weight = ju::get_number(j, path, "satisfaction_weight",
                                             cfg.satisfaction_weight);
    ju::check_range(cfg.satisfaction_weight, 0.0, 1.0, path, "satisfaction_weight");
    cfg.nudge_fraction = ju::get_number(j, path, "nudge_fraction", cfg.nudge_fraction);
    ju::check_range(cfg.nudge_fraction, 0.0, 1.0, path, "nudge_fraction");
    cfg.positive_nudge_prob = ju::get_number(j, path, "positive_nudge_prob",
                                             cfg.positive_nudge_prob);
    ju::check_range(cfg.positive_nudge_prob, 0.0, 1.0, path, "positive_nudge_prob");
    cfg.initial_budget = ju::get_number(j, path, "initial_budget", cfg.initial_budget);
    ju::check_positive(cfg.initial_budget, path, "initial_budget");
    cfg.bonus_coefficient = ju::get_number(j, path, "bonus_coefficient", cfg.bonus_coefficient);
    if (cfg.bonus_coefficient < 0.0 || cfg.bonus_coefficient >= 1.0) {
        throw ConfigError(ju::join(path, "bonus_coefficient") + ": must lie in [0, 1)");
    }
    cfg.no_click_cost = ju::get_number(j, path, "no_click_cost", cfg.no_click_cost);
    if (cfg.no_click_cost < 0.0) {
        throw ConfigError(ju::join(path, "no_click_cost") + ": must be >= 0");
    }
    detail::parse_common_priors(j, path, cfg.user_interest_low, cfg.user_interest_high,
                                cfg.doc_topic_weights, cfg.num_topics);
    cfg.slate_size = static_cast<int>(ju::get_int(j, path, "slate_size", cfg.slate_size));
    if (cfg.slate_size < 1) throw ConfigError(ju::join(path, "slate_size") + ": must be >= 1");
    cfg.candidate_count =
        static_cast<int>(ju::get_int(j, path, "candidate_count", cfg.candidate_count));
    if (cfg.candidate_count < cfg.slate_size) {
        throw ConfigError(ju::join(path, "candidate_count") + ": must be >= slate_size");
    }
    cfg.episode_cap = static_cast<int>(ju::get_int(j, path, "episode_cap", cfg.episode_cap));
    if (cfg.episode_cap < 1) throw ConfigError(ju::join(path, "episode_cap") + ": must be >= 1");
    cfg.resample_corpus_per_episode =
        ju::get_bool(j, path, "resample_corpus_per_episode", cfg.resample_corpus_per_episode);
    return cfg;
}

inline LatentBanditConfig parse_latent_bandit(const json& j, const std::string& path) {
    namespace ju = jsonutil;
    LatentBanditConfig cfg;
    cfg.num_topics = static_cast<int>(ju::get_int(j, path, "num_topics", cfg.num_topics));
    if (cfg.num_topics < 1) throw ConfigError(ju::join(path, "num_topics") + ": must be >= 1");
    cfg.quality_log_means =
        ju::get_number_array(j, path, "quality_log_means", cfg.quality_log_means);
    if (!cfg.quality_log_means.empty() &&
        cfg.quality_log_means.size() != static_cast<std::size_t>(cfg.num_topics)) {
        throw ConfigError(ju::join(path, "quality_log_means") + ": expected " +
                          std::to_string(cfg.num_topics) + " entries");
    }
    cfg.quality_log_stddev =
        ju::get_number(j, path, "quality_log_stddev", cfg.quality_log_stddev);
    ju::check_positive(cfg.quality_log_stddev, path, "quality_log_stddev");
    cfg.episode_length =
        static_cast<int>(ju::get_int(j, path, "episode_length", cfg.episode_length));
    if (cfg.episode_length < 1) {
        throw ConfigError(ju::join(path, "episode_length") + ": must be >= 1");
    }
    detail::parse_common_priors(j, path, cfg.user_interest_low, cfg.user_interest_high,
                                cfg.doc_topic_weights, cfg.num_topics);
    cfg.slate_size = static_cast<int>(ju::get_int(j, path, "slate_size", cfg.slate_size));
    if (cfg.slate_size < 1) throw ConfigError(ju::join(path, "slate_size") + ": must be >= 1");
    cfg.candidate_count =
        static_cast<int>(ju::get_int(j, path, "candidate_count", cfg.candidate_count));
    if (cfg.candidate_count < cfg.slate_size) {
        throw ConfigError(ju::join(path, "candidate_count") + ": must be >= slate_size");
    }
    cfg.fixed_corpus = ju::get_bool(j, path, "fixed_corpus", cfg.fixed_corpus);
    return cfg;
}

inline ChocKaleConfig parse_choc_kale(const json& j, const std::string& path) {
    namespace ju = jsonutil;
    ChocKaleConfig cfg;
    cfg.mu_choc = ju::get_number(j, path, "mu_choc", cfg.mu_choc);
    cfg.sigma_choc = ju::get_number(j, path, "sigma_choc", cfg.sigma_choc);
    ju::check_positive(cfg.sigma_choc, path, "sigma_choc");
    cfg.mu_kale = ju::get_number(j, path, "mu_kale", cfg.mu_kale);
    cfg.sigma_kale = ju::get_number(j, path, "sigma_kale", cfg.sigma_kale);
    ju::check_positive(cfg.sigma_kale, path, "sigma_kale");
    cfg.drift_step = ju::get_number(j, path, "drift_step", cfg.drift_step);
    if (cfg.drift_step <= 0.0 || cfg.drift_step >= 1.0) {
        throw ConfigError(ju::join(path, "drift_step") + ": must lie in (0, 1)");
    }
    cfg.drift_noise = ju::get_number(j, path, "drift_noise", cfg.drift_noise);
    if (cfg.drift_noise < 0.0) {
        throw ConfigError(ju::join(path, "drift_noise") + ": must be >= 0");
    }
    cfg.initial_satisfaction =
        ju::get_number(j, path, "initial_satisfaction", cfg.initial_satisfaction);
    ju::check_range(cfg.initial_satisfaction, 0.0, 1.0, path, "initial_satisfaction");
    cfg.episode_length =
        static_cast<int>(ju::get_int(j, path, "episode_length", cfg.episode_length));
    if (cfg.episode_length < 1) {
        throw ConfigError(ju::join(path, "episode_length") + ": must be >= 1");
    }
    cfg.slate_size = static_cast<int>(ju::get_int(j, path, "slate_size", cfg.slate_size));
    if (cfg.slate_size < 1) throw ConfigError(ju::join(path, "slate_size") + ": must be >= 1");
    cfg.candidate_count =
        static_cast<int>(ju::get_int(j, path, "candidate_count", cfg.candidate_count));
    if (cfg.candidate_count < cfg.slate_size) {
        throw ConfigError(ju::join(path, "candidate_count") + ": must be >= slate_size");
    }
    cfg.resample_corpus_per_episode =
        ju::get_bool(j, path, "resample_corpus_per_episode", cfg.resample_corpus_per_episode);
    return cfg;
}

/// Builds an environment from its JSON spec. corpus_seed feeds the one-off
/// corpus draw of fixed-corpus configurations.
inline std::unique_ptr<Environment> make_environment(const json& j, const std::string& path,
                                                     uint64_t corpus_seed) {
    namespace ju = jsonutil;
    const std::string kind = ju::require_string(j, path, "kind");
    const json choice_json = j.contains("choice") ? j.at("choice") : json::object();
    const json obs_json = j.contains("observability") ? j.at("observability") : json::object();
    ChoiceConfig choice = parse_choice_config(choice_json, ju::join(path, "choice"));

    if (kind == "interest_evolution") {
        auto cfg = parse_interest_evolution(j, path);
        ObservabilityConfig defaults;  // interests hidden unless whitelisted
        auto obs = parse_observability(obs_json, ju::join(path, "observability"), defaults);
        return std::make_unique<InterestEvolutionEnv>(cfg, choice, obs, corpus_seed);
    }
    if (kind == "latent_bandit") {
        auto cfg = parse_latent_bandit(j, path);
        if (!j.contains("choice")) {
            choice.kind = ChoiceKind::Conditional;
            choice.score_fn = ScoreFn::Exp;
            choice.score_includes_quality = true;
        }
        ObservabilityConfig defaults;
        auto obs = parse_observability(obs_json, ju::join(path, "observability"), defaults);
        return std::make_unique<LatentBanditEnv>(cfg, choice, obs, corpus_seed);
    }
    if (kind == "choc_kale") {
        auto cfg = parse_choc_kale(j, path);
        ObservabilityConfig defaults;
        defaults.doc_fields = {"topics", "length", "quality"};
        auto obs = parse_observability(obs_json, ju::join(path, "observability"), defaults);
        return std::make_unique<ChocKaleEnv>(cfg, choice, obs, corpus_seed);
    }
    throw ConfigError(ju::join(path, "kind") +
                      ": expected one of interest_evolution|latent_bandit|choc_kale, got '" +
                      kind + "'");
}

}  // namespace slatesim::envs
