#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "slatesim/errors.hpp"
#include "slatesim/rng.hpp"
#include "slatesim/types.hpp"

namespace slatesim {

enum class ChoiceKind { Conditional, Logit, Cascade };

enum class ScoreFn { Identity, Exp, Affine };

/// User choice model configuration. The distribution over a k-slate always
/// has k+1 entries; the last is the no-click outcome. Disabling null_score
/// pins that entry to zero.
struct ChoiceConfig {
    ChoiceKind kind = ChoiceKind::Conditional;
    ScoreFn score_fn = ScoreFn::Exp;  // f applied to base scores
    double affine_scale = 1.0;
    double affine_offset = 0.0;
    std::optional<double> null_score = 0.0;  // nullopt disables the null outcome
    double cascade_attention = 1.0;          // beta in (0,1]

    // Base-score knobs. The latent-bandit environment scores f(I(u,d)+L_d)
    // with interests magnified by affinity_scale; other environments use the
    // plain dot product.
    bool score_includes_quality = false;
    double affinity_scale = 1.0;

    double transform(double x) const {
        switch (score_fn) {
            case ScoreFn::Identity: return x;
            case ScoreFn::Exp: return std::exp(x);
            case ScoreFn::Affine: return affine_scale * x + affine_offset;
        }
        return x;
    }
};

/// Base score of a document for a user: affinity_scale * (u . d), plus the
/// document's latent quality when configured.
inline double score(const UserState& user, const Document& doc, const ChoiceConfig& cfg) {
    double s = cfg.affinity_scale * user.interests.dot(doc.topics);
    if (cfg.score_includes_quality) s += doc.quality;
    return s;
}

namespace detail {

inline std::vector<double> conditional_distribution(const std::vector<double>& scores,
                                                    const ChoiceConfig& cfg) {
    std::vector<double> w;
    w.reserve(scores.size() + 1);
    for (double s : scores) w.push_back(cfg.transform(s));
    w.push_back(cfg.null_score ? cfg.transform(*cfg.null_score) : 0.0);
    double total = 0.0;
    for (double x : w) {
        if (x < 0.0) {
            throw InvalidScore("conditional choice weight is negative: " + std::to_string(x));
        }
        total += x;
    }
    if (total <= 0.0) throw InvalidScore("conditional choice weights sum to zero");
    for (double& x : w) x /= total;
    return w;
}

inline std::vector<double> logit_distribution(const std::vector<double>& scores,
                                              const ChoiceConfig& cfg) {
    std::vector<double> s = scores;
    if (cfg.null_score) s.push_back(*cfg.null_score);
    // Max-subtraction keeps exp() finite for budget-scale scores.
    double m = *std::max_element(s.begin(), s.end());
    std::vector<double> w;
    w.reserve(scores.size() + 1);
    double total = 0.0;
    for (double x : s) {
        double e = std::exp(x - m);
        w.push_back(e);
        total += e;
    }
    for (double& x : w) x /= total;
    if (!cfg.null_score) w.push_back(0.0);
    return w;
}

// Scan positions in order; examine position j with attention beta^j and
// click with probability beta^j * clip(f(score_j), 0, 1). No click after
// the last position is the null outcome. Probabilities telescope to 1.
inline std::vector<double> cascade_distribution(const std::vector<double>& scores,
                                                const ChoiceConfig& cfg) {
    std::vector<double> w(scores.size() + 1, 0.0);
    double attention = 1.0;  // beta^j
    double survive = 1.0;    // probability no click before position j
    for (std::size_t j = 0; j < scores.size(); ++j) {
        double attract = std::clamp(cfg.transform(scores[j]), 0.0, 1.0);
        double click = attention * attract;
        w[j] = survive * click;
        survive *= 1.0 - click;
        attention *= cfg.cascade_attention;
    }
    w[scores.size()] = survive;
    return w;
}

}  // namespace detail

/// Probability vector over the k slate positions plus null (k+1 entries,
/// null last). Entries are non-negative and sum to 1.
inline std::vector<double> choice_distribution(const UserState& user, const Slate& slate,
                                               const Corpus& corpus, const ChoiceConfig& cfg) {
    std::vector<double> scores;
    scores.reserve(slate.items.size());
    for (int id : slate.items) scores.push_back(score(user, corpus.by_id(id), cfg));
    switch (cfg.kind) {
        case ChoiceKind::Conditional: return detail::conditional_distribution(scores, cfg);
        case ChoiceKind::Logit: return detail::logit_distribution(scores, cfg);
        case ChoiceKind::Cascade: return detail::cascade_distribution(scores, cfg);
    }
    throw Error("unreachable choice kind");
}

/// Samples a slate position (or null) from a normalized k+1 distribution.
/// The returned response carries only the choice; the environment fills in
/// engagement and revealed quality.
inline Response sample_choice(const std::vector<double>& dist, Rng& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double u = unif(rng);
    double cum = 0.0;
    Response r;
    for (std::size_t i = 0; i + 1 < dist.size(); ++i) {
        cum += dist[i];
        if (u < cum) {
            r.chosen_index = static_cast<int>(i);
            return r;
        }
    }
    return r;  // null outcome
}

}  // namespace slatesim
