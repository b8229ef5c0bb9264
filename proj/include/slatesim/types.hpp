#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slatesim/errors.hpp"

namespace slatesim {

/// Topic vector shared by documents and users. Document entries live in
/// [0,1]; user interest entries live in [-1,1].
class TopicVector {
  public:
    TopicVector() = default;
    explicit TopicVector(std::vector<double> entries) : entries_(std::move(entries)) {}

    std::size_t size() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    double& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<double>& entries() const { return entries_; }

    double dot(const TopicVector& other) const {
        if (entries_.size() != other.entries_.size()) {
            throw DimensionMismatch("topic vectors differ in length: " +
                                    std::to_string(entries_.size()) + " vs " +
                                    std::to_string(other.entries_.size()));
        }
        double s = 0.0;
        for (std::size_t i = 0; i < entries_.size(); ++i) s += entries_[i] * other.entries_[i];
        return s;
    }

    /// Index of the largest entry; lowest index wins ties.
    int dominant_topic() const {
        return static_cast<int>(std::max_element(entries_.begin(), entries_.end()) -
                                entries_.begin());
    }

    static TopicVector one_hot(std::size_t num_topics, std::size_t topic) {
        std::vector<double> v(num_topics, 0.0);
        v[topic] = 1.0;
        return TopicVector(std::move(v));
    }

    bool is_valid_document_vector() const {
        return !entries_.empty() && std::all_of(entries_.begin(), entries_.end(),
                                                [](double x) { return x >= 0.0 && x <= 1.0; });
    }
    bool is_valid_user_vector() const {
        return !entries_.empty() && std::all_of(entries_.begin(), entries_.end(),
                                                [](double x) { return x >= -1.0 && x <= 1.0; });
    }

    bool operator==(const TopicVector& o) const { return entries_ == o.entries_; }

  private:
    std::vector<double> entries_;
};

struct Document {
    int id = 0;
    TopicVector topics;
    double length = 1.0;   // time units, > 0
    double quality = 0.0;  // latent
    std::optional<double> observable_quality;  // exposed by the choc-kale environment

    int dominant_topic() const { return topics.dominant_topic(); }
};

/// Candidate document set offered for recommendation; ids are unique.
class Corpus {
  public:
    Corpus() = default;
    explicit Corpus(std::vector<Document> docs, uint64_t sampling_seed = 0,
                    std::string config_digest = {})
        : documents_(std::move(docs)),
          sampling_seed_(sampling_seed),
          config_digest_(std::move(config_digest)) {
        for (std::size_t i = 0; i < documents_.size(); ++i) {
            index_by_id_[documents_[i].id] = i;
        }
    }

    const std::vector<Document>& documents() const { return documents_; }
    std::size_t size() const { return documents_.size(); }
    bool empty() const { return documents_.empty(); }
    uint64_t sampling_seed() const { return sampling_seed_; }
    const std::string& config_digest() const { return config_digest_; }

    bool contains(int id) const { return index_by_id_.count(id) > 0; }

    const Document& by_id(int id) const {
        auto it = index_by_id_.find(id);
        if (it == index_by_id_.end()) {
            throw UnknownDocument("document id " + std::to_string(id) + " not in corpus");
        }
        return documents_[it->second];
    }

  private:
    std::vector<Document> documents_;
    std::map<int, std::size_t> index_by_id_;
    uint64_t sampling_seed_ = 0;
    std::string config_digest_;
};

/// Latent + observable user features; the hidden state of the trajectory
/// factorization. Episodes must terminate once budget reaches 0.
struct UserState {
    TopicVector interests;   // latent unless the environment whitelists it
    double budget = 0.0;     // time units, >= 0
    double satisfaction = 0.5;  // in [0,1]; only the choc-kale environment moves it
    std::map<std::string, double> observable_features;  // demographics, may be empty
};

struct Slate {
    std::vector<int> items;  // ordered document ids, no duplicates

    std::size_t size() const { return items.size(); }
    bool operator==(const Slate& o) const { return items == o.items; }
};

struct Response {
    std::optional<int> chosen_index;  // slate position; absent = no click
    double engagement = 0.0;          // time spent / click indicator, >= 0
    std::optional<double> revealed_quality;  // quality revealed after consumption

    bool clicked() const { return chosen_index.has_value(); }
};

/// Per-candidate observable projection of a document.
struct DocObservable {
    int id = 0;
    std::optional<TopicVector> topics;
    std::map<std::string, double> scalars;  // e.g. "length", "quality"
};

/// Agent-visible projection of the environment state. Contains no latent
/// fields beyond what the environment's whitelist exposes.
struct Observation {
    std::map<std::string, double> user_observable;
    std::vector<DocObservable> doc_observables;
    std::optional<Response> last_response;
};

struct HistoryEntry {
    Observation observation;
    Slate slate;
    Response response;
};

/// Bounded FIFO of (observation, slate, response) triples, most recent last.
class History {
  public:
    History() = default;
    explicit History(std::size_t bound) : bound_(bound) {}

    void push(HistoryEntry entry) {
        entries_.push_back(std::move(entry));
        while (entries_.size() > bound_) entries_.pop_front();
    }

    std::size_t size() const { return entries_.size(); }
    std::size_t bound() const { return bound_; }
    bool empty() const { return entries_.empty(); }
    const HistoryEntry& operator[](std::size_t i) const { return entries_[i]; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }
    void clear() { entries_.clear(); }

  private:
    std::deque<HistoryEntry> entries_;
    std::size_t bound_ = 0;
};

/// Ok iff the slate has no duplicate ids and every id is in the corpus.
inline void validate_slate(const Slate& slate, const Corpus& corpus) {
    std::vector<int> seen;
    seen.reserve(slate.items.size());
    for (int id : slate.items) {
        if (std::find(seen.begin(), seen.end(), id) != seen.end()) {
            throw DuplicateItem("slate repeats document id " + std::to_string(id));
        }
        seen.push_back(id);
        if (!corpus.contains(id)) {
            throw UnknownDocument("slate references unknown document id " + std::to_string(id));
        }
    }
}

}  // namespace slatesim
