#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fedsel/url.hpp"

namespace fedsel {

enum class MediaKind { Text, Html, Pdf, Image, Sound };

/// Retrieval model simulated for a collection's own result lists. Mirrors the
/// heterogeneity of real engines: not every resource ranks by relevance.
enum class RetrievalModel { QueryLikelihood, BooleanCoordination, RecencyRandom };

enum class FacetKind { Ambiguous, Faceted, Unspecified };

/// Relevance levels after merging Junk into Non at ingestion.
enum class RelLevel : int { Non = 0, Rel = 1, HRel = 2, Key = 3, Nav = 4 };

struct Document {
    std::string url;
    std::string normalized_url; // always normalize_url(url)
    std::string title;
    std::string snippet;
    std::string body; // empty for image/sound results
    MediaKind media_kind = MediaKind::Html;

    bool is_media() const { return media_kind == MediaKind::Image || media_kind == MediaKind::Sound; }
};

struct Collection {
    std::string id;
    std::string name;
    bool is_wse = false;
    std::optional<std::uint64_t> true_size; // synthetic data only
    RetrievalModel retrieval_model = RetrievalModel::QueryLikelihood;
    std::vector<Document> documents;
};

struct Topic {
    std::string id;
    std::string query;
    FacetKind facet_kind = FacetKind::Unspecified;
};

struct Judgment {
    std::string topic_id;
    std::string collection_id;
    std::string normalized_url;
    RelLevel level = RelLevel::Non;
    int judge_count = 1;
    double mean_level = 0.0;
};

/// Binary relevance thresholds over the mean judged level.
enum class RelevanceCriterion {
    BetterThanRel,  // mean_level > 1
    BetterThanHRel, // mean_level > 2
    RelOrBetter,    // mean_level >= 1
};

bool binary_relevant(const Judgment& j, RelevanceCriterion c);

const char* to_string(MediaKind k);
const char* to_string(RetrievalModel m);
const char* to_string(FacetKind f);
const char* to_string(RelLevel l);
const char* to_string(RelevanceCriterion c);
MediaKind media_kind_from_string(std::string_view s);
RetrievalModel retrieval_model_from_string(std::string_view s);
FacetKind facet_kind_from_string(std::string_view s);
RelLevel rel_level_from_string(std::string_view s); // maps "Junk" to Non
RelevanceCriterion criterion_from_string(std::string_view s);

/// Document frequencies of a reference corpus, used by the ClueWeb-style size
/// estimators and the Zipf sampling strategy.
struct ReferenceCorpusStats {
    std::uint64_t total_docs = 0;
    std::map<std::string, std::uint64_t> df;

    /// Equal-size rank bins over terms ordered by descending df (ties broken
    /// lexicographically). The binning rule is configuration; this is the
    /// default.
    std::vector<std::vector<std::string>> make_bins(std::size_t num_bins) const;

    void validate() const;
};

struct Dataset {
    std::vector<Collection> collections;
    std::vector<Topic> topics;
    std::vector<Judgment> judgments; // file order = per-(topic,collection) result rank
    ReferenceCorpusStats refstats;

    const Collection* find_collection(std::string_view id) const;
    const Topic* find_topic(std::string_view id) const;

    /// Judged result rows for one (topic, collection), in judged order.
    std::vector<const Judgment*> results_for(std::string_view topic_id,
                                             std::string_view collection_id) const;
    std::vector<const Judgment*> results_for_topic(std::string_view topic_id) const;

    /// WSE ids ordered by true size descending (name as tie-break); the
    /// default popularity order for the Popular baseline.
    std::vector<std::string> wse_ids_by_size() const;

    /// Checks every type invariant; throws Error on the first violation.
    void validate() const;

    void build_lookup() const;

private:
    // lazily built lookup: (topic, collection) -> judgment row indices
    mutable std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> result_rows_;
    mutable bool lookup_built_ = false;
};

} // namespace fedsel
