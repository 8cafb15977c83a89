#include "fedsel/corpus.hpp"

#include <algorithm>
#include <set>

#include "fedsel/error.hpp"
#include "fedsel/text.hpp"

namespace fedsel {

bool binary_relevant(const Judgment& j, RelevanceCriterion c) {
    switch (c) {
    case RelevanceCriterion::BetterThanRel: return j.mean_level > 1.0;
    case RelevanceCriterion::BetterThanHRel: return j.mean_level > 2.0;
    case RelevanceCriterion::RelOrBetter: return j.mean_level >= 1.0;
    }
    return false;
}

const char* to_string(MediaKind k) {
    switch (k) {
    case MediaKind::Text: return "text";
    case MediaKind::Html: return "html";
    case MediaKind::Pdf: return "pdf";
    case MediaKind::Image: return "image";
    case MediaKind::Sound: return "sound";
    }
    return "?";
}

const char* to_string(RetrievalModel m) {
    switch (m) {
    case RetrievalModel::QueryLikelihood: return "query_likelihood";
    case RetrievalModel::BooleanCoordination: return "boolean_coordination";
    case RetrievalModel::RecencyRandom: return "recency_random";
    }
    return "?";
}

const char* to_string(FacetKind f) {
    switch (f) {
    case FacetKind::Ambiguous: return "ambiguous";
    case FacetKind::Faceted: return "faceted";
    case FacetKind::Unspecified: return "unspecified";
    }
    return "?";
}

const char* to_string(RelLevel l) {
    switch (l) {
    case RelLevel::Non: return "Non";
    case RelLevel::Rel: return "Rel";
    case RelLevel::HRel: return "HRel";
    case RelLevel::Key: return "Key";
    case RelLevel::Nav: return "Nav";
    }
    return "?";
}

const char* to_string(RelevanceCriterion c) {
    switch (c) {
    case RelevanceCriterion::BetterThanRel: return "better_than_rel";
    case RelevanceCriterion::BetterThanHRel: return "better_than_hrel";
    case RelevanceCriterion::RelOrBetter: return "rel_or_better";
    }
    return "?";
}

MediaKind media_kind_from_string(std::string_view s) {
    if (s == "text") return MediaKind::Text;
    if (s == "html") return MediaKind::Html;
    if (s == "pdf") return MediaKind::Pdf;
    if (s == "image") return MediaKind::Image;
    if (s == "sound") return MediaKind::Sound;
    fail("unknown media_kind \"" + std::string(s) + "\"");
}

RetrievalModel retrieval_model_from_string(std::string_view s) {
    if (s == "query_likelihood") return RetrievalModel::QueryLikelihood;
    if (s == "boolean_coordination") return RetrievalModel::BooleanCoordination;
    if (s == "recency_random") return RetrievalModel::RecencyRandom;
    fail("unknown retrieval_model \"" + std::string(s) + "\"");
}

FacetKind facet_kind_from_string(std::string_view s) {
    if (s == "ambiguous") return FacetKind::Ambiguous;
    if (s == "faceted") return FacetKind::Faceted;
    if (s == "unspecified") return FacetKind::Unspecified;
    fail("unknown facet_kind \"" + std::string(s) + "\"");
}

RelLevel rel_level_from_string(std::string_view s) {
    if (s == "Junk" || s == "Non") return RelLevel::Non; // Junk merged at ingestion
    if (s == "Rel") return RelLevel::Rel;
    if (s == "HRel") return RelLevel::HRel;
    if (s == "Key") return RelLevel::Key;
    if (s == "Nav") return RelLevel::Nav;
    fail("unknown relevance level \"" + std::string(s) + "\"");
}

RelevanceCriterion criterion_from_string(std::string_view s) {
    if (s == "better_than_rel") return RelevanceCriterion::BetterThanRel;
    if (s == "better_than_hrel") return RelevanceCriterion::BetterThanHRel;
    if (s == "rel_or_better") return RelevanceCriterion::RelOrBetter;
    fail("unknown relevance criterion \"" + std::string(s) + "\"");
}

std::vector<std::vector<std::string>> ReferenceCorpusStats::make_bins(std::size_t num_bins) const {
    require(num_bins >= 1, "make_bins: need at least one bin");
    std::vector<std::pair<std::string, std::uint64_t>> terms(df.begin(), df.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    num_bins = std::min(num_bins, std::max<std::size_t>(terms.size(), 1));
    std::vector<std::vector<std::string>> bins(num_bins);
    const std::size_t n = terms.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t bin = i * num_bins / n;
        bins[bin].push_back(terms[i].first);
    }
    return bins;
}

void ReferenceCorpusStats::validate() const {
    require(total_docs > 0, "refstats: total_docs must be > 0");
    for (const auto& [term, count] : df)
        require(count <= total_docs,
                "refstats: df of term \"" + term + "\" exceeds total_docs");
}

const Collection* Dataset::find_collection(std::string_view id) const {
    for (const auto& c : collections)
        if (c.id == id) return &c;
    return nullptr;
}

const Topic* Dataset::find_topic(std::string_view id) const {
    for (const auto& t : topics)
        if (t.id == id) return &t;
    return nullptr;
}

void Dataset::build_lookup() const {
    if (lookup_built_) return;
    for (std::size_t i = 0; i < judgments.size(); ++i) {
        const auto& j = judgments[i];
        result_rows_[{j.topic_id, j.collection_id}].push_back(i);
    }
    lookup_built_ = true;
}

std::vector<const Judgment*> Dataset::results_for(std::string_view topic_id,
                                                  std::string_view collection_id) const {
    build_lookup();
    auto it = result_rows_.find({std::string(topic_id), std::string(collection_id)});
    std::vector<const Judgment*> out;
    if (it == result_rows_.end()) return out;
    out.reserve(it->second.size());
    for (std::size_t i : it->second) out.push_back(&judgments[i]);
    return out;
}

std::vector<const Judgment*> Dataset::results_for_topic(std::string_view topic_id) const {
    std::vector<const Judgment*> out;
    for (const auto& j : judgments)
        if (j.topic_id == topic_id) out.push_back(&j);
    return out;
}

std::vector<std::string> Dataset::wse_ids_by_size() const {
    std::vector<const Collection*> wses;
    for (const auto& c : collections)
        if (c.is_wse) wses.push_back(&c);
    std::sort(wses.begin(), wses.end(), [](const Collection* a, const Collection* b) {
        std::uint64_t sa = a->true_size.value_or(a->documents.size());
        std::uint64_t sb = b->true_size.value_or(b->documents.size());
        if (sa != sb) return sa > sb;
        return a->id < b->id;
    });
    std::vector<std::string> ids;
    ids.reserve(wses.size());
    for (const auto* c : wses) ids.push_back(c->id);
    return ids;
}

void Dataset::validate() const {
    std::set<std::string> cids;
    for (const auto& c : collections) {
        require(!c.id.empty(), "collection with empty id");
        require(cids.insert(c.id).second, "duplicate collection id \"" + c.id + "\"");
        if (c.true_size)
            require(*c.true_size >= c.documents.size(),
                    "collection \"" + c.id + "\": true_size smaller than document count");
        std::set<std::string> urls;
        for (const auto& d : c.documents) {
            require(d.normalized_url == normalize_url(d.url),
                    "collection \"" + c.id + "\": normalized_url mismatch for " + d.url);
            require(urls.insert(d.normalized_url).second,
                    "collection \"" + c.id + "\": duplicate document " + d.normalized_url);
            if (d.is_media())
                require(d.body.empty(),
                        "collection \"" + c.id + "\": media document with body " + d.url);
        }
    }
    std::set<std::string> tids;
    for (const auto& t : topics) {
        require(!t.id.empty(), "topic with empty id");
        require(tids.insert(t.id).second, "duplicate topic id \"" + t.id + "\"");
        require(!tokenize_raw(t.query).empty(), "topic \"" + t.id + "\": empty query");
    }
    for (const auto& j : judgments) {
        require(tids.count(j.topic_id) > 0, "judgment references unknown topic " + j.topic_id);
        require(cids.count(j.collection_id) > 0,
                "judgment references unknown collection " + j.collection_id);
        require(j.judge_count >= 1, "judgment with judge_count < 1");
        require(j.mean_level >= 0.0 && j.mean_level <= 4.0,
                "judgment with mean_level outside [0,4]");
    }
    if (refstats.total_docs > 0) refstats.validate();
}

} // namespace fedsel
