#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "fedsel/corpus.hpp"

namespace fedsel {

/// Simulated uncooperative search engine over one collection's full
/// documents. This is the only component allowed to see a collection's whole
/// content; the broker side works from samples.
class CollectionEngine {
public:
    CollectionEngine(const Collection& collection, std::uint64_t dataset_seed);

    struct Result {
        std::vector<std::size_t> doc_indices; // into collection.documents
        std::size_t total_matches = 0;        // before the top-k cutoff
    };

    /// Top-k documents matching at least one query token, ranked under the
    /// collection's retrieval model. Deterministic.
    Result search(const std::vector<std::string>& query_tokens, std::size_t k) const;

    const Collection& collection() const { return *collection_; }

    /// Searchable token multiset of a document (url + title + body).
    static std::vector<std::string> searchable_tokens(const Document& doc);

private:
    const Collection* collection_;
    std::unordered_map<std::string, std::vector<std::pair<std::uint32_t, std::uint32_t>>>
        postings_; // term -> (doc index, tf)
    std::vector<std::uint32_t> doc_len_;
    std::vector<double> recency_; // static pseudo-random freshness per doc
    double total_tokens_ = 0.0;
    std::unordered_map<std::string, std::uint64_t> coll_tf_;
};

} // namespace fedsel
