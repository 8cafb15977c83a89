#include "fedsel/engine.hpp"

#include <algorithm>
#include <cmath>

#include "fedsel/rng.hpp"
#include "fedsel/text.hpp"

namespace fedsel {

std::vector<std::string> CollectionEngine::searchable_tokens(const Document& doc) {
    std::vector<std::string> tokens = tokenize_stem(doc.url);
    auto append = [&tokens](const std::string& text) {
        auto t = tokenize_stem(text);
        tokens.insert(tokens.end(), t.begin(), t.end());
    };
    append(doc.title);
    append(doc.body);
    return tokens;
}

CollectionEngine::CollectionEngine(const Collection& collection, std::uint64_t dataset_seed)
    : collection_(&collection) {
    doc_len_.resize(collection.documents.size());
    recency_.resize(collection.documents.size());
    std::unordered_map<std::string, std::uint32_t> tf;
    for (std::size_t i = 0; i < collection.documents.size(); ++i) {
        const Document& doc = collection.documents[i];
        auto tokens = searchable_tokens(doc);
        tf.clear();
        for (const auto& t : tokens) tf[t]++;
        for (const auto& [term, count] : tf)
            postings_[term].emplace_back(static_cast<std::uint32_t>(i), count);
        doc_len_[i] = static_cast<std::uint32_t>(tokens.size());
        total_tokens_ += static_cast<double>(tokens.size());
        for (const auto& [term, count] : tf) coll_tf_[term] += count;
        recency_[i] = hash01(dataset_seed, "recency", collection.id, doc.normalized_url);
    }
}

CollectionEngine::Result CollectionEngine::search(const std::vector<std::string>& query_tokens,
                                                  std::size_t k) const {
    Result res;
    if (query_tokens.empty() || collection_->documents.empty()) return res;

    // distinct query terms with per-term qtf
    std::vector<std::pair<std::string, std::uint32_t>> terms;
    for (const auto& t : query_tokens) {
        auto it = std::find_if(terms.begin(), terms.end(),
                               [&](const auto& p) { return p.first == t; });
        if (it == terms.end())
            terms.emplace_back(t, 1);
        else
            it->second++;
    }

    // candidates = docs containing at least one query term
    std::unordered_map<std::uint32_t, std::uint32_t> coord; // doc -> matched distinct terms
    for (const auto& [term, qtf] : terms) {
        auto it = postings_.find(term);
        if (it == postings_.end()) continue;
        for (const auto& [doc, tf] : it->second) coord[doc]++;
    }
    res.total_matches = coord.size();
    if (coord.empty()) return res;

    std::vector<std::pair<double, std::uint32_t>> scored;
    scored.reserve(coord.size());
    const double mu = 2000.0;
    for (const auto& [doc, matched] : coord) {
        double score = 0.0;
        switch (collection_->retrieval_model) {
        case RetrievalModel::QueryLikelihood: {
            for (const auto& [term, qtf] : terms) {
                double tf = 0.0;
                auto it = postings_.find(term);
                if (it != postings_.end()) {
                    auto pit = std::lower_bound(
                        it->second.begin(), it->second.end(), doc,
                        [](const auto& p, std::uint32_t d) { return p.first < d; });
                    if (pit != it->second.end() && pit->first == doc) tf = pit->second;
                }
                double p_coll = 0.0;
                auto cit = coll_tf_.find(term);
                if (cit != coll_tf_.end() && total_tokens_ > 0)
                    p_coll = static_cast<double>(cit->second) / total_tokens_;
                double denom = static_cast<double>(doc_len_[doc]) + mu;
                double num = tf + mu * p_coll;
                score += static_cast<double>(qtf) * std::log(num / denom);
            }
            break;
        }
        case RetrievalModel::BooleanCoordination:
            score = static_cast<double>(matched) + recency_[doc] * 0.5;
            break;
        case RetrievalModel::RecencyRandom:
            score = recency_[doc];
            break;
        }
        scored.emplace_back(score, doc);
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second; // stable by document position
    });
    std::size_t take = std::min(k, scored.size());
    res.doc_indices.reserve(take);
    for (std::size_t i = 0; i < take; ++i) res.doc_indices.push_back(scored[i].second);
    return res;
}

} // namespace fedsel
