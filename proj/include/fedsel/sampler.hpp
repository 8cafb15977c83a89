#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fedsel/corpus.hpp"
#include "fedsel/engine.hpp"
#include "fedsel/rng.hpp"

namespace fedsel {

enum class StrategyKind { Random, Top, Zipf };

const char* to_string(StrategyKind k);
StrategyKind strategy_kind_from_string(std::string_view s);

struct SamplingStrategy {
    StrategyKind kind = StrategyKind::Zipf;
    std::size_t query_budget = 197;     // snippet queries in total
    std::size_t full_page_queries = 40; // first N queries also fetch pages
    std::size_t results_per_query = 10;
    std::size_t zipf_bins = 10;
    std::string bootstrap_term; // Random strategy; empty = derive from seed doc

    void validate() const;
};

struct SampleRecord {
    std::string query;
    bool full_page = false;
    std::uint32_t num_results = 0;       // results collected, <= results_per_query
    std::vector<std::uint32_t> docs;     // indices into the owner collection
};

struct CollectionSamples {
    std::string collection_id;
    std::vector<SampleRecord> records;

    /// |S_i| restricted to full-page records when pages_only.
    std::size_t unique_doc_count(const Collection& c, bool pages_only) const;
};

struct SampleStore {
    SamplingStrategy strategy;
    std::vector<CollectionSamples> collections; // dataset order
};

/// Frequency-ranked query log for the Top strategy. The synthetic stand-in is
/// the reference-corpus vocabulary ranked by document frequency.
struct QueryLog {
    std::vector<std::pair<std::string, std::uint64_t>> entries; // freq non-increasing
    static QueryLog from_refstats(const ReferenceCorpusStats& stats);
    void validate() const;
};

/// Engines for every collection of a dataset, built once and shared.
class EngineSet {
public:
    EngineSet(const Dataset& ds, std::uint64_t dataset_seed);
    const CollectionEngine& operator[](std::size_t i) const { return engines_[i]; }
    std::size_t size() const { return engines_.size(); }

private:
    std::vector<CollectionEngine> engines_;
};

/// Stateful query picker for one sampling run; see the strategy descriptions.
/// Throws Error when the query source is exhausted before the budget.
class QuerySource {
public:
    QuerySource(const SamplingStrategy& strategy, const ReferenceCorpusStats& refstats,
                const QueryLog& log, std::uint64_t seed, std::string_view stream_label);

    std::string pick();

    /// Random strategy feedback: tokens of newly sampled documents.
    void observe_tokens(const std::vector<std::string>& tokens);
    void set_bootstrap(std::string term);

private:
    const SamplingStrategy* strategy_;
    const QueryLog* log_;
    Rng rng_;
    std::size_t log_pos_ = 0;
    std::vector<std::vector<std::string>> bins_;
    std::vector<std::size_t> bin_cursor_;
    std::size_t next_bin_ = 0;
    std::vector<std::string> seen_terms_; // sorted unique, Random strategy
    std::string bootstrap_;
};

/// Query-based sampling of every collection in the dataset. Deterministic in
/// (dataset, strategy, seed). Top and Zipf issue one shared query sequence to
/// all engines; Random adapts per collection.
SampleStore run_sampling(const Dataset& ds, const EngineSet& engines,
                         const SamplingStrategy& strategy, std::uint64_t seed);

/// Keep a uniformly random fraction of the queries (all records of a retained
/// query are kept). Same seed and decreasing fraction give nested stores.
SampleStore subsample(const SampleStore& store, double fraction, std::uint64_t seed);

} // namespace fedsel
