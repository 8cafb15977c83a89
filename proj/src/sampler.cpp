#include "fedsel/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "fedsel/error.hpp"
#include "fedsel/text.hpp"

namespace fedsel {

const char* to_string(StrategyKind k) {
    switch (k) {
    case StrategyKind::Random: return "random";
    case StrategyKind::Top: return "top";
    case StrategyKind::Zipf: return "zipf";
    }
    return "?";
}

StrategyKind strategy_kind_from_string(std::string_view s) {
    if (s == "random") return StrategyKind::Random;
    if (s == "top") return StrategyKind::Top;
    if (s == "zipf") return StrategyKind::Zipf;
    fail("unknown sampling strategy \"" + std::string(s) + "\"");
}

void SamplingStrategy::validate() const {
    require(query_budget >= 1, "sampling: query_budget must be >= 1");
    require(results_per_query >= 1, "sampling: results_per_query must be >= 1");
    require(zipf_bins >= 1, "sampling: zipf_bins must be >= 1");
}

std::size_t CollectionSamples::unique_doc_count(const Collection& c, bool pages_only) const {
    std::unordered_set<std::string_view> urls;
    for (const auto& r : records) {
        if (pages_only && !r.full_page) continue;
        for (auto di : r.docs) urls.insert(c.documents[di].normalized_url);
    }
    return urls.size();
}

QueryLog QueryLog::from_refstats(const ReferenceCorpusStats& stats) {
    QueryLog log;
    log.entries.assign(stats.df.begin(), stats.df.end());
    std::sort(log.entries.begin(), log.entries.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return log;
}

void QueryLog::validate() const {
    for (std::size_t i = 1; i < entries.size(); ++i)
        require(entries[i - 1].second >= entries[i].second,
                "query log frequencies must be non-increasing");
}

EngineSet::EngineSet(const Dataset& ds, std::uint64_t dataset_seed) {
    engines_.reserve(ds.collections.size());
    for (const auto& c : ds.collections) engines_.emplace_back(c, dataset_seed);
}

QuerySource::QuerySource(const SamplingStrategy& strategy, const ReferenceCorpusStats& refstats,
                         const QueryLog& log, std::uint64_t seed, std::string_view stream_label)
    : strategy_(&strategy), log_(&log), rng_(Rng::stream(seed, stream_label)),
      bootstrap_(strategy.bootstrap_term) {
    if (strategy.kind == StrategyKind::Zipf) {
        bins_ = refstats.make_bins(strategy.zipf_bins);
        for (auto& bin : bins_) rng_.shuffle(bin); // uniform unused pick per bin
        bin_cursor_.assign(bins_.size(), 0);
    }
}

void QuerySource::set_bootstrap(std::string term) { bootstrap_ = std::move(term); }

void QuerySource::observe_tokens(const std::vector<std::string>& tokens) {
    if (strategy_->kind != StrategyKind::Random) return;
    for (const auto& t : tokens) {
        auto it = std::lower_bound(seen_terms_.begin(), seen_terms_.end(), t);
        if (it == seen_terms_.end() || *it != t) seen_terms_.insert(it, t);
    }
}

std::string QuerySource::pick() {
    switch (strategy_->kind) {
    case StrategyKind::Top:
        if (log_pos_ >= log_->entries.size())
            fail("sampling: query log exhausted, budget unreachable");
        return log_->entries[log_pos_++].first;
    case StrategyKind::Zipf: {
        for (std::size_t tried = 0; tried < bins_.size(); ++tried) {
            std::size_t b = next_bin_;
            next_bin_ = (next_bin_ + 1) % bins_.size();
            if (bin_cursor_[b] < bins_[b].size()) return bins_[b][bin_cursor_[b]++];
        }
        fail("sampling: all term bins exhausted, budget unreachable");
    }
    case StrategyKind::Random:
        if (seen_terms_.empty()) {
            if (bootstrap_.empty())
                fail("sampling: random strategy has no sampled terms and no bootstrap term");
            return bootstrap_;
        }
        return seen_terms_[rng_.below(seen_terms_.size())];
    }
    fail("sampling: unknown strategy kind");
}

namespace {

std::string derive_bootstrap(const Collection& c) {
    if (c.documents.empty()) return {};
    auto tokens = CollectionEngine::searchable_tokens(c.documents.front());
    std::unordered_map<std::string, std::size_t> freq;
    for (const auto& t : tokens) freq[t]++;
    std::string best;
    std::size_t best_n = 0;
    for (const auto& [t, n] : freq) {
        if (n > best_n || (n == best_n && (best.empty() || t < best))) {
            best = t;
            best_n = n;
        }
    }
    return best;
}

std::vector<std::string> record_tokens(const Collection& c, const SampleRecord& r) {
    std::vector<std::string> out;
    for (auto di : r.docs) {
        const Document& d = c.documents[di];
        std::vector<std::string> t;
        if (d.is_media()) {
            t = tokenize_stem(d.url);
        } else if (r.full_page) {
            t = CollectionEngine::searchable_tokens(d);
        } else {
            t = tokenize_stem(d.url);
            auto tt = tokenize_stem(d.title);
            auto ts = tokenize_stem(d.snippet);
            t.insert(t.end(), tt.begin(), tt.end());
            t.insert(t.end(), ts.begin(), ts.end());
        }
        out.insert(out.end(), t.begin(), t.end());
    }
    return out;
}

} // namespace

SampleStore run_sampling(const Dataset& ds, const EngineSet& engines,
                         const SamplingStrategy& strategy, std::uint64_t seed) {
    strategy.validate();
    require(engines.size() == ds.collections.size(), "run_sampling: engine set mismatch");
    SampleStore store;
    store.strategy = strategy;
    store.collections.resize(ds.collections.size());

    QueryLog log;
    if (strategy.kind == StrategyKind::Top) log = QueryLog::from_refstats(ds.refstats);

    // Top and Zipf issue one shared query sequence to every engine
    std::vector<std::string> shared_queries;
    if (strategy.kind != StrategyKind::Random) {
        QuerySource source(strategy, ds.refstats, log, seed,
                           std::string("queries-") + to_string(strategy.kind));
        shared_queries.reserve(strategy.query_budget);
        for (std::size_t q = 0; q < strategy.query_budget; ++q)
            shared_queries.push_back(source.pick());
    }

    for (std::size_t ci = 0; ci < ds.collections.size(); ++ci) {
        const Collection& coll = ds.collections[ci];
        CollectionSamples& cs = store.collections[ci];
        cs.collection_id = coll.id;
        if (coll.documents.empty()) continue; // dead engine: nothing to sample

        std::optional<QuerySource> random_source;
        if (strategy.kind == StrategyKind::Random) {
            random_source.emplace(strategy, ds.refstats, log, seed, "random-" + coll.id);
            if (strategy.bootstrap_term.empty())
                random_source->set_bootstrap(derive_bootstrap(coll));
        }

        cs.records.reserve(strategy.query_budget);
        for (std::size_t q = 0; q < strategy.query_budget; ++q) {
            SampleRecord rec;
            rec.query = random_source ? random_source->pick() : shared_queries[q];
            rec.full_page = q < strategy.full_page_queries;
            auto res = engines[ci].search({rec.query}, strategy.results_per_query);
            rec.docs.assign(res.doc_indices.begin(), res.doc_indices.end());
            rec.num_results = static_cast<std::uint32_t>(rec.docs.size());
            if (random_source) random_source->observe_tokens(record_tokens(coll, rec));
            cs.records.push_back(std::move(rec));
        }
    }
    return store;
}

SampleStore subsample(const SampleStore& store, double fraction, std::uint64_t seed) {
    require(fraction > 0.0 && fraction <= 1.0, "subsample: fraction outside (0,1]");
    if (fraction == 1.0) return store;
    SampleStore out;
    out.strategy = store.strategy;
    out.collections.reserve(store.collections.size());
    for (const auto& cs : store.collections) {
        // distinct queries ranked by a fraction-independent priority; keeping a
        // prefix makes subsamples nested across fractions
        std::vector<std::string> distinct;
        for (const auto& r : cs.records)
            if (std::find(distinct.begin(), distinct.end(), r.query) == distinct.end())
                distinct.push_back(r.query);
        std::vector<std::pair<double, std::string>> ranked;
        ranked.reserve(distinct.size());
        for (auto& q : distinct) ranked.emplace_back(hash01(seed, "subsample", q), q);
        std::sort(ranked.begin(), ranked.end());
        std::size_t keep = static_cast<std::size_t>(
            std::llround(fraction * static_cast<double>(distinct.size())));
        keep = std::max<std::size_t>(std::min(keep, distinct.size()),
                                     distinct.empty() ? 0 : 1);
        std::unordered_set<std::string> kept;
        for (std::size_t i = 0; i < keep; ++i) kept.insert(ranked[i].second);

        CollectionSamples ncs;
        ncs.collection_id = cs.collection_id;
        for (const auto& r : cs.records)
            if (kept.count(r.query)) ncs.records.push_back(r);
        out.collections.push_back(std::move(ncs));
    }
    return out;
}

} // namespace fedsel
