#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fedsel/corpus.hpp"

namespace fedsel {

/// Parameters of the synthetic federated-web generator. Defaults reproduce
/// the shape of the 108-engine test collection: heterogeneous content,
/// log-normal sizes spanning several orders of magnitude, overlapping
/// documents, per-engine retrieval models and a small set of broad-coverage
/// web search engines.
struct GeneratorConfig {
    std::size_t num_collections = 108;
    std::size_t num_wse = 10;
    std::size_t num_topics = 50;
    std::size_t num_subjects = 24;

    std::size_t global_vocab = 2000;
    std::size_t subject_vocab = 150;
    double zipf_exponent = 1.07;

    // log-normal document counts, truncated to [min_size, max_size]
    double size_log_mean = 4.787; // ~120 docs median
    double size_log_sigma = 1.9;
    std::uint64_t min_size = 10;
    std::uint64_t max_size = 30000;
    std::vector<std::uint64_t> explicit_sizes; // overrides the draw when set

    double overlap_rate = 0.15;     // non-WSE chance of indexing a shared page
    double wse_overlap_rate = 0.6;  // WSEs mostly mirror the shared web
    std::size_t shared_pool_size = 4000;

    double media_fraction = 0.05;
    double global_token_fraction = 0.5;
    double drift_token_fraction = 0.1; // tokens from an unrelated subject
    std::size_t body_len_min = 20;
    std::size_t body_len_mean = 60;
    std::size_t body_len_max = 300;
    std::size_t snippet_len = 15;

    std::size_t results_per_topic = 10; // judged results per (topic, engine)
    double ambiguous_fraction = 0.5;
    // marginal level proportions: Non, Rel, HRel, Key, Nav
    std::array<double, 5> level_props = {0.82841, 0.08756, 0.05533, 0.02456, 0.00413};
    int max_judges = 3;

    void validate() const;
};

/// Deterministic function of (config, seed).
Dataset generate_synthetic(const GeneratorConfig& config, std::uint64_t seed);

} // namespace fedsel
