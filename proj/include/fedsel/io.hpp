#pragma once

#include <filesystem>
#include <string>

#include "fedsel/corpus.hpp"
#include "fedsel/sampler.hpp"

namespace fedsel {

/// Write a dataset as collections.jsonl, topics.tsv, judgments.tsv and
/// refstats.tsv under `dir`. Deterministic: equal datasets produce
/// byte-identical files.
void save_dataset(const Dataset& ds, const std::filesystem::path& dir);

/// Load and fully validate a dataset from `dir`. Schema violations raise an
/// Error naming the file, line and field.
Dataset load_dataset(const std::filesystem::path& dir);

/// Sample persistence: samples/<strategy>/<collection_id>.jsonl, one record
/// per line.
void save_samples(const SampleStore& store, const std::filesystem::path& dir);
SampleStore load_samples(const Dataset& ds, const SamplingStrategy& strategy,
                         const std::filesystem::path& dir);

/// Shortest round-tripping decimal form of a double (deterministic output).
std::string format_double(double v);

} // namespace fedsel
