#pragma once

#include "mten/classify.hpp"
#include "mten/randgen.hpp"

#include <cstdint>

namespace mten {

struct BenchConfig {
    int order = 3;
    int dim = 10;
    double diag_offset = 1.0;
    int trials = 100;
    std::uint64_t seed = 1;
    IterationSettings settings;
    int workers = 0;  // 0 -> hardware concurrency, capped by trials
};

struct BenchRow {
    int order = 0;
    int dim = 0;
    double diag_offset = 0.0;
    int trials = 0;
    int yes = 0;             // classified MTensor
    int no = 0;              // classified NotMTensor
    int indeterminate = 0;
    double avg_seconds = 0.0;  // mean wall-clock per classification
    std::uint64_t seed = 0;
};

/// Generates `trials` random Z-tensors (trial k uses seed + k) and
/// classifies each, fanning trials out to a worker pool. Counts are
/// deterministic for a fixed seed and independent of the worker count;
/// avg_seconds excludes generation time.
BenchRow run_bench(const BenchConfig& config);

} // namespace mten
