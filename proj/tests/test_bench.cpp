#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mten/bench.hpp"

#include <cmath>

using namespace mten;

namespace {

// Diagonal offset near the expected off-diagonal row sum (n^2 - 1) / 2,
// so individual trials genuinely split between verdicts.
BenchConfig boundary_config() {
    BenchConfig config;
    config.order = 3;
    config.dim = 8;
    config.diag_offset = 31.0;
    config.trials = 40;
    config.seed = 7;
    config.workers = 1;
    return config;
}

} // namespace

TEST_CASE("counts are deterministic across repeated runs") {
    const BenchConfig config = boundary_config();
    const BenchRow first = run_bench(config);
    CHECK(first.yes + first.no + first.indeterminate == config.trials);
    CHECK(first.yes > 0);  // boundary config produces a genuine mix
    CHECK(first.no > 0);
    CHECK(std::isfinite(first.avg_seconds));
    CHECK(first.avg_seconds >= 0.0);

    for (int rep = 0; rep < 2; ++rep) {
        const BenchRow again = run_bench(config);
        CHECK(again.yes == first.yes);
        CHECK(again.no == first.no);
        CHECK(again.indeterminate == first.indeterminate);
    }
}

TEST_CASE("counts are independent of the worker count") {
    BenchConfig config = boundary_config();
    const BenchRow base = run_bench(config);
    for (int workers : {2, 4, 8}) {
        config.workers = workers;
        const BenchRow row = run_bench(config);
        CHECK(row.yes == base.yes);
        CHECK(row.no == base.no);
        CHECK(row.indeterminate == base.indeterminate);
    }
    config.workers = 0;  // auto
    const BenchRow autow = run_bench(config);
    CHECK(autow.yes == base.yes);
}

TEST_CASE("configuration is validated") {
    BenchConfig config = boundary_config();
    config.trials = 0;
    CHECK_THROWS_AS(run_bench(config), std::invalid_argument);
    config = boundary_config();
    config.settings.tol = -1.0;
    CHECK_THROWS_AS(run_bench(config), std::invalid_argument);
}

TEST_CASE("row echoes its configuration") {
    const BenchConfig config = boundary_config();
    const BenchRow row = run_bench(config);
    CHECK(row.order == config.order);
    CHECK(row.dim == config.dim);
    CHECK(row.diag_offset == config.diag_offset);
    CHECK(row.trials == config.trials);
    CHECK(row.seed == config.seed);
}
