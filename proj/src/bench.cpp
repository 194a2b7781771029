#include "mten/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace mten {

BenchRow run_bench(const BenchConfig& config) {
    if (config.trials < 1) throw std::invalid_argument("bench requires trials >= 1");
    config.settings.validate();

    int workers = config.workers;
    if (workers <= 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers < 1) workers = 1;
    }
    workers = std::min(workers, config.trials);

    std::vector<MStatus> statuses(static_cast<std::size_t>(config.trials));
    std::vector<double> seconds(static_cast<std::size_t>(config.trials), 0.0);
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_lock;

    const auto work = [&] {
        try {
            for (;;) {
                const int trial = next.fetch_add(1);
                if (trial >= config.trials || failed.load()) return;
                GenSpec gen;
                gen.order = config.order;
                gen.dim = config.dim;
                gen.diag_offset = config.diag_offset;
                gen.seed = trial_seed(config.seed, static_cast<std::uint64_t>(trial));
                const DenseTensor tensor = random_z_tensor(gen);

                const auto start = std::chrono::steady_clock::now();
                const MTensorVerdict verdict = classify_m_tensor(tensor, config.settings);
                const auto stop = std::chrono::steady_clock::now();
                statuses[static_cast<std::size_t>(trial)] = verdict.status;
                seconds[static_cast<std::size_t>(trial)] =
                    std::chrono::duration<double>(stop - start).count();
            }
        } catch (...) {
            std::scoped_lock lock(error_lock);
            if (!failed.exchange(true)) error = std::current_exception();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers - 1));
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (std::thread& t : pool) t.join();
    if (failed.load()) std::rethrow_exception(error);

    BenchRow row;
    row.order = config.order;
    row.dim = config.dim;
    row.diag_offset = config.diag_offset;
    row.trials = config.trials;
    row.seed = config.seed;
    double total_seconds = 0.0;
    for (int trial = 0; trial < config.trials; ++trial) {
        switch (statuses[static_cast<std::size_t>(trial)]) {
            case MStatus::MTensor: ++row.yes; break;
            case MStatus::NotMTensor: ++row.no; break;
            case MStatus::Indeterminate: ++row.indeterminate; break;
        }
        total_seconds += seconds[static_cast<std::size_t>(trial)];
    }
    row.avg_seconds = total_seconds / config.trials;
    return row;
}

} // namespace mten
