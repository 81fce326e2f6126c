#include "vat/sweep.hpp"

#include <algorithm>
#include <thread>

#include "vat/io.hpp"
#include "vat/rng.hpp"

namespace vat {

namespace {

// Runs check over indices [0, count) on `workers` threads and merges the
// per-thread failure lists in index order.
SweepResult run_indexed(long long count, int workers,
                        const std::function<std::optional<BipartiteGraph>(long long)>& instance_at,
                        const InstanceCheck& check) {
    if (workers < 1) throw PreconditionError("worker count must be at least 1");
    workers = static_cast<int>(std::min<long long>(workers, std::max<long long>(count, 1)));

    std::vector<std::vector<SweepFailure>> failures(workers);
    std::vector<long long> checked(workers, 0);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            for (long long i = w; i < count; i += workers) {
                const std::optional<BipartiteGraph> b = instance_at(i);
                if (!b) continue;
                ++checked[w];
                if (std::optional<std::string> detail = check(*b)) {
                    failures[w].push_back(SweepFailure{i, to_bipartite_text(*b), *detail});
                }
            }
        });
    }
    for (std::thread& t : threads) t.join();

    SweepResult result;
    for (int w = 0; w < workers; ++w) result.checked += checked[w];
    for (std::vector<SweepFailure>& part : failures) {
        result.failures.insert(result.failures.end(), part.begin(), part.end());
    }
    std::sort(result.failures.begin(), result.failures.end(),
              [](const SweepFailure& a, const SweepFailure& b) { return a.index < b.index; });
    return result;
}

}  // namespace

SweepResult sweep_exhaustive(int n, int workers, const InstanceCheck& check) {
    if (n < 1 || n * n > 62) {
        throw PreconditionError("exhaustive sweeps are limited to side sizes with n*n <= 62");
    }
    const std::uint64_t full = (1ULL << (n * n)) - 1;
    return run_indexed(
        static_cast<long long>(full) + 1, workers,
        [n, full](long long index) -> std::optional<BipartiteGraph> {
            const std::uint64_t mask = static_cast<std::uint64_t>(index);
            if (mask == 0 || mask == full) return std::nullopt;  // edgeless / complete
            return bipartite_from_cross_mask(n, n, mask);
        },
        check);
}

SweepResult sweep_random(int n, long long trials, std::uint64_t seed, int workers,
                         const InstanceCheck& check) {
    if (n < 2) throw PreconditionError("random sweeps require side size at least 2");
    if (trials < 1) throw PreconditionError("trial count must be at least 1");
    constexpr double kDensities[] = {0.25, 0.5, 0.75};
    return run_indexed(
        trials, workers,
        [n, seed](long long index) -> std::optional<BipartiteGraph> {
            DeterministicRng rng(mix_seed(seed, static_cast<std::uint64_t>(index)));
            const double p = kDensities[rng.next_below(3)];
            // Resample until the instance qualifies for the reduction.
            while (true) {
                BipartiteGraph b = random_bipartite(n, p, rng);
                if (b.edge_count() != 0 && !b.is_complete()) return b;
            }
        },
        check);
}

}  // namespace vat
