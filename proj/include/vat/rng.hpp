#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vat/graph.hpp"

namespace vat {

// mt19937_64 with explicit derivation of bounded integers, unit doubles and
// samples, so a seed fixes the byte-exact output stream on every platform.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, bound) by rejection; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return r % bound;
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool next_bernoulli(double p) { return next_unit() < p; }

    // k distinct values from 0..n-1 via partial Fisher-Yates, returned ascending.
    std::vector<int> sample(int n, int k);

private:
    std::mt19937_64 engine_;
};

// Stateless mix used to derive independent per-instance seeds from
// (sweep seed, instance index); splitmix64 finalizer.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// Balanced bipartite graph with each cross pair present independently with
// probability p.
BipartiteGraph random_bipartite(int n, double p, DeterministicRng& rng);

// Graph on n vertices with each pair present independently with probability p.
Graph random_graph(int n, double p, DeterministicRng& rng);

}  // namespace vat
