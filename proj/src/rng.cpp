#include "vat/rng.hpp"

#include <algorithm>
#include <numeric>

namespace vat {

std::vector<int> DeterministicRng::sample(int n, int k) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k; ++i) {
        const int j = i + static_cast<int>(next_below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

BipartiteGraph random_bipartite(int n, double p, DeterministicRng& rng) {
    BipartiteGraph b(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (rng.next_bernoulli(p)) b.add_edge(i, j);
        }
    }
    return b;
}

Graph random_graph(int n, double p, DeterministicRng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.next_bernoulli(p)) g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace vat
