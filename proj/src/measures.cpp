#include "vat/measures.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace vat {

namespace {

void check_attack_set(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count()) {
        throw PreconditionError("attack set has a different vertex universe than the graph");
    }
    if (s.empty()) throw PreconditionError("attack set must be nonempty");
    if (s.size() == g.vertex_count()) throw PreconditionError("attack set must be a proper subset");
}

// Largest residual component over single-word adjacency masks. The exact
// search spends nearly all of its time here.
int largest_component_size_64(const std::vector<std::uint64_t>& adj, std::uint64_t full,
                              std::uint64_t removed) {
    std::uint64_t unvisited = full & ~removed;
    int best = 0;
    while (unvisited != 0) {
        std::uint64_t frontier = unvisited & (~unvisited + 1);
        unvisited ^= frontier;
        std::uint64_t comp = 0;
        while (frontier != 0) {
            comp |= frontier;
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f != 0) {
                const int u = std::countr_zero(f);
                f &= f - 1;
                next |= adj[u];
            }
            frontier = next & unvisited;
            unvisited &= ~frontier;
        }
        best = std::max(best, std::popcount(comp));
    }
    return best;
}

std::vector<std::uint64_t> adjacency_words(const Graph& g) {
    std::vector<std::uint64_t> adj(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbors(v).words()[0];
    return adj;
}

VertexSet set_from_mask(int n, std::uint64_t mask) {
    VertexSet s(n);
    while (mask != 0) {
        s.add(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return s;
}

struct Incumbent {
    bool found = false;
    Ratio value;
    std::uint64_t witness = 0;
    int residual = 0;
    int largest = 0;
};

// Enumerates size classes in increasing order and, within a class,
// combinations in lexicographic order of the sorted vertex lists. Only a
// strict value improvement replaces the incumbent, so the first minimizer in
// that order wins: smallest value, then smallest |S|, then smallest list.
AttackResult exact_search(const Graph& g, Measure measure, const SearchOptions& options) {
    const int n = g.vertex_count();
    if (n < 2) throw PreconditionError("exact search requires at least 2 vertices");
    if (n > kExactSearchGuard && !options.override_size_guard) {
        throw SizeGuardError(n, kExactSearchGuard);
    }
    if (n > 64) throw PreconditionError("exact search supports at most 64 vertices");
    if (measure == Measure::UVAT && is_clique(g)) {
        throw CliqueInput("unsmoothened VAT is undefined on the clique K" + std::to_string(n));
    }

    const std::vector<std::uint64_t> adj = adjacency_words(g);
    const std::uint64_t full = n == 64 ? ~0ULL : (1ULL << n) - 1;
    const int max_size = measure == Measure::VAT ? n - 1 : n - 2;

    Incumbent best;
    std::vector<int> comb;
    for (int s = 1; s <= max_size; ++s) {
        if (options.use_pruning && best.found) {
            const Ratio class_bound = measure == Measure::VAT ? Ratio(s, n - s) : Ratio(s, n - s - 1);
            // Bounds grow with s, so no later class can beat the incumbent either.
            if (class_bound >= best.value) break;
        }
        comb.resize(s);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            std::uint64_t mask = 0;
            for (int v : comb) mask |= 1ULL << v;
            const int largest = largest_component_size_64(adj, full, mask);
            const int residual = n - s - largest;
            if (measure == Measure::VAT) {
                const Ratio value(s, residual + 1);
                if (!best.found || value < best.value) best = {true, value, mask, residual, largest};
            } else if (residual >= 1) {
                const Ratio value(s, residual);
                if (!best.found || value < best.value) best = {true, value, mask, residual, largest};
            }
            // next combination in lexicographic order
            int i = s - 1;
            while (i >= 0 && comb[i] == n - s + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
        }
    }

    if (!best.found) {
        // Reachable only for UVAT on the edgeless 2-vertex graph: no attack
        // set leaves two residual vertices apart.
        throw UndefinedMeasure("no nonempty proper attack set has a positive residual");
    }
    return AttackResult{measure, best.value, set_from_mask(n, best.witness), best.residual,
                        best.largest};
}

}  // namespace

const char* measure_name(Measure m) { return m == Measure::VAT ? "vat" : "uvat"; }

int residual_size(const Graph& g, const VertexSet& s) {
    check_attack_set(g, s);
    return g.vertex_count() - s.size() - largest_component_size(g, s);
}

Ratio vat_value(const Graph& g, const VertexSet& s) {
    return Ratio(s.size(), residual_size(g, s) + 1);
}

std::optional<Ratio> uvat_value(const Graph& g, const VertexSet& s) {
    const int residual = residual_size(g, s);
    if (residual == 0) return std::nullopt;
    return Ratio(s.size(), residual);
}

AttackResult vat_exact(const Graph& g, const SearchOptions& options) {
    return exact_search(g, Measure::VAT, options);
}

AttackResult uvat_exact(const Graph& g, const SearchOptions& options) {
    return exact_search(g, Measure::UVAT, options);
}

AttackResult greedy_uvat(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) throw PreconditionError("greedy attack requires at least 3 vertices");
    if (is_clique(g)) {
        throw CliqueInput("unsmoothened VAT is undefined on the clique K" + std::to_string(n));
    }
    if (!is_connected(g)) throw PreconditionError("greedy attack requires a connected graph");

    const VertexSet all = VertexSet::full(n);
    VertexSet removed(n);
    bool found = false;
    AttackResult best;
    for (int step = 0; step < n - 1; ++step) {
        const std::vector<VertexSet> comps = components_after_removal(g, removed);
        const VertexSet* target = &comps.front();
        for (const VertexSet& c : comps) {
            if (c.size() > target->size()) target = &c;
        }
        // Highest residual degree in the largest component, ties to lowest id.
        int pick = -1;
        int pick_degree = -1;
        target->for_each([&](int v) {
            const int d = (g.neighbors(v) - removed).size();
            if (d > pick_degree) {
                pick = v;
                pick_degree = d;
            }
        });
        removed.add(pick);

        const int largest = largest_component_size(g, removed);
        const int residual = n - removed.size() - largest;
        if (residual >= 1) {
            const Ratio value(removed.size(), residual);
            if (!found || value < best.value) {
                best = AttackResult{Measure::UVAT, value, removed, residual, largest};
                found = true;
            }
        }
    }

    if (!found) {
        // Every prefix left a connected residual; fall back to the separator
        // that attacks everything except the first non-adjacent pair.
        for (int u = 0; u < n && !found; ++u) {
            for (int v = u + 1; v < n && !found; ++v) {
                if (g.has_edge(u, v)) continue;
                VertexSet s = all;
                s.remove(u);
                s.remove(v);
                const int largest = largest_component_size(g, s);
                best = AttackResult{Measure::UVAT, Ratio(n - 2, 2 - largest), s, 2 - largest,
                                    largest};
                found = true;
            }
        }
    }
    return best;
}

}  // namespace vat
