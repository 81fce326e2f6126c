#include "vat/biclique.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace vat {

namespace {

void check_balanced(const BipartiteGraph& b, const char* op) {
    if (!b.balanced()) {
        throw PreconditionError(std::string(op) + " requires a balanced bipartite graph, got " +
                                std::to_string(b.left_size()) + "x" +
                                std::to_string(b.right_size()));
    }
}

void check_guard(const BipartiteGraph& b, const BicliqueSearchOptions& options) {
    const int n = std::max(b.left_size(), b.right_size());
    if (n > kBicliqueSearchGuard && !options.override_size_guard) {
        throw SizeGuardError(n, kBicliqueSearchGuard);
    }
    if (n > 64) throw PreconditionError("biclique search supports at most 64 vertices per side");
}

std::vector<std::uint64_t> left_adjacency_words(const BipartiteGraph& b) {
    std::vector<std::uint64_t> adj(b.left_size());
    for (int i = 0; i < b.left_size(); ++i) adj[i] = b.neighbors_of_left(i).words()[0];
    return adj;
}

std::vector<std::uint64_t> right_adjacency_words(const BipartiteGraph& b) {
    std::vector<std::uint64_t> adj(b.right_size());
    for (int j = 0; j < b.right_size(); ++j) adj[j] = b.neighbors_of_right(j).words()[0];
    return adj;
}

VertexSet set_from_mask(int universe, std::uint64_t mask) {
    VertexSet s(universe);
    while (mask != 0) {
        s.add(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return s;
}

std::uint64_t lowest_bits(std::uint64_t mask, int count) {
    std::uint64_t out = 0;
    for (int i = 0; i < count; ++i) {
        const std::uint64_t bit = mask & (~mask + 1);
        out |= bit;
        mask ^= bit;
    }
    return out;
}

struct BalancedSearch {
    int n;
    const std::vector<std::uint64_t>& adj_left;
    std::uint64_t full_right;
    int target;  // early stop once best_k reaches it; 0 disables
    int best_k = 0;
    std::uint64_t best_left = 0;
    std::uint64_t best_right = 0;

    bool dfs(int next, std::uint64_t chosen, std::uint64_t nbhd) {
        const int chosen_size = std::popcount(chosen);
        const int nbhd_size = std::popcount(nbhd);
        const int balanced = std::min(chosen_size, nbhd_size);
        if (balanced > best_k) {
            best_k = balanced;
            best_left = chosen;
            best_right = nbhd;
            if (target != 0 && best_k >= target) return true;
        }
        if (next == n) return false;
        const int upper = std::min(chosen_size + n - next, nbhd_size);
        if (upper <= best_k) return false;
        if (dfs(next + 1, chosen | (1ULL << next), nbhd & adj_left[next])) return true;
        return dfs(next + 1, chosen, nbhd);
    }
};

MaxBicliqueResult balanced_search(const BipartiteGraph& b, int target) {
    const int n = b.left_size();
    const std::vector<std::uint64_t> adj = left_adjacency_words(b);
    const std::uint64_t full_right = n == 64 ? ~0ULL : (1ULL << n) - 1;
    BalancedSearch search{n, adj, full_right, target};
    search.dfs(0, 0, full_right);
    if (search.best_k == 0) return {0, std::nullopt};
    const int k = search.best_k;
    const VertexSet left_part = set_from_mask(n, lowest_bits(search.best_left, k));
    const VertexSet right_part = set_from_mask(n, lowest_bits(search.best_right, k));
    return {k, make_biclique_witness(left_part, right_part)};
}

}  // namespace

const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

Side other_side(Side s) { return s == Side::left ? Side::right : Side::left; }

BicliqueWitness make_biclique_witness(const VertexSet& left_part, const VertexSet& right_part) {
    if (left_part.size() < right_part.size()) {
        return BicliqueWitness{Side::left, left_part, right_part};
    }
    return BicliqueWitness{Side::right, right_part, left_part};
}

bool is_biclique(const BipartiteGraph& b, const BicliqueWitness& w) {
    if (w.a.empty() || w.b.empty()) {
        throw PreconditionError("biclique witness sides must be nonempty");
    }
    const bool a_on_left = w.side_of_a == Side::left;
    const VertexSet& left_part = a_on_left ? w.a : w.b;
    const VertexSet& right_part = a_on_left ? w.b : w.a;
    if (left_part.universe() != b.left_size() || right_part.universe() != b.right_size()) {
        throw PreconditionError("biclique witness does not match the graph's side sizes");
    }
    bool complete = true;
    left_part.for_each([&](int i) {
        if (!right_part.is_subset_of(b.neighbors_of_left(i))) complete = false;
    });
    return complete;
}

MaxBicliqueResult max_balanced_biclique(const BipartiteGraph& b,
                                        const BicliqueSearchOptions& options) {
    check_balanced(b, "max balanced biclique");
    check_guard(b, options);
    return balanced_search(b, 0);
}

BcbsResult bcbs_decision(const BipartiteGraph& b, int k, const BicliqueSearchOptions& options) {
    check_balanced(b, "balanced biclique decision");
    check_guard(b, options);
    if (k < 1 || k > b.left_size()) {
        throw PreconditionError("decision size k must satisfy 1 <= k <= n");
    }
    MaxBicliqueResult found = balanced_search(b, k);
    if (found.k < k) return {false, std::nullopt};
    // Trim a larger witness down to exactly k x k; any sub-selection of a
    // biclique stays a biclique.
    const bool a_on_left = found.witness->side_of_a == Side::left;
    const VertexSet& left_part = a_on_left ? found.witness->a : found.witness->b;
    const VertexSet& right_part = a_on_left ? found.witness->b : found.witness->a;
    const VertexSet left_trim = set_from_mask(left_part.universe(),
                                              lowest_bits(left_part.words()[0], k));
    const VertexSet right_trim = set_from_mask(right_part.universe(),
                                               lowest_bits(right_part.words()[0], k));
    return {true, make_biclique_witness(left_trim, right_trim)};
}

MinRatioResult min_bk_ratio(const BipartiteGraph& b, const BicliqueSearchOptions& options) {
    check_balanced(b, "ratio minimization");
    check_guard(b, options);
    const int n = b.left_size();
    if (b.edge_count() == 0) {
        throw PreconditionError("ratio minimization requires at least one cross edge");
    }

    if (b.is_complete()) {
        // Every proper biclique of the complete graph drops at least one
        // vertex; the best drops exactly one. For n = 1 no proper biclique
        // exists at all.
        if (n == 1) {
            throw PreconditionError(
                "the only biclique of a complete 1x1 graph uses every vertex, which the "
                "nonempty-attack-set constraint excludes");
        }
        VertexSet left_part = VertexSet::full(n);
        left_part.remove(0);
        return {Ratio(1, n - 1), make_biclique_witness(left_part, VertexSet::full(n))};
    }

    struct Candidate {
        Ratio value;
        int complement_size;
        std::uint64_t left_mask;
        std::uint64_t right_mask;
    };
    std::optional<Candidate> best;

    auto complement_list = [n](std::uint64_t left_mask, std::uint64_t right_mask) {
        std::vector<int> ids;
        for (int v = 0; v < n; ++v)
            if (((left_mask >> v) & 1ULL) == 0) ids.push_back(v);
        for (int v = 0; v < n; ++v)
            if (((right_mask >> v) & 1ULL) == 0) ids.push_back(n + v);
        return ids;
    };

    auto offer = [&](std::uint64_t left_mask, std::uint64_t right_mask) {
        const int left_size = std::popcount(left_mask);
        const int right_size = std::popcount(right_mask);
        const int complement_size = 2 * n - left_size - right_size;
        const Ratio value(complement_size, std::min(left_size, right_size));
        if (best) {
            if (value > best->value) return;
            if (value == best->value) {
                if (complement_size > best->complement_size) return;
                if (complement_size == best->complement_size &&
                    !(complement_list(left_mask, right_mask) <
                      complement_list(best->left_mask, best->right_mask))) {
                    return;
                }
            }
        }
        best = Candidate{value, complement_size, left_mask, right_mask};
    };

    // Closing a part against its full common neighborhood dominates every
    // biclique sharing that part, so scanning closed pairs from both sides
    // covers all minimizers in both orientations.
    const std::vector<std::uint64_t> adj_left = left_adjacency_words(b);
    const std::vector<std::uint64_t> adj_right = right_adjacency_words(b);
    const std::uint64_t full = n == 64 ? ~0ULL : (1ULL << n) - 1;
    for (int side = 0; side < 2; ++side) {
        const std::vector<std::uint64_t>& adj = side == 0 ? adj_left : adj_right;
        for (std::uint64_t part = 1; part <= full; ++part) {
            std::uint64_t nbhd = full;
            std::uint64_t rest = part;
            while (rest != 0 && nbhd != 0) {
                nbhd &= adj[std::countr_zero(rest)];
                rest &= rest - 1;
            }
            if (nbhd == 0) continue;
            if (side == 0) {
                offer(part, nbhd);
            } else {
                offer(nbhd, part);
            }
        }
    }

    // E != 0 guarantees at least one single-edge biclique, and the graph is
    // not complete, so the all-vertices pair never appears here.
    const VertexSet left_part = set_from_mask(n, best->left_mask);
    const VertexSet right_part = set_from_mask(n, best->right_mask);
    return {best->value, make_biclique_witness(left_part, right_part)};
}

}  // namespace vat
