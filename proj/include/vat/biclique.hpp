#pragma once

#include <optional>

#include "vat/graph.hpp"
#include "vat/ratio.hpp"
#include "vat/vertex_set.hpp"

namespace vat {

enum class Side { left, right };

const char* side_name(Side s);
Side other_side(Side s);

// A pair (A, B) of side-local vertex sets certifying a bipartite clique:
// every pair (a in A, b in B) is a cross edge. Produced witnesses are
// canonically oriented with |A| <= |B|; when both sides tie in size, B is
// the left-side set.
struct BicliqueWitness {
    Side side_of_a = Side::left;
    VertexSet a;
    VertexSet b;
};

// Canonical witness for an unordered pair of side sets.
BicliqueWitness make_biclique_witness(const VertexSet& left_part, const VertexSet& right_part);

// True iff all |A| * |B| cross pairs are edges of b. Rejects empty sides.
bool is_biclique(const BipartiteGraph& b, const BicliqueWitness& w);

struct BicliqueSearchOptions {
    bool override_size_guard = false;
};

inline constexpr int kBicliqueSearchGuard = 16;  // per side

// Exact balanced-biclique search: subsets of the left side are explored as
// A-candidates with their common right neighborhood, branch-and-bound style
// with incumbent pruning on min(|A| + remaining, |N(A)|).
struct MaxBicliqueResult {
    int k = 0;
    std::optional<BicliqueWitness> witness;  // absent only when k = 0
};

MaxBicliqueResult max_balanced_biclique(const BipartiteGraph& b,
                                        const BicliqueSearchOptions& options = {});

struct BcbsResult {
    bool exists = false;
    std::optional<BicliqueWitness> witness;
};

// Does a k x k complete bipartite subgraph exist? Witness returned when true.
BcbsResult bcbs_decision(const BipartiteGraph& b, int k,
                         const BicliqueSearchOptions& options = {});

// Exact minimum of (2n - |A| - |B|) / |A| over bicliques with |A| <= |B| and
// |A| + |B| <= 2n - 1, A drawn from either side. The excluded all-vertices
// biclique corresponds to the empty attack set. Ties resolve like the attack
// search: smallest complement, then lexicographically smallest complement.
struct MinRatioResult {
    Ratio value;
    BicliqueWitness witness;
};

MinRatioResult min_bk_ratio(const BipartiteGraph& b, const BicliqueSearchOptions& options = {});

}  // namespace vat
