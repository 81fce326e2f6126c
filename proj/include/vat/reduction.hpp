#pragma once

#include <functional>
#include <optional>

#include "vat/biclique.hpp"
#include "vat/graph.hpp"
#include "vat/measures.hpp"
#include "vat/ratio.hpp"
#include "vat/rng.hpp"

namespace vat {

// Pulls the two residual cliques out of an attacked co-bipartite graph and
// returns them as a biclique of the underlying bipartite graph: A is the
// smaller side residual, B the larger (ties make B the left residual).
// Requires x to separate the sides, i.e. leave no cross edge between the
// residuals; the residual of a valid attack set always does.
BicliqueWitness extract_biclique_from_separator(const CoBipartiteGraph& gbar, const VertexSet& x);

struct ReductionOptions {
    bool override_size_guard = false;
    bool compute_exact_k = true;
};

// Checks that the unsmoothened attack value of the co-bipartite complement
// equals the biclique ratio minimum, in exact rationals.
struct LemmaIdentityReport {
    bool holds = false;
    Ratio lhs;  // uvat of the complement
    Ratio rhs;  // biclique ratio minimum
};

LemmaIdentityReport verify_lemma_identity(const BipartiteGraph& b,
                                          const ReductionOptions& options = {});

// Checks n/k - 1 <= uvat(complement) <= 2(n/k - 1) for the maximum balanced
// biclique size k, in exact rationals.
struct LemmaBoundsReport {
    bool holds = false;
    int k = 0;
    Ratio uvat;
};

LemmaBoundsReport verify_lemma_bounds(const BipartiteGraph& b,
                                      const ReductionOptions& options = {});

// Outcome of the attack-to-biclique approximation pipeline on one instance.
// lower_bound <= k always; with a truthful alpha, k <= upper_bound too.
struct ReductionReport {
    int side_size = 0;
    Ratio uvat;                         // attack value q achieved by the solver
    std::optional<int> k_exact;         // exact MAX-BCBS size, when computed
    Ratio bk_ratio;                     // ratio of the extracted biclique pair
    Ratio lower_bound;                  // n / (q + 1)
    std::optional<Ratio> upper_bound;   // 2 * alpha * n / (q + 1), when alpha is known
    BicliqueWitness extracted;          // balanced witness of size = attack residual
    std::optional<Ratio> alpha;
    std::optional<Ratio> r;             // diagnostic (q + 1) / (1 + q / (2 alpha))
};

using UvatSolver = std::function<AttackResult(const Graph&)>;

// Runs `solver` on the co-bipartite complement and converts the attack into
// balanced-biclique bounds and a constructive witness. A solver guaranteeing
// value <= alpha * optimum certifies k within factor 2 * alpha; without an
// alpha only the always-valid lower bound is reported. Solvers must return a
// separating witness; a zero-residual witness is a contract violation.
ReductionReport approx_bcbs_via_uvat(const BipartiteGraph& b, const UvatSolver& solver,
                                     std::optional<Ratio> alpha = std::nullopt,
                                     const ReductionOptions& options = {});

// Balanced bipartite instance with a planted k0 x k0 biclique: k0 random
// vertices per side are fully joined, every other cross pair appears with
// probability p. Resamples if the result is complete. Identical seeds give
// identical instances.
BipartiteGraph plant_biclique_instance(int n, int k0, double p, std::uint64_t seed);

}  // namespace vat
