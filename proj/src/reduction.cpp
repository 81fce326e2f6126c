#include "vat/reduction.hpp"

#include <algorithm>
#include <string>

namespace vat {

namespace {

void check_reduction_input(const BipartiteGraph& b) {
    if (!b.balanced()) {
        throw PreconditionError("the reduction requires a balanced bipartite graph");
    }
    if (b.edge_count() == 0) {
        throw PreconditionError("the reduction requires at least one cross edge");
    }
    if (b.is_complete()) {
        throw PreconditionError(
            "the reduction excludes the complete bipartite graph: its complement splits into "
            "two disjoint cliques and the optimal biclique corresponds to an empty attack set");
    }
}

SearchOptions to_search_options(const ReductionOptions& options) {
    return SearchOptions{options.override_size_guard, true};
}

BicliqueSearchOptions to_biclique_options(const ReductionOptions& options) {
    return BicliqueSearchOptions{options.override_size_guard};
}

}  // namespace

BicliqueWitness extract_biclique_from_separator(const CoBipartiteGraph& gbar, const VertexSet& x) {
    const int n = gbar.side_size;
    if (x.universe() != 2 * n) {
        throw PreconditionError("attack set universe does not match the co-bipartite graph");
    }
    if (x.empty()) throw PreconditionError("attack set must be nonempty");
    if (x.size() == 2 * n) throw PreconditionError("attack set must be a proper subset");

    VertexSet left_residual(n);
    VertexSet right_residual(n);
    for (int v = 0; v < n; ++v) {
        if (!x.contains(v)) left_residual.add(v);
        if (!x.contains(n + v)) right_residual.add(v);
    }
    if (left_residual.empty() || right_residual.empty()) {
        throw PreconditionError("one side residual is empty: no biclique to extract");
    }

    // The residuals form a biclique of the original graph exactly when no
    // complement cross edge survives between them, which is the separation
    // the residual >= 1 precondition promises.
    bool separated = true;
    left_residual.for_each([&](int i) {
        right_residual.for_each([&](int j) {
            if (gbar.graph.has_edge(i, n + j)) separated = false;
        });
    });
    if (!separated) {
        throw PreconditionError(
            "attack set does not separate the sides (zero residual): extraction undefined");
    }
    return make_biclique_witness(left_residual, right_residual);
}

LemmaIdentityReport verify_lemma_identity(const BipartiteGraph& b,
                                          const ReductionOptions& options) {
    check_reduction_input(b);
    const CoBipartiteGraph gbar = co_bipartite_complement(b);
    const Ratio lhs = uvat_exact(gbar.graph, to_search_options(options)).value;
    const Ratio rhs = min_bk_ratio(b, to_biclique_options(options)).value;
    return {lhs == rhs, lhs, rhs};
}

LemmaBoundsReport verify_lemma_bounds(const BipartiteGraph& b, const ReductionOptions& options) {
    check_reduction_input(b);
    const int n = b.left_size();
    const CoBipartiteGraph gbar = co_bipartite_complement(b);
    const Ratio uvat = uvat_exact(gbar.graph, to_search_options(options)).value;
    const int k = max_balanced_biclique(b, to_biclique_options(options)).k;
    // E != 0 gives k >= 1; excluding the complete graph gives k < n.
    const Ratio lower(n - k, k);
    const Ratio upper(2 * (n - k), k);
    return {lower <= uvat && uvat <= upper, k, uvat};
}

ReductionReport approx_bcbs_via_uvat(const BipartiteGraph& b, const UvatSolver& solver,
                                     std::optional<Ratio> alpha,
                                     const ReductionOptions& options) {
    check_reduction_input(b);
    if (alpha && *alpha < Ratio(1, 1)) {
        throw PreconditionError("approximation factor alpha must be at least 1");
    }
    const int n = b.left_size();
    const CoBipartiteGraph gbar = co_bipartite_complement(b);

    const AttackResult attack = solver(gbar.graph);
    if (attack.witness.universe() != 2 * n || attack.witness.empty() ||
        attack.witness.size() == 2 * n) {
        throw SolverContractError("solver returned an invalid attack set");
    }
    // Trust nothing but the witness; recompute its value.
    const int largest = largest_component_size(gbar.graph, attack.witness);
    const int residual = 2 * n - attack.witness.size() - largest;
    if (residual < 1) {
        throw SolverContractError(
            "solver returned a zero-residual witness, not a valid vertex separator");
    }
    const Ratio q(attack.witness.size(), residual);

    const BicliqueWitness full_pair = extract_biclique_from_separator(gbar, attack.witness);
    const Ratio bk_ratio(2 * n - full_pair.a.size() - full_pair.b.size(), full_pair.a.size());

    // Balanced truncation of B keeps the lowest ids.
    VertexSet truncated(full_pair.b.universe());
    int kept = 0;
    full_pair.b.for_each([&](int v) {
        if (kept < full_pair.a.size()) {
            truncated.add(v);
            ++kept;
        }
    });
    const BicliqueWitness extracted{full_pair.side_of_a, full_pair.a, truncated};

    ReductionReport report;
    report.side_size = n;
    report.uvat = q;
    report.bk_ratio = bk_ratio;
    report.extracted = extracted;
    report.lower_bound = Ratio(n, 1) / (q + Ratio(1, 1));
    report.alpha = alpha;
    if (alpha) {
        report.upper_bound = Ratio(2, 1) * *alpha * report.lower_bound;
        report.r = (q + Ratio(1, 1)) / (Ratio(1, 1) + q / (Ratio(2, 1) * *alpha));
    }
    if (options.compute_exact_k) {
        report.k_exact = max_balanced_biclique(b, to_biclique_options(options)).k;
    }
    return report;
}

BipartiteGraph plant_biclique_instance(int n, int k0, double p, std::uint64_t seed) {
    if (n < 2 || k0 < 1 || k0 >= n) {
        throw PreconditionError("planting requires 1 <= k0 < n");
    }
    if (p < 0.0 || p >= 1.0) {
        throw PreconditionError("edge probability must satisfy 0 <= p < 1");
    }
    DeterministicRng rng(seed);
    while (true) {
        const std::vector<int> left_core = rng.sample(n, k0);
        const std::vector<int> right_core = rng.sample(n, k0);
        VertexSet left_in(n);
        VertexSet right_in(n);
        for (int v : left_core) left_in.add(v);
        for (int v : right_core) right_in.add(v);

        BipartiteGraph b(n, n);
        for (int i : left_core) {
            for (int j : right_core) b.add_edge(i, j);
        }
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (left_in.contains(i) && right_in.contains(j)) continue;
                if (rng.next_bernoulli(p)) b.add_edge(i, j);
            }
        }
        if (!b.is_complete()) return b;
    }
}

}  // namespace vat
