#pragma once

#include <optional>

#include "vat/graph.hpp"
#include "vat/ratio.hpp"
#include "vat/vertex_set.hpp"

namespace vat {

enum class Measure { VAT, UVAT };

const char* measure_name(Measure m);

// Value of an attack together with its witness set and residual statistics.
// Re-evaluating the witness always reproduces the value exactly.
struct AttackResult {
    Measure measure = Measure::VAT;
    Ratio value;
    VertexSet witness;
    int residual = 0;           // |V - S - Cmax(V - S)|
    int largest_component = 0;  // |Cmax(V - S)|
};

// |V| - |S| - Cmax(V - S): the vertices cut off from the largest surviving
// component. Requires a nonempty proper S.
int residual_size(const Graph& g, const VertexSet& s);

// Smoothened attack value |S| / (residual + 1).
Ratio vat_value(const Graph& g, const VertexSet& s);

// Unsmoothened attack value |S| / residual, or nullopt when the residual is
// zero (such S carry no value and are skipped in minimization).
std::optional<Ratio> uvat_value(const Graph& g, const VertexSet& s);

// Exact solvers enumerate attack sets by increasing size with a per-size
// lower bound for pruning: every |S| = s has VAT value >= s/(n-s) and UVAT
// value >= s/(n-s-1), so a size class is skipped only once its bound cannot
// beat the incumbent. Refuses n > size_guard unless overridden.
struct SearchOptions {
    bool override_size_guard = false;
    bool use_pruning = true;
};

inline constexpr int kExactSearchGuard = 24;

// Global minimum of vat_value over nonempty proper subsets. Ties resolve to
// the smallest witness, then the lexicographically smallest vertex list.
AttackResult vat_exact(const Graph& g, const SearchOptions& options = {});

// Global minimum of uvat_value over nonempty proper subsets with residual
// >= 1. Throws CliqueInput on complete graphs, where no such subset exists.
AttackResult uvat_exact(const Graph& g, const SearchOptions& options = {});

// Heuristic attack without an approximation guarantee: repeatedly delete a
// highest-degree vertex of the current largest component and keep the best
// prefix that leaves a positive residual. The returned witness is always a
// valid separator in the sense largest_component < |V| - |witness|.
AttackResult greedy_uvat(const Graph& g);

}  // namespace vat
