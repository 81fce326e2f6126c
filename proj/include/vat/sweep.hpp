#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vat/graph.hpp"

namespace vat {

struct SweepFailure {
    long long index = 0;        // position within the population
    std::string instance;       // replayable bipartite text
    std::string detail;
};

struct SweepResult {
    long long checked = 0;
    std::vector<SweepFailure> failures;  // ordered by index
};

// Returns nullopt for a passing instance, otherwise a failure description.
using InstanceCheck = std::function<std::optional<std::string>(const BipartiteGraph&)>;

// Every balanced bipartite graph with side size n, skipping the edgeless and
// the complete one. Instances are split across `workers` threads; results
// are merged in population order, so the outcome is identical for any
// worker count.
SweepResult sweep_exhaustive(int n, int workers, const InstanceCheck& check);

// `trials` random instances of side size n. Instance i is generated from a
// seed derived from (seed, i) alone, making the population independent of
// the worker partition.
SweepResult sweep_random(int n, long long trials, std::uint64_t seed, int workers,
                         const InstanceCheck& check);

}  // namespace vat
