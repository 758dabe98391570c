#pragma once

#include <vector>

#include "rocpca/solver.hpp"

namespace rocpca {

// Deterministic batch plan for peeling the (p - r)-dimensional complement
// in chunks. Small problems (p - r <= 60) use a single batch; otherwise
// chunks of round(0.35 * ambient) capped at 100 are emitted, the cap
// re-evaluated at the reduced ambient dimension, and the remainder closes
// the plan. Entries are complement dimensions removed per stage and sum
// to p - r.
std::vector<long long> default_plan(Index p, int r);

// Runs the solver stagewise: each batch fits at the reduced rank, the data
// is compressed onto the retained directions, and outer tolerances tighten
// geometrically from 10x down to the configured value on the final batch.
// The returned fields are all expressed against the original data, with
// (mu, S) refreshed at the target budget on the accumulated frame.
FitResult batch_fit(const Problem& problem, const SolverConfig& cfg,
                    const std::vector<long long>& plan);

// Convenience overload using default_plan.
FitResult batch_fit(const Problem& problem, const SolverConfig& cfg);

}  // namespace rocpca
