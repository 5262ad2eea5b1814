#pragma once

#include <cstdint>
#include <vector>

#include "annlab/ising.hpp"
#include "annlab/schedule.hpp"

namespace annlab {

struct SaOptions {
    std::uint64_t seed = 1;
    long sweeps = 0;             // one sweep = n single-site moves
    long burn_in_sweeps = 0;     // excluded from the visit histogram
    long trace_stride_sweeps = 1;
    bool record_histogram = true; // kept only for n <= 16
};

struct SaTracePoint {
    long step; // move count
    double beta;
    double energy;
    std::uint64_t config;
};

struct SaResult {
    std::vector<SaTracePoint> trace;
    std::vector<long> histogram; // per-move visit counts after burn-in
    std::uint64_t best_config = 0;
    double best_energy = 0.0;
    std::uint64_t final_config = 0;
    double final_energy = 0.0;
    long accepted_moves = 0;
    long total_moves = 0;
};

/// Move-wise Metropolis chain with the same single-flip rule as
/// metropolis_matrix: propose a uniform site, accept with
/// exp(-beta kappa + beta [E(old)-E(new)]/2). The transition matrix is
/// never materialized; the chain starts from a uniform configuration.
SaResult sa_run(const ObjectiveFunction& E, const Schedule& beta_schedule, const SaOptions& opts);

} // namespace annlab
