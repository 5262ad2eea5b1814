#pragma once

#include "annlab/ising.hpp"

namespace annlab {

/// Normalized Gibbs distribution pi(sigma) proportional to exp(-beta E(sigma)).
struct GibbsDistribution {
    double beta = 0.0;
    VectorXd probs;
    double log_z = 0.0;
};

/// Exact Gibbs distribution by enumeration (guarded at n <= 24).
/// log_z uses a log-sum-exp so large beta never overflows.
GibbsDistribution gibbs(const ObjectiveFunction& E, double beta);

/// sum_i pi(sigma_i) A(sigma_i) for a diagonal observable.
double thermal_expectation(const VectorXd& A, const GibbsDistribution& pi);

} // namespace annlab
