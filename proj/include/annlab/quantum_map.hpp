#pragma once

#include "annlab/gibbs.hpp"
#include "annlab/markov.hpp"
#include "annlab/operators.hpp"

namespace annlab {

/// H with <i|H|j> = delta_ij - sqrt(Pr(i|j) Pr(j|i)). Positive semidefinite,
/// annihilates the square-root Gibbs state. Verifies detailed balance first.
SparseSym h_from_stochastic(const StochasticMatrix& S, const GibbsDistribution& pi,
                            double dbc_tol = 1e-10);

/// Frustration-free assembly: one positive-semidefinite term per site.
struct FrustrationFree {
    SparseSym assembled;          // sum of terms
    std::vector<SparseSym> terms; // chi exp(beta E^l) - chi sigma_x^l, per site
    double chi = 0.0;
    double kappa = 0.0;
};

/// Single-flip Metropolis map assembled per site:
/// H = sum_l [chi exp(beta E^l) - chi sigma_x^l]. The diagonal factor is
/// computed elementwise, never through a general matrix exponential.
FrustrationFree h_metropolis_ff(const ObjectiveFunction& E, double beta);

/// Amplitudes sqrt(pi(sigma)) over the computational basis.
StateVector sqrt_gibbs_state(const GibbsDistribution& pi);

/// H_gamma = sum_l [chi exp(beta_m E^l) - gamma sigma_x^l]; at gamma = chi
/// this equals the single-flip Metropolis map at beta_m.
SparseSym eqa_hamiltonian(const ObjectiveFunction& E, double beta_m, double gamma);

/// Standard transverse-field form: diag(E) - gamma sum_l sigma_x^l.
SparseSym transverse_ising(const ObjectiveFunction& E, double gamma);

} // namespace annlab
