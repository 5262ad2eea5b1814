#pragma once

#include "annlab/gibbs.hpp"
#include "annlab/ising.hpp"
#include "annlab/operators.hpp"

namespace annlab {

/// Largest site count for which a transition matrix is materialized.
inline constexpr int kMatrixGuard = 20;

enum class MoveStructure { single_flip, complete_graph };

/// Column-stochastic transition matrix with detailed balance against the
/// Gibbs distribution at the same beta. probs(i, j) = Pr(sigma_i | sigma_j).
struct StochasticMatrix {
    double beta = 0.0;
    SparseMat probs;
    double chi = 0.0;   // off-diagonal proportionality constant
    double kappa = 0.0; // single-flip energy spread
    MoveStructure neighborhood = MoveStructure::single_flip;
};

/// Single-flip chain: Pr(sigma_i|sigma_j) = chi * exp(beta [E(sigma_j)-E(sigma_i)]/2)
/// for flip pairs, zero beyond, diagonal by normalization, with
/// chi = exp(-beta kappa)/n so every column is a valid distribution.
StochasticMatrix metropolis_matrix(const ObjectiveFunction& E, double beta);

/// max_{i,j} |Pr(i|j) pi(j) - Pr(j|i) pi(i)|.
double verify_detailed_balance(const StochasticMatrix& S, const GibbsDistribution& pi);

struct ChainSpectrum {
    VectorXd eigenvalues; // descending; full set on dense paths, extremal few otherwise
    double gap = 0.0;     // 1 - second eigenvalue
};

/// Spectrum of the similarity-symmetrized chain. Requires detailed balance
/// (residual checked against `dbc_tol`); the symmetrization uses energy
/// differences so large beta cannot underflow.
ChainSpectrum chain_spectrum(const StochasticMatrix& S, const ObjectiveFunction& E,
                             double dbc_tol = 1e-8);

} // namespace annlab
