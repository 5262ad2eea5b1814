#pragma once

#include <functional>
#include <vector>

#include "annlab/operators.hpp"

namespace annlab {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Dimension up to which exact_spectrum uses a dense solver.
inline constexpr Eigen::Index kDenseSpectrumGuard = 4096;

struct LanczosOptions {
    int nev = 1;              // number of smallest eigenvalues wanted
    double tol = 1e-10;       // absolute residual tolerance
    int max_basis = 80;       // thick-restart basis size
    int max_restarts = 500;
    bool want_vectors = false;
    std::uint64_t seed = 12345; // start-vector stream
};

struct LanczosResult {
    VectorXd values;    // ascending, size nev
    MatrixXd vectors;   // columns, present iff want_vectors
    VectorXd residuals; // per returned value
    int restarts = 0;
};

/// Thick-restart Lanczos for the smallest eigenvalues of a symmetric
/// operator given through its matvec. Vectors in `deflate` are projected
/// out of the working subspace (they must be orthonormal).
LanczosResult lanczos_smallest(const std::function<VectorXd(const VectorXd&)>& matvec,
                               Eigen::Index dim, const LanczosOptions& opts,
                               const std::vector<VectorXd>& deflate = {});

/// k lowest eigenvalues (and optionally eigenvectors) of a symmetric
/// operator: dense up to kDenseSpectrumGuard, iterative above.
Spectrum exact_spectrum(const SparseSym& H, int k, bool want_vectors = false);
Spectrum exact_spectrum_dense(const MatrixXd& H, int k, bool want_vectors = false);

} // namespace annlab
