#include "annlab/eig.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "annlab/rng.hpp"

namespace annlab {

namespace {

void project_out(VectorXd& w, const MatrixXd& basis, Eigen::Index ncols) {
    if (ncols == 0) return;
    auto B = basis.leftCols(ncols);
    w.noalias() -= B * (B.transpose() * w);
}

VectorXd random_unit(Eigen::Index dim, CounterRng& rng) {
    VectorXd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = 2.0 * rng.uniform01() - 1.0;
    v.normalize();
    return v;
}

} // namespace

LanczosResult lanczos_smallest(const std::function<VectorXd(const VectorXd&)>& matvec,
                               Eigen::Index dim, const LanczosOptions& opts,
                               const std::vector<VectorXd>& deflate) {
    if (opts.nev < 1) throw schema_error("lanczos_smallest: nev must be positive");
    const int m = static_cast<int>(std::min<Eigen::Index>(opts.max_basis, dim));
    if (m < opts.nev + 2 && m < dim)
        throw schema_error("lanczos_smallest: basis too small for requested eigenvalues");

    MatrixXd defl(dim, static_cast<Eigen::Index>(deflate.size()));
    for (std::size_t i = 0; i < deflate.size(); ++i) defl.col(static_cast<Eigen::Index>(i)) = deflate[i];
    const Eigen::Index free_dim = dim - defl.cols();

    CounterRng rng(opts.seed, 0xe1c5);
    MatrixXd V(dim, m + 1);
    MatrixXd T = MatrixXd::Zero(m + 1, m + 1);

    auto fresh_vector = [&](Eigen::Index k) {
        for (int tries = 0; tries < 64; ++tries) {
            VectorXd v = random_unit(dim, rng);
            project_out(v, defl, defl.cols());
            project_out(v, V, k);
            const double nrm = v.norm();
            if (nrm > 1e-8) return VectorXd(v / nrm);
        }
        throw numerical_error("lanczos_smallest: cannot generate start vector outside deflated space");
    };

    Eigen::Index k = 1; // current basis size; columns 0..k-1 are valid
    V.col(0) = fresh_vector(0);
    double beta_last = 0.0;

    LanczosResult result;
    for (int restart = 0; restart <= opts.max_restarts; ++restart) {
        // grow: iteration with size k fills T column k-1 and basis column k
        while (k <= m) {
            VectorXd w = matvec(V.col(k - 1));
            project_out(w, defl, defl.cols());
            VectorXd c = V.leftCols(k).transpose() * w;
            T.block(0, k - 1, k, 1) = c;
            T.block(k - 1, 0, 1, k) = c.transpose();
            w.noalias() -= V.leftCols(k) * c;
            project_out(w, V, k); // second sweep keeps orthogonality at machine level
            beta_last = w.norm();
            if (beta_last > 1e-13) {
                V.col(k) = w / beta_last;
            } else if (k < free_dim) {
                V.col(k) = fresh_vector(k);
                beta_last = 0.0;
            } else {
                V.col(k).setZero();
                beta_last = 0.0;
            }
            ++k;
        }

        Eigen::SelfAdjointEigenSolver<MatrixXd> es(T.topLeftCorner(m, m));
        const VectorXd& theta = es.eigenvalues();
        const MatrixXd& S = es.eigenvectors();
        VectorXd res(m);
        for (int i = 0; i < m; ++i) res(i) = std::abs(beta_last * S(m - 1, i));

        bool done = true;
        for (int i = 0; i < opts.nev && i < m; ++i)
            if (res(i) > opts.tol) done = false;

        if (done || restart == opts.max_restarts || m >= free_dim) {
            if (!done && m < free_dim) {
                throw numerical_error("lanczos_smallest: no convergence after " +
                                      std::to_string(opts.max_restarts) + " restarts (worst residual " +
                                      std::to_string(res.head(opts.nev).maxCoeff()) + ")");
            }
            const int nout = std::min<int>(opts.nev, m);
            result.values = theta.head(nout);
            result.residuals = res.head(nout);
            result.restarts = restart;
            if (opts.want_vectors) result.vectors = V.leftCols(m) * S.leftCols(nout);
            return result;
        }

        // thick restart: keep the lowest Ritz vectors plus the residual direction
        const int keep = std::min(m - 2, std::max(opts.nev + 8, m / 2));
        MatrixXd Y = V.leftCols(m) * S.leftCols(keep);
        VectorXd cont = V.col(m);
        V.leftCols(keep) = Y;
        if (cont.norm() < 0.5) cont = fresh_vector(keep);
        V.col(keep) = cont;
        T.setZero();
        T.topLeftCorner(keep, keep) = theta.head(keep).asDiagonal();
        // couplings to the continuation vector re-emerge through the full
        // projection when its T column is built, so no arrowhead seed is needed
        k = keep + 1;
    }
    throw numerical_error("lanczos_smallest: unreachable");
}

Spectrum exact_spectrum_dense(const MatrixXd& H, int k, bool want_vectors) {
    if (H.rows() != H.cols()) throw schema_error("exact_spectrum_dense: not square");
    const int dim = static_cast<int>(H.rows());
    k = std::min(k, dim);
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(H, want_vectors ? Eigen::ComputeEigenvectors
                                                               : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw numerical_error("exact_spectrum_dense: solver failed");
    Spectrum s;
    s.eigenvalues = es.eigenvalues().head(k);
    if (want_vectors) s.eigenvectors = es.eigenvectors().leftCols(k);
    return s;
}

Spectrum exact_spectrum(const SparseSym& H, int k, bool want_vectors) {
    if (k < 1) throw schema_error("exact_spectrum: k must be positive");
    const Eigen::Index dim = H.dim();
    if (dim <= kDenseSpectrumGuard) return exact_spectrum_dense(H.dense(), k, want_vectors);

    LanczosOptions opts;
    opts.nev = std::min<int>(k, static_cast<int>(dim));
    opts.want_vectors = want_vectors;
    opts.max_basis = std::max(80, 2 * opts.nev + 20);
    auto mv = [&H](const VectorXd& v) { return H.apply(v); };
    LanczosResult r = lanczos_smallest(mv, dim, opts);
    Spectrum s;
    s.eigenvalues = r.values;
    if (want_vectors) s.eigenvectors = r.vectors;
    return s;
}

} // namespace annlab
