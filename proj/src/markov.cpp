#include "annlab/markov.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <vector>

#include "annlab/eig.hpp"

namespace annlab {

namespace {

void check_matrix_scale(int n, const char* what) {
    if (n > kMatrixGuard) {
        throw guard_error(std::string(what) + ": matrix guard exceeded (n = " + std::to_string(n) +
                          " > " + std::to_string(kMatrixGuard) + ")");
    }
}

} // namespace

StochasticMatrix metropolis_matrix(const ObjectiveFunction& E, double beta) {
    if (beta < 0.0) throw schema_error("metropolis_matrix: beta must be nonnegative");
    check_matrix_scale(E.n(), "metropolis_matrix");
    const int n = E.n();
    const auto N = static_cast<Eigen::Index>(E.num_configs());
    const VectorXd energies = E.energy_table();
    const double kappa = E.kappa();
    const double chi = std::exp(-beta * kappa) / n;

    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(N) * (n + 1));
    for (Eigen::Index j = 0; j < N; ++j) {
        double off = 0.0;
        for (int l = 0; l < n; ++l) {
            const auto i = static_cast<Eigen::Index>(flip(static_cast<std::uint64_t>(j), l));
            const double p = chi * std::exp(0.5 * beta * (energies(j) - energies(i)));
            trips.emplace_back(i, j, p);
            off += p;
        }
        trips.emplace_back(j, j, 1.0 - off);
    }
    StochasticMatrix S;
    S.beta = beta;
    S.probs.resize(N, N);
    S.probs.setFromTriplets(trips.begin(), trips.end());
    S.chi = chi;
    S.kappa = kappa;
    S.neighborhood = MoveStructure::single_flip;
    return S;
}

double verify_detailed_balance(const StochasticMatrix& S, const GibbsDistribution& pi) {
    if (S.probs.rows() != pi.probs.size())
        throw schema_error("verify_detailed_balance: dimension mismatch");
    SparseMat flow = S.probs * pi.probs.asDiagonal();
    SparseMat resid = flow - SparseMat(flow.transpose());
    double r = 0.0;
    for (int k = 0; k < resid.outerSize(); ++k)
        for (SparseMat::InnerIterator it(resid, k); it; ++it) r = std::max(r, std::abs(it.value()));
    return r;
}

ChainSpectrum chain_spectrum(const StochasticMatrix& S, const ObjectiveFunction& E, double dbc_tol) {
    const GibbsDistribution pi = gibbs(E, S.beta);
    const double resid = verify_detailed_balance(S, pi);
    if (resid > dbc_tol) {
        throw numerical_error("chain_spectrum: detailed balance residual " + std::to_string(resid) +
                              " exceeds tolerance; symmetrization invalid");
    }
    const VectorXd energies = E.energy_table();
    const Eigen::Index N = S.probs.rows();

    // D^{1/2} S D^{-1/2} entrywise: sqrt(pi_i/pi_j) = exp(beta (E_j - E_i)/2)
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(S.probs.nonZeros()));
    for (int k = 0; k < S.probs.outerSize(); ++k) {
        for (SparseMat::InnerIterator it(S.probs, k); it; ++it) {
            const double w = std::exp(0.5 * S.beta * (energies(it.col()) - energies(it.row())));
            trips.emplace_back(it.row(), it.col(), it.value() * w);
        }
    }
    SparseMat M(N, N);
    M.setFromTriplets(trips.begin(), trips.end());

    ChainSpectrum out;
    if (N <= kDenseSpectrumGuard) {
        Eigen::MatrixXd Md(M);
        // symmetrize away the last rounding asymmetry before the solver
        Md = 0.5 * (Md + Md.transpose()).eval();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Md, Eigen::EigenvaluesOnly);
        out.eigenvalues = es.eigenvalues().reverse();
    } else {
        SparseMat Msym = 0.5 * (M + SparseMat(M.transpose()));
        LanczosOptions opts;
        opts.nev = 2;
        auto mv = [&Msym](const VectorXd& v) { return VectorXd(v - Msym * v); };
        LanczosResult r = lanczos_smallest(mv, N, opts);
        out.eigenvalues = (1.0 - r.values.array()).matrix();
    }
    out.gap = 1.0 - out.eigenvalues(1);
    return out;
}

} // namespace annlab
