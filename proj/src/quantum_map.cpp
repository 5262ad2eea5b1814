#include "annlab/quantum_map.hpp"

#include <cmath>
#include <vector>

namespace annlab {

namespace {

void check_matrix_scale(int n, const char* what) {
    if (n > kMatrixGuard)
        throw guard_error(std::string(what) + ": matrix guard exceeded (n = " + std::to_string(n) + ")");
}

} // namespace

SparseSym h_from_stochastic(const StochasticMatrix& S, const GibbsDistribution& pi, double dbc_tol) {
    const double resid = verify_detailed_balance(S, pi);
    if (resid > dbc_tol)
        throw numerical_error("h_from_stochastic: detailed balance residual " + std::to_string(resid));
    const Eigen::Index N = S.probs.rows();
    SparseMat st = SparseMat(S.probs.transpose());
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(S.probs.nonZeros());
    for (int k = 0; k < S.probs.outerSize(); ++k) {
        SparseMat::InnerIterator it(S.probs, k), jt(st, k);
        for (; it; ++it, ++jt) {
            // detailed balance gives matching sparsity patterns for S and S^T
            if (!jt || jt.row() != it.row())
                throw numerical_error("h_from_stochastic: asymmetric sparsity pattern");
            const double cross = std::sqrt(it.value() * jt.value());
            if (it.row() == it.col())
                trips.emplace_back(it.row(), it.col(), 1.0 - cross);
            else
                trips.emplace_back(it.row(), it.col(), -cross);
        }
    }
    SparseMat H(N, N);
    H.setFromTriplets(trips.begin(), trips.end());
    return SparseSym(std::move(H), BasisTag::computational);
}

FrustrationFree h_metropolis_ff(const ObjectiveFunction& E, double beta) {
    if (beta < 0.0) throw schema_error("h_metropolis_ff: beta must be nonnegative");
    check_matrix_scale(E.n(), "h_metropolis_ff");
    const int n = E.n();
    const auto N = static_cast<Eigen::Index>(E.num_configs());
    const VectorXd energies = E.energy_table();
    const double kappa = E.kappa();
    const double chi = std::exp(-beta * kappa) / n;

    FrustrationFree out;
    out.chi = chi;
    out.kappa = kappa;
    out.terms.reserve(n);
    std::vector<Eigen::Triplet<double>> all;
    all.reserve(static_cast<std::size_t>(N) * 2 * n);
    for (int l = 0; l < n; ++l) {
        std::vector<Eigen::Triplet<double>> trips;
        trips.reserve(static_cast<std::size_t>(N) * 2);
        for (Eigen::Index j = 0; j < N; ++j) {
            const auto i = static_cast<Eigen::Index>(flip(static_cast<std::uint64_t>(j), l));
            const double el = 0.5 * (energies(j) - energies(i)); // E^l(sigma_j)
            trips.emplace_back(j, j, chi * std::exp(beta * el));
            trips.emplace_back(i, j, -chi);
        }
        SparseMat t(N, N);
        t.setFromTriplets(trips.begin(), trips.end());
        all.insert(all.end(), trips.begin(), trips.end());
        out.terms.emplace_back(std::move(t), BasisTag::computational);
    }
    SparseMat H(N, N);
    H.setFromTriplets(all.begin(), all.end());
    out.assembled = SparseSym(std::move(H), BasisTag::computational);
    return out;
}

StateVector sqrt_gibbs_state(const GibbsDistribution& pi) {
    StateVector psi;
    psi.amplitudes = pi.probs.array().sqrt().matrix().cast<std::complex<double>>();
    psi.basis_tag = BasisTag::computational;
    return psi;
}

SparseSym eqa_hamiltonian(const ObjectiveFunction& E, double beta_m, double gamma) {
    if (gamma < 0.0) throw schema_error("eqa_hamiltonian: gamma must be nonnegative");
    check_matrix_scale(E.n(), "eqa_hamiltonian");
    const int n = E.n();
    const auto N = static_cast<Eigen::Index>(E.num_configs());
    const VectorXd energies = E.energy_table();
    const double chi = std::exp(-beta_m * E.kappa()) / n;

    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(N) * (n + 1));
    for (Eigen::Index j = 0; j < N; ++j) {
        double diag = 0.0;
        for (int l = 0; l < n; ++l) {
            const auto i = static_cast<Eigen::Index>(flip(static_cast<std::uint64_t>(j), l));
            diag += chi * std::exp(0.5 * beta_m * (energies(j) - energies(i)));
            if (gamma != 0.0) trips.emplace_back(i, j, -gamma);
        }
        trips.emplace_back(j, j, diag);
    }
    SparseMat H(N, N);
    H.setFromTriplets(trips.begin(), trips.end());
    return SparseSym(std::move(H), BasisTag::computational);
}

SparseSym transverse_ising(const ObjectiveFunction& E, double gamma) {
    if (gamma < 0.0) throw schema_error("transverse_ising: gamma must be nonnegative");
    check_matrix_scale(E.n(), "transverse_ising");
    const int n = E.n();
    const auto N = static_cast<Eigen::Index>(E.num_configs());
    const VectorXd energies = E.energy_table();
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(N) * (n + 1));
    for (Eigen::Index j = 0; j < N; ++j) {
        trips.emplace_back(j, j, energies(j));
        if (gamma != 0.0)
            for (int l = 0; l < n; ++l)
                trips.emplace_back(static_cast<Eigen::Index>(flip(static_cast<std::uint64_t>(j), l)), j,
                                   -gamma);
    }
    SparseMat H(N, N);
    H.setFromTriplets(trips.begin(), trips.end());
    return SparseSym(std::move(H), BasisTag::computational);
}

} // namespace annlab
