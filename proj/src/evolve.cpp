#include "annlab/evolve.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "annlab/eig.hpp"

namespace annlab {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using cplx = std::complex<double>;

double gershgorin_radius(const SparseMat& H) {
    VectorXd rowsum = VectorXd::Zero(H.rows());
    for (int k = 0; k < H.outerSize(); ++k)
        for (SparseMat::InnerIterator it(H, k); it; ++it) rowsum(it.row()) += std::abs(it.value());
    return rowsum.maxCoeff();
}

void expm_dense(const SparseSym& H, cplx z, VectorXcd& v) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(H.dense());
    const VectorXd& w = es.eigenvalues();
    const MatrixXd& U = es.eigenvectors();
    VectorXcd c = U.transpose() * v;
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) *= std::exp(z * w(i));
    v = U * c;
}

// one Lanczos application of exp(z H), assuming |z| ||H|| is already modest
void expm_krylov_once(const SparseSym& H, cplx z, VectorXcd& v, const ExpmOptions& opts) {
    const double beta0 = v.norm();
    if (beta0 == 0.0) return;
    const Eigen::Index dim = H.dim();
    const int cap = static_cast<int>(std::min<Eigen::Index>(opts.max_krylov, dim));

    Eigen::MatrixXcd V(dim, cap + 1);
    VectorXd alpha(cap), beta(cap + 1);
    V.col(0) = v / beta0;
    int m = cap;
    for (int k = 0; k < cap; ++k) {
        VectorXcd w = H.apply(VectorXcd(V.col(k)));
        alpha(k) = w.dot(V.col(k)).real();
        w -= alpha(k) * V.col(k);
        if (k > 0) w -= beta(k) * V.col(k - 1);
        // full reorthogonalization; the subspace is small
        w -= V.leftCols(k + 1) * (V.leftCols(k + 1).adjoint() * w);
        beta(k + 1) = w.norm();
        if (beta(k + 1) < 1e-14 * beta0) {
            m = k + 1; // invariant subspace: the result is exact
            break;
        }
        V.col(k + 1) = w / beta(k + 1);
    }

    MatrixXd T = MatrixXd::Zero(m, m);
    for (int k = 0; k < m; ++k) {
        T(k, k) = alpha(k);
        if (k + 1 < m) T(k, k + 1) = T(k + 1, k) = beta(k + 1);
    }
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(T);
    VectorXcd u = es.eigenvectors().row(0).transpose().cast<cplx>();
    for (int i = 0; i < m; ++i) u(i) *= std::exp(z * es.eigenvalues()(i));
    u = es.eigenvectors().cast<cplx>() * u; // exp(zT) e1
    if (m == cap && std::abs(u(m - 1)) > 10.0 * opts.tol) {
        // subspace cap reached without coefficient decay: split the time
        expm_krylov_once(H, 0.5 * z, v, opts);
        expm_krylov_once(H, 0.5 * z, v, opts);
        return;
    }
    v = beta0 * (V.leftCols(m) * u);
}

} // namespace

void expm_action_inplace(const SparseSym& H, cplx z, VectorXcd& v, const ExpmOptions& opts) {
    if (H.dim() != v.size()) throw schema_error("expm_action: dimension mismatch");
    if (std::abs(z.real()) > 1e-15 * std::abs(z))
        throw schema_error("expm_action: z must be purely imaginary");
    if (H.dim() <= 64) {
        expm_dense(H, z, v);
        return;
    }
    const double rho = gershgorin_radius(H.matrix());
    const double work = std::abs(z) * rho;
    const int nsub = std::max(1, static_cast<int>(std::ceil(work / (0.4 * opts.max_krylov))));
    const cplx zs = z / static_cast<double>(nsub);
    for (int s = 0; s < nsub; ++s) expm_krylov_once(H, zs, v, opts);
}

EvolutionResult evolve(const std::function<SparseSym(double)>& path, const Schedule& schedule,
                       const StateVector& psi0, const DtPolicy& policy,
                       const StateVector* fidelity_target, int trace_samples) {
    psi0.check_normalized();
    const double T = schedule.total_time();
    EvolutionResult out;
    out.final_state = psi0;
    out.realized_time = T;
    if (T <= 0.0) {
        if (fidelity_target)
            out.fidelity_trace.emplace_back(0.0, fidelity(*fidelity_target, psi0));
        return out;
    }
    const long nsteps = std::max<long>(1, static_cast<long>(std::ceil(T / policy.dt)));
    const double h = T / static_cast<double>(nsteps);
    VectorXcd psi = psi0.amplitudes;

    const long stride = trace_samples > 0 ? std::max<long>(1, nsteps / trace_samples) : nsteps + 1;
    auto record = [&](double t) {
        if (fidelity_target)
            out.fidelity_trace.emplace_back(t, fidelity(fidelity_target->amplitudes, psi));
        out.norm_drift = std::max(out.norm_drift, std::abs(psi.norm() - 1.0));
    };
    if (trace_samples > 0) record(0.0);

    for (long k = 0; k < nsteps; ++k) {
        const double tmid = (static_cast<double>(k) + 0.5) * h;
        const SparseSym H = path(schedule.value(tmid));
        expm_action_inplace(H, cplx(0.0, -h), psi);
        if (trace_samples > 0 && (k + 1) % stride == 0 && k + 1 != nsteps)
            record(static_cast<double>(k + 1) * h);
    }
    out.step_count = nsteps;
    out.final_state.amplitudes = psi;
    out.final_state.basis_tag = psi0.basis_tag;
    record(T);
    return out;
}

std::pair<StateVector, double> ground_state(const SparseSym& H) {
    Spectrum s = exact_spectrum(H, 2, true);
    StateVector psi;
    psi.amplitudes = s.eigenvectors->col(0).cast<cplx>();
    psi.basis_tag = H.basis_tag();
    const double gap = s.eigenvalues.size() > 1 ? s.eigenvalues(1) - s.eigenvalues(0) : 0.0;
    return {psi, gap};
}

namespace {

// golden-section refinement of a bracketed minimum to 1e-3 relative width
template <typename F>
std::pair<double, double> golden_min(F f, double a, double b) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while ((b - a) > 1e-3 * (std::abs(a) + std::abs(b) + 1e-6)) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        }
    }
    return f1 < f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

} // namespace

SweepResult adiabatic_sweep(const std::function<SparseSym(double)>& path,
                            const std::function<Schedule(double)>& schedule_family,
                            const std::vector<double>& times, const DtPolicy& policy,
                            int gap_grid_points) {
    if (times.empty()) throw schema_error("adiabatic_sweep: empty time grid");
    gap_grid_points = std::max(gap_grid_points, 64);

    const Schedule probe = schedule_family(times.front());
    const double u0 = probe.value(0.0);
    const double uT = probe.value(probe.total_time());

    auto gap_at = [&](double u) { return exact_spectrum(path(u), 2).gap(); };
    SweepResult out;
    out.min_gap = std::numeric_limits<double>::infinity();
    int imin = 0;
    std::vector<double> ugrid(gap_grid_points), gaps(gap_grid_points);
    for (int i = 0; i < gap_grid_points; ++i) {
        ugrid[i] = u0 + (uT - u0) * static_cast<double>(i) / (gap_grid_points - 1);
        gaps[i] = gap_at(ugrid[i]);
        if (gaps[i] < out.min_gap) {
            out.min_gap = gaps[i];
            imin = i;
        }
    }
    const double lo = ugrid[std::max(0, imin - 1)];
    const double hi = ugrid[std::min(gap_grid_points - 1, imin + 1)];
    if (lo != hi) {
        auto [umin, gmin] = golden_min([&](double u) { return gap_at(u); }, std::min(lo, hi),
                                       std::max(lo, hi));
        out.min_gap = std::min(out.min_gap, gmin);
        out.min_gap_control = umin;
    } else {
        out.min_gap_control = ugrid[imin];
    }

    auto [psi_start, g0] = ground_state(path(u0));
    auto [psi_end, g1] = ground_state(path(uT));
    (void)g0;
    (void)g1;
    for (double T : times) {
        EvolutionResult r = evolve(path, schedule_family(T), psi_start, policy, &psi_end, 0);
        out.fidelity_vs_time.push_back({T, fidelity(psi_end.amplitudes, r.final_state.amplitudes)});
    }
    return out;
}

} // namespace annlab
