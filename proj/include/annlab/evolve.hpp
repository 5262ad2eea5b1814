#pragma once

#include <complex>
#include <functional>

#include "annlab/operators.hpp"
#include "annlab/schedule.hpp"

namespace annlab {

struct ExpmOptions {
    double tol = 1e-10; // per-application accuracy of exp(z H) v
    int max_krylov = 60;
};

/// v <- exp(z H) v for real-symmetric H and purely imaginary z, through a
/// Lanczos subspace with a posteriori error control (time is split whenever
/// the capped subspace cannot reach the tolerance). Dimensions up to 64 are
/// propagated through a dense eigendecomposition instead.
void expm_action_inplace(const SparseSym& H, std::complex<double> z, VectorXcd& v,
                         const ExpmOptions& opts = {});

struct DtPolicy {
    double dt = 0.05; // piecewise-constant step; the midpoint Hamiltonian is used
};

struct EvolutionResult {
    StateVector final_state;
    std::vector<std::pair<double, double>> fidelity_trace; // (t, |<target|psi>|^2)
    double norm_drift = 0.0;                               // max |  ||psi|| - 1  |
    long step_count = 0;
    double realized_time = 0.0;
};

/// Integrate i d/dt psi = H(u(t)) psi over [0, T] where u is the schedule's
/// control value and `path` maps control values to Hamiltonians. Each step
/// applies exp(-i dt H(u_mid)) exactly (to tolerance), giving a second-order
/// accurate, norm-preserving scheme.
EvolutionResult evolve(const std::function<SparseSym(double)>& path, const Schedule& schedule,
                       const StateVector& psi0, const DtPolicy& policy = {},
                       const StateVector* fidelity_target = nullptr, int trace_samples = 0);

struct SweepPoint {
    double total_time = 0.0;
    double final_fidelity = 0.0;
};

struct SweepResult {
    std::vector<SweepPoint> fidelity_vs_time;
    double min_gap = 0.0;
    double min_gap_control = 0.0; // control value at the refined minimum
};

/// For each T in `times`, evolve the ground state of path(u(0)) and record
/// the fidelity with the ground state of path(u(T)). The minimum spectral
/// gap along the path is located on `gap_grid_points` samples (>= 64) and
/// refined by golden-section search to 1e-3 relative.
SweepResult adiabatic_sweep(const std::function<SparseSym(double)>& path,
                            const std::function<Schedule(double)>& schedule_family,
                            const std::vector<double>& times, const DtPolicy& policy = {},
                            int gap_grid_points = 64);

/// Ground state (and the gap above it) of a symmetric operator.
std::pair<StateVector, double> ground_state(const SparseSym& H);

} // namespace annlab
