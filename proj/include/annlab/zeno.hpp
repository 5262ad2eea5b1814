#pragma once

#include <vector>

#include "annlab/operators.hpp"

namespace annlab {

struct ZenoResult {
    StateVector final_state;
    double fidelity_with_target = 0.0;
    double realized_time = 0.0;
    int steps = 0;
};

/// Randomized (Zeno) evolution along a discretized Hamiltonian path: at
/// step r the state evolves under exp(i H_r (tau1 + tau2)) with each tau
/// uniform on [0, c3/delta]. The phase randomization emulates projective
/// measurements of the instantaneous ground state, so the initial ground
/// state of hams.front() is carried to the ground state of hams.back().
///
/// Throws if any step's ground state is degenerate (gap below 1e-10).
ZenoResult zeno_randomized_evolution(const std::vector<SparseSym>& hams, double delta, double c3,
                                     std::uint64_t seed, const StateVector* psi0 = nullptr);

} // namespace annlab
