#include "annlab/zeno.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "annlab/eig.hpp"
#include "annlab/evolve.hpp"
#include "annlab/rng.hpp"

namespace annlab {

ZenoResult zeno_randomized_evolution(const std::vector<SparseSym>& hams, double delta, double c3,
                                     std::uint64_t seed, const StateVector* psi0) {
    if (hams.size() < 2) throw schema_error("zeno: need at least two path points");
    if (!(delta > 0.0) || !(c3 > 0.0)) throw schema_error("zeno: delta and c3 must be positive");

    CounterRng rng(seed, 0x2e10);
    ZenoResult out;

    StateVector psi;
    if (psi0) {
        psi0->check_normalized();
        psi = *psi0;
    } else {
        auto [g, gap] = ground_state(hams.front());
        if (gap < 1e-10) throw numerical_error("zeno: degenerate step detected (r = 0)");
        psi = g;
    }

    const double span = c3 / delta;
    for (std::size_t r = 1; r < hams.size(); ++r) {
        auto [g, gap] = ground_state(hams[r]);
        if (gap < 1e-10)
            throw numerical_error("zeno: degenerate step detected (r = " + std::to_string(r) + ")");
        const double tau = rng.uniform(0.0, span) + rng.uniform(0.0, span);
        expm_action_inplace(hams[r], std::complex<double>(0.0, tau), psi.amplitudes);
        out.realized_time += tau;
    }
    auto [target, gap_final] = ground_state(hams.back());
    (void)gap_final;
    out.fidelity_with_target = fidelity(target, psi);
    out.final_state = std::move(psi);
    out.steps = static_cast<int>(hams.size()) - 1;
    return out;
}

} // namespace annlab
