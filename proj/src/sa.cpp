#include "annlab/sa.hpp"

#include <cmath>

#include "annlab/rng.hpp"

namespace annlab {

SaResult sa_run(const ObjectiveFunction& E, const Schedule& beta_schedule, const SaOptions& opts) {
    if (!beta_schedule.nondecreasing())
        throw schema_error("sa_run: beta schedule must be nondecreasing");
    if (opts.sweeps < 0 || opts.burn_in_sweeps < 0) throw schema_error("sa_run: negative sweep count");

    const int n = E.n();
    const double kappa = E.kappa();
    const double T = beta_schedule.total_time();
    CounterRng rng(opts.seed, 0x5a);

    SaResult out;
    std::uint64_t cfg = (n >= 64) ? rng.next_u64() : rng.uniform_below(1ULL << n);
    double energy = E.energy(cfg);
    out.best_config = cfg;
    out.best_energy = energy;

    const bool keep_hist = opts.record_histogram && n <= 16;
    if (keep_hist) out.histogram.assign(1ULL << n, 0);

    const long total_moves = opts.sweeps * n;
    const long burn_moves = opts.burn_in_sweeps * n;
    double beta = beta_schedule.value(0.0);

    if (opts.sweeps == 0) {
        out.trace.push_back({0, beta, energy, cfg});
        out.final_config = cfg;
        out.final_energy = energy;
        return out;
    }

    for (long move = 0; move < total_moves; ++move) {
        const double t = T * (static_cast<double>(move) + 0.5) / static_cast<double>(total_moves);
        beta = beta_schedule.value(t);
        const int l = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
        const double diff = E.flip_diff(cfg, l); // E(current) - E(flipped)
        const double log_acc = -beta * kappa + 0.5 * beta * diff;
        if (std::log(1.0 - rng.uniform01()) < log_acc) {
            cfg = flip(cfg, l);
            energy -= diff;
            ++out.accepted_moves;
            if (energy < out.best_energy) {
                out.best_energy = energy;
                out.best_config = cfg;
            }
        }
        if (keep_hist && move >= burn_moves) ++out.histogram[cfg];
        if ((move + 1) % (opts.trace_stride_sweeps * n) == 0)
            out.trace.push_back({move + 1, beta, energy, cfg});
    }
    out.final_config = cfg;
    out.final_energy = energy;
    out.total_moves = total_moves;
    return out;
}

} // namespace annlab
