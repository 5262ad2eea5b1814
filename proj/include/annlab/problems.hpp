#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "annlab/ising.hpp"
#include "annlab/markov.hpp"
#include "annlab/operators.hpp"

namespace annlab {

/// Search landscape that is flat except at one marked configuration.
/// sign = -1 makes the marked item the minimum (optimization runs);
/// sign = +1 keeps the cost of the marked item at +1 (gap studies).
struct GroverInstance {
    int n = 0;
    std::uint64_t marked = 0;
    int sign = -1;
};

ObjectiveFunction grover_objective(const GroverInstance& inst);

/// Complete-graph Metropolis chain: uniform proposal over all N
/// configurations, acceptance min{1, exp(-beta dE)}. Guarded at n <= 12.
StochasticMatrix grover_sa_chain(const GroverInstance& inst, double beta);

/// Grover instance JSON round trip: {"n":..,"marked":..,"sign":..}.
std::string serialize_grover(const GroverInstance& inst);
GroverInstance parse_grover(const std::string& json_text);

struct Clause {
    int lit[2] = {0, 0}; // DIMACS literals: +v / -v, 1-based variables
    int size = 0;        // 1 or 2
};

/// MAX 2-SAT instance; f(z) counts satisfied clauses (bit b = 1 reads
/// variable b+1 as true).
struct Max2SatInstance {
    int n = 0;
    std::vector<Clause> clauses;

    long f(std::uint64_t z) const;
};

Max2SatInstance parse_dimacs(std::istream& in);
Max2SatInstance load_dimacs(const std::string& path);
std::string serialize_dimacs(const Max2SatInstance& inst);

/// Uniformly random instance with `m` clauses (distinct literal pairs not
/// enforced; clauses of size 2 only).
Max2SatInstance random_max2sat(int n, int m, std::uint64_t seed);

/// Mixing and problem Hamiltonians: H_B = -sum_l (1 - sigma_x^l)/2 and
/// H_P = -sum_z f(z) |z><z|. Ground states of H_P are the maximizers of f.
std::pair<SparseSym, SparseSym> max2sat_hamiltonians(const Max2SatInstance& inst);

struct Max2SatSweepPoint {
    double total_time = 0.0;
    double success = 0.0; // ground-space population of H_P at the end
};

struct Max2SatSweepResult {
    std::vector<Max2SatSweepPoint> points;
    bool non_monotone = false; // diabatic enhancement flag
    long optimum_count = 0;
    long best_f = 0;
};

/// Evolve (1-s) H_B + s H_P linearly over each T, starting from the ground
/// state of H_B. Guarded at n <= 12.
Max2SatSweepResult diabatic_max2sat_run(const Max2SatInstance& inst,
                                        const std::vector<double>& times, double dt = 0.02);

} // namespace annlab
