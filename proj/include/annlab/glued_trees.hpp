#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "annlab/evolve.hpp"
#include "annlab/operators.hpp"

namespace annlab {

inline constexpr double kGluedTreesAlpha = 0.35355339059327373; // 1/sqrt(8)

/// Two complete binary trees of depth n joined leaf-to-leaf by a uniformly
/// random alternating cycle, every vertex carrying a distinct random name.
struct GluedTreesGraph {
    int depth = 0; // n
    std::uint64_t seed = 0;
    int name_bits = 0;                  // max(2n, 4)
    Eigen::Index num_vertices = 0;      // 2^{n+2} - 2
    std::vector<std::uint64_t> names;   // per vertex id
    std::vector<std::vector<int>> adj;  // neighbor ids
    std::vector<int> column_of;         // 0 .. 2n+1
    int entrance = 0;
    int exit = 0;

    int num_columns() const { return 2 * depth + 2; }
};

/// Build and validate a random instance. Guarded at 1 <= n <= 14.
GluedTreesGraph generate_glued_trees(int n, std::uint64_t seed);

/// Name oracle with a call counter (the only mutable state of a run).
class GluedTreesOracle {
  public:
    explicit GluedTreesOracle(const GluedTreesGraph& g);

    /// Neighbor names for a valid vertex name; std::nullopt is the
    /// designated INVALID response. Every call increments the counter.
    std::optional<std::vector<std::uint64_t>> neighbors(std::uint64_t name);

    long calls() const { return calls_; }

  private:
    const GluedTreesGraph& graph_;
    std::unordered_map<std::uint64_t, int> index_;
    long calls_ = 0;
};

enum class GluedTreesBasis { vertex, column };

/// H(s) = (1-s) H_entrance - s(1-s) A + s H_exit with rank-1 endpoint wells
/// of depth alpha. The column form is the exact restriction to the
/// column-uniform subspace: off-diagonals sqrt(2) inside the trees and 2
/// across the junction.
SparseSym glued_trees_hamiltonian(const GluedTreesGraph& g, double s,
                                  GluedTreesBasis basis = GluedTreesBasis::column,
                                  double alpha = kGluedTreesAlpha);

struct ColumnReduceReport {
    double max_leakage = 0.0;      // worst || (1 - P) H v_col ||
    double max_spectrum_dev = 0.0; // worst distance of a reduced eigenvalue to the full set
};

/// Verifies on an s grid that the column subspace is invariant and the
/// reduced spectrum embeds in the vertex-basis spectrum. Guarded at n <= 10.
ColumnReduceReport column_reduce_check(const GluedTreesGraph& g, const std::vector<double>& s_grid,
                                       double alpha = kGluedTreesAlpha);

struct SpectrumProfileRow {
    double s, lambda0, lambda1, lambda2, gap10, gap21;
};

struct SpectrumProfile {
    std::vector<SpectrumProfileRow> rows;
    double min_gap10 = 0.0; // refined
    double min_gap10_s = 0.0;
    double min_gap21_interior = 0.0; // smallest interior local minimum, refined
    double min_gap21_s = 0.0;
    double symmetry_residual = 0.0; // two lowest levels under s <-> 1-s
};

/// Column-basis profile of the three lowest levels over a symmetric s grid.
SpectrumProfile spectrum_profile(const GluedTreesGraph& g, int grid_points = 257,
                                 double alpha = kGluedTreesAlpha);

enum class GluedTreesInit { entrance, randomized_manifold };

struct DiabaticRunResult {
    double exit_probability = 0.0;
    int initial_level = 0; // 0 = ground, 1 = first excited (randomized draws)
    std::vector<std::array<double, 4>> populations; // (s, p_level0, p_level1, p_exit)
    double norm_drift = 0.0;
};

struct DiabaticRunOptions {
    GluedTreesBasis basis = GluedTreesBasis::column;
    double dt = 0.25;
    double s0 = 1e-3;  // where the randomized manifold is sampled
    int trace_points = 0;
    double alpha = kGluedTreesAlpha;
};

/// Linear-schedule run from s=0 to s=1 over total time T. The randomized
/// initialization draws the ground or first-excited state of H(s0) with
/// probability 1/2 each.
DiabaticRunResult diabatic_run(const GluedTreesGraph& g, double T, GluedTreesInit init,
                               std::uint64_t seed, const DiabaticRunOptions& opts = {});

/// Seeded random walk from the entrance, counting oracle calls until the
/// exit's name is seen. A classical baseline, not a hardness proof.
long classical_walk_baseline(const GluedTreesGraph& g, std::uint64_t seed, long max_steps);

} // namespace annlab
