#pragma once

#include <cstdint>
#include <vector>

#include "annlab/eig.hpp"
#include "annlab/markov.hpp"
#include "annlab/operators.hpp"
#include "annlab/quantum_map.hpp"

namespace annlab {

/// Undirected transition graph of a detailed-balance chain with a proper
/// edge coloring: edges of equal color share no vertex.
struct TransitionGraph {
    struct Edge {
        std::uint64_t u = 0, v = 0; // u < v
        double pr_u_given_v = 0.0;
        double pr_v_given_u = 0.0;
        int color = -1;
    };
    Eigen::Index num_vertices = 0;
    std::vector<Edge> edges;
    int num_colors = 0;
    int max_degree = 0;
};

/// One edge per unordered pair with nonzero transition probability.
/// Single-flip chains are colored by flipped-site index (q = n); other
/// chains greedily (edges ordered by degree sum, first free color).
TransitionGraph transition_graph(const StochasticMatrix& S);

/// Throws if two same-colored edges share a vertex.
void check_coloring(const TransitionGraph& g);

/// Block operator on dim N (q+1): color-k square roots coupled to ancilla
/// |k> against |0>, plus the penalty sqrt(delta) off the ancilla-0 block.
/// Ancilla is the slow index: global index = a N + vertex.
struct AmplifiedOperator {
    SparseSym a_matrix;    // the coupling operator alone
    double penalty = 0.0;  // sqrt(delta_bound)
    int ancilla_dim = 0;   // q + 1
    Eigen::Index base_dim = 0;

    /// a_matrix + penalty (1 - |0><0|_ancilla).
    SparseSym h_tilde() const;
};

/// Square roots are taken edgewise: same-colored edge projectors are
/// vertex-disjoint, so sqrt(O_k) = sum |mu><mu| / ||mu|| exactly.
/// delta_bound must lie in (0, Delta_beta]; any valid lower bound works.
AmplifiedOperator build_amplified(const TransitionGraph& g, double delta_bound);

/// Convenience: graph is built (and colored) from the chain.
AmplifiedOperator build_amplified(const StochasticMatrix& S, double delta_bound);

struct AmplifiedSpectrumReport {
    bool all_matched = false;
    double max_pair_dev = 0.0;   // worst |spec(A) - (+-sqrt(lambda_j))|
    double max_block_dev = 0.0;  // worst deviation of the 2x2 block values in spec(H~)
    double relevant_gap = 0.0;   // smallest nonzero |eigenvalue| of H~
    double ratio_to_sqrt_delta = 0.0;
    int zero_multiplicity = 0;
};

/// Dense verification (dim <= 4096) of the +-sqrt(lambda) pairing and the
/// penalized block spectrum against an exact base spectrum.
AmplifiedSpectrumReport verify_amplified_spectrum(const AmplifiedOperator& amp,
                                                  const Spectrum& base, double tol = 1e-8);

/// Measured relevant gap of h_tilde: smallest nonzero |eigenvalue|,
/// dense when small, thick-restart Lanczos on h_tilde^2 (with the known
/// null vector deflated) otherwise. sqrt_gibbs is the chain's ground state.
double measure_relevant_gap(const AmplifiedOperator& amp, const VectorXd& sqrt_gibbs);

struct GapScalingRow {
    int n = 0;
    Eigen::Index N = 0;
    double delta_beta = 0.0;
    double amp_gap = 0.0;
    double ratio = 0.0; // amp_gap / sqrt(delta_beta)
};

/// One study point: exact chain gap, amplified operator at that bound,
/// measured relevant gap and its ratio to sqrt(Delta_beta).
GapScalingRow gap_scaling_point(const ObjectiveFunction& E, const StochasticMatrix& S);

} // namespace annlab
