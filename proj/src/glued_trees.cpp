#include "annlab/glued_trees.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "annlab/eig.hpp"
#include "annlab/rng.hpp"

namespace annlab {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

int heap_column(int local_id) {
    int c = 0;
    while ((2 << c) <= local_id + 1) ++c;
    return c;
}

template <typename F>
std::pair<double, double> golden_min(F f, double a, double b) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while ((b - a) > 1e-10) {
        if (f1 < f2) {
            b = x2, x2 = x1, f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        } else {
            a = x1, x1 = x2, f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        }
        if ((b - a) < 1e-6 * (std::abs(a) + std::abs(b))) break;
    }
    return f1 < f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

} // namespace

GluedTreesGraph generate_glued_trees(int n, std::uint64_t seed) {
    if (n < 1 || n > 14) throw guard_error("generate_glued_trees: need 1 <= n <= 14");
    GluedTreesGraph g;
    g.depth = n;
    g.seed = seed;
    g.name_bits = std::max(2 * n, 4);
    const int tree = (2 << n) - 1; // 2^{n+1} - 1 vertices per tree
    g.num_vertices = 2 * tree;
    g.adj.assign(g.num_vertices, {});
    g.column_of.assign(g.num_vertices, 0);
    g.entrance = 0;
    g.exit = tree;

    auto add_edge = [&](int a, int b) {
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    };

    // left tree in heap order; right tree mirrored
    for (int v = 1; v < tree; ++v) {
        add_edge(v, (v - 1) / 2);
        add_edge(tree + v, tree + (v - 1) / 2);
    }
    for (int v = 0; v < tree; ++v) {
        g.column_of[v] = heap_column(v);
        g.column_of[tree + v] = 2 * n + 1 - heap_column(v);
    }

    // random alternating cycle over the two leaf columns
    const int leaves = 1 << n;
    std::vector<int> left(leaves), right(leaves);
    for (int i = 0; i < leaves; ++i) {
        left[i] = (1 << n) - 1 + i;
        right[i] = tree + (1 << n) - 1 + i;
    }
    CounterRng rng(seed, 0x91ee);
    auto shuffle = [&](std::vector<int>& a) {
        for (int i = static_cast<int>(a.size()) - 1; i > 0; --i) {
            const auto j = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(i) + 1));
            std::swap(a[i], a[j]);
        }
    };
    shuffle(left);
    shuffle(right);
    for (int i = 0; i < leaves; ++i) {
        add_edge(left[i], right[i]);
        add_edge(right[i], left[(i + 1) % leaves]);
    }

    // distinct random names
    g.names.resize(g.num_vertices);
    std::unordered_set<std::uint64_t> used;
    const std::uint64_t mask =
        g.name_bits >= 64 ? ~0ULL : ((1ULL << g.name_bits) - 1ULL);
    for (auto& nm : g.names) {
        for (;;) {
            const std::uint64_t cand = rng.next_u64() & mask;
            if (used.insert(cand).second) {
                nm = cand;
                break;
            }
        }
    }

    // structural invariants hold for every seed; check them here
    for (int v = 0; v < g.num_vertices; ++v) {
        const auto deg = g.adj[v].size();
        if (v == g.entrance || v == g.exit) {
            if (deg != 2) throw numerical_error("glued trees: root degree != 2");
        } else if (deg != 3) {
            throw numerical_error("glued trees: interior degree != 3");
        }
    }
    return g;
}

GluedTreesOracle::GluedTreesOracle(const GluedTreesGraph& g) : graph_(g) {
    index_.reserve(static_cast<std::size_t>(g.num_vertices));
    for (int v = 0; v < g.num_vertices; ++v) index_[g.names[v]] = v;
}

std::optional<std::vector<std::uint64_t>> GluedTreesOracle::neighbors(std::uint64_t name) {
    ++calls_;
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    std::vector<std::uint64_t> out;
    out.reserve(graph_.adj[it->second].size());
    for (int u : graph_.adj[it->second]) out.push_back(graph_.names[u]);
    return out;
}

SparseSym glued_trees_hamiltonian(const GluedTreesGraph& g, double s, GluedTreesBasis basis,
                                  double alpha) {
    if (s < 0.0 || s > 1.0) throw schema_error("glued_trees_hamiltonian: s outside [0, 1]");
    if (basis == GluedTreesBasis::column) {
        const int d = g.num_columns();
        std::vector<Eigen::Triplet<double>> trips;
        trips.reserve(3 * d);
        for (int j = 0; j + 1 < d; ++j) {
            const double w = (j == g.depth) ? 2.0 : kSqrt2;
            const double val = -s * (1.0 - s) * w;
            trips.emplace_back(j, j + 1, val);
            trips.emplace_back(j + 1, j, val);
        }
        trips.emplace_back(0, 0, -alpha * (1.0 - s));
        trips.emplace_back(d - 1, d - 1, -alpha * s);
        SparseMat H(d, d);
        H.setFromTriplets(trips.begin(), trips.end());
        return SparseSym(std::move(H), BasisTag::column);
    }
    const Eigen::Index N = g.num_vertices;
    std::vector<Eigen::Triplet<double>> trips;
    for (int v = 0; v < N; ++v)
        for (int u : g.adj[v])
            trips.emplace_back(v, u, -s * (1.0 - s));
    trips.emplace_back(g.entrance, g.entrance, -alpha * (1.0 - s));
    trips.emplace_back(g.exit, g.exit, -alpha * s);
    SparseMat H(N, N);
    H.setFromTriplets(trips.begin(), trips.end());
    return SparseSym(std::move(H), BasisTag::computational);
}

ColumnReduceReport column_reduce_check(const GluedTreesGraph& g, const std::vector<double>& s_grid,
                                       double alpha) {
    if (g.depth > 10) throw guard_error("column_reduce_check: vertex basis guard n <= 10");
    const Eigen::Index N = g.num_vertices;
    const int d = g.num_columns();
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(N, d);
    std::vector<int> colsize(d, 0);
    for (int v = 0; v < N; ++v) ++colsize[g.column_of[v]];
    for (int v = 0; v < N; ++v)
        P(v, g.column_of[v]) = 1.0 / std::sqrt(static_cast<double>(colsize[g.column_of[v]]));

    ColumnReduceReport rep;
    for (double s : s_grid) {
        const SparseSym Hv = glued_trees_hamiltonian(g, s, GluedTreesBasis::vertex, alpha);
        const SparseSym Hc = glued_trees_hamiltonian(g, s, GluedTreesBasis::column, alpha);
        const Eigen::MatrixXd HP = Hv.matrix() * P;
        const Eigen::MatrixXd leak = HP - P * (P.transpose() * HP);
        rep.max_leakage = std::max(rep.max_leakage, leak.colwise().norm().maxCoeff());

        const VectorXd full = exact_spectrum_dense(Hv.dense(), static_cast<int>(N)).eigenvalues;
        const VectorXd red = exact_spectrum_dense(Hc.dense(), d).eigenvalues;
        for (int i = 0; i < d; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (Eigen::Index j = 0; j < full.size(); ++j)
                best = std::min(best, std::abs(full(j) - red(i)));
            rep.max_spectrum_dev = std::max(rep.max_spectrum_dev, best);
        }
    }
    return rep;
}

SpectrumProfile spectrum_profile(const GluedTreesGraph& g, int grid_points, double alpha) {
    if (grid_points < 65) throw schema_error("spectrum_profile: need at least 65 grid points");
    SpectrumProfile out;
    auto low3 = [&](double s) {
        return exact_spectrum_dense(
                   glued_trees_hamiltonian(g, s, GluedTreesBasis::column, alpha).dense(), 3)
            .eigenvalues;
    };
    std::vector<double> sg(grid_points);
    for (int i = 0; i < grid_points; ++i) sg[i] = static_cast<double>(i) / (grid_points - 1);
    for (double s : sg) {
        const VectorXd w = low3(s);
        out.rows.push_back({s, w(0), w(1), w(2), w(1) - w(0), w(2) - w(1)});
    }

    // symmetry of the two lowest levels under s <-> 1-s
    for (int i = 0; i < grid_points; ++i) {
        const auto& a = out.rows[i];
        const auto& b = out.rows[grid_points - 1 - i];
        out.symmetry_residual = std::max(
            {out.symmetry_residual, std::abs(a.lambda0 - b.lambda0), std::abs(a.lambda1 - b.lambda1)});
    }

    auto gap10 = [&](double s) {
        const VectorXd w = low3(s);
        return w(1) - w(0);
    };
    int imin = 0;
    for (int i = 1; i < grid_points; ++i)
        if (out.rows[i].gap10 < out.rows[imin].gap10) imin = i;
    {
        const double lo = sg[std::max(0, imin - 1)];
        const double hi = sg[std::min(grid_points - 1, imin + 1)];
        auto [smin, gmin] = golden_min(gap10, lo, hi);
        out.min_gap10 = gmin;
        out.min_gap10_s = smin;
    }

    // interior local minima of gap21
    auto gap21 = [&](double s) {
        const VectorXd w = low3(s);
        return w(2) - w(1);
    };
    out.min_gap21_interior = std::numeric_limits<double>::infinity();
    for (int i = 1; i + 1 < grid_points; ++i) {
        if (out.rows[i].gap21 <= out.rows[i - 1].gap21 && out.rows[i].gap21 <= out.rows[i + 1].gap21) {
            auto [smin, gmin] = golden_min(gap21, sg[i - 1], sg[i + 1]);
            if (gmin < out.min_gap21_interior) {
                out.min_gap21_interior = gmin;
                out.min_gap21_s = smin;
            }
        }
    }
    return out;
}

DiabaticRunResult diabatic_run(const GluedTreesGraph& g, double T, GluedTreesInit init,
                               std::uint64_t seed, const DiabaticRunOptions& opts) {
    if (T < 0.0) throw schema_error("diabatic_run: negative total time");
    auto path = [&](double s) { return glued_trees_hamiltonian(g, s, opts.basis, opts.alpha); };
    const Eigen::Index dim = path(0.0).dim();

    DiabaticRunResult out;
    StateVector psi0;
    psi0.basis_tag = opts.basis == GluedTreesBasis::column ? BasisTag::column : BasisTag::computational;
    psi0.amplitudes = VectorXcd::Zero(dim);
    if (init == GluedTreesInit::entrance) {
        const Eigen::Index ent = opts.basis == GluedTreesBasis::column ? 0 : g.entrance;
        psi0.amplitudes(ent) = 1.0;
    } else {
        Spectrum s0 = exact_spectrum(path(opts.s0), 2, true);
        CounterRng rng(seed, 0x6d1f);
        out.initial_level = rng.uniform01() < 0.5 ? 0 : 1;
        psi0.amplitudes = s0.eigenvectors->col(out.initial_level).cast<std::complex<double>>();
    }

    const Eigen::Index exit_idx =
        opts.basis == GluedTreesBasis::column ? static_cast<Eigen::Index>(g.num_columns() - 1)
                                              : static_cast<Eigen::Index>(g.exit);

    if (T == 0.0) {
        out.exit_probability = std::norm(psi0.amplitudes(exit_idx));
        return out;
    }

    const long nsteps = std::max<long>(1, static_cast<long>(std::ceil(T / opts.dt)));
    const double h = T / static_cast<double>(nsteps);
    VectorXcd psi = psi0.amplitudes;
    const long stride =
        opts.trace_points > 0 ? std::max<long>(1, nsteps / opts.trace_points) : nsteps + 1;

    auto record = [&](double s_now) {
        Spectrum sp = exact_spectrum(path(s_now), 2, true);
        const VectorXcd v0 = sp.eigenvectors->col(0).cast<std::complex<double>>();
        const VectorXcd v1 = sp.eigenvectors->col(1).cast<std::complex<double>>();
        out.populations.push_back({s_now, std::norm(v0.dot(psi)), std::norm(v1.dot(psi)),
                                   std::norm(psi(exit_idx))});
    };
    if (opts.trace_points > 0) record(0.0);
    for (long k = 0; k < nsteps; ++k) {
        const double smid = (static_cast<double>(k) + 0.5) * h / T;
        expm_action_inplace(path(smid), std::complex<double>(0.0, -h), psi);
        if (opts.trace_points > 0 && (k + 1) % stride == 0)
            record(static_cast<double>(k + 1) * h / T);
    }
    out.norm_drift = std::abs(psi.norm() - 1.0);
    out.exit_probability = std::norm(psi(exit_idx));
    return out;
}

long classical_walk_baseline(const GluedTreesGraph& g, std::uint64_t seed, long max_steps) {
    GluedTreesOracle oracle(g);
    CounterRng rng(seed, 0xa11c);
    const std::uint64_t exit_name = g.names[g.exit];
    std::uint64_t at = g.names[g.entrance];
    for (long step = 0; step < max_steps; ++step) {
        auto nb = oracle.neighbors(at);
        if (!nb) throw numerical_error("classical_walk_baseline: walked to an invalid name");
        for (std::uint64_t nm : *nb)
            if (nm == exit_name) return oracle.calls();
        at = (*nb)[rng.uniform_below(nb->size())];
    }
    return -1; // exit not named within the budget
}

} // namespace annlab
