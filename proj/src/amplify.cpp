#include "annlab/amplify.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace annlab {

TransitionGraph transition_graph(const StochasticMatrix& S) {
    const Eigen::Index N = S.probs.rows();
    TransitionGraph g;
    g.num_vertices = N;

    SparseMat st = SparseMat(S.probs.transpose());
    std::vector<int> degree(N, 0);
    for (int k = 0; k < S.probs.outerSize(); ++k) {
        SparseMat::InnerIterator it(S.probs, k), jt(st, k);
        for (; it; ++it, ++jt) {
            if (!jt || jt.row() != it.row())
                throw numerical_error("transition_graph: asymmetric sparsity pattern");
            if (it.row() <= it.col()) continue; // keep each unordered pair once
            if (it.value() == 0.0 && jt.value() == 0.0) continue;
            TransitionGraph::Edge e;
            e.u = static_cast<std::uint64_t>(it.col());
            e.v = static_cast<std::uint64_t>(it.row());
            e.pr_v_given_u = it.value(); // S(v, u), column u
            e.pr_u_given_v = jt.value(); // S(u, v)
            g.edges.push_back(e);
            ++degree[it.row()];
            ++degree[it.col()];
        }
    }
    g.max_degree = g.edges.empty() ? 0 : *std::max_element(degree.begin(), degree.end());

    if (S.neighborhood == MoveStructure::single_flip) {
        int q = 0;
        for (auto& e : g.edges) {
            const std::uint64_t x = e.u ^ e.v;
            if ((x & (x - 1)) != 0)
                throw numerical_error("transition_graph: non-flip edge in a single-flip chain");
            int l = 0;
            while (!((x >> l) & 1ULL)) ++l;
            e.color = l;
            q = std::max(q, l + 1);
        }
        g.num_colors = q;
    } else {
        // greedy proper coloring, edges ordered by descending degree sum
        std::vector<std::size_t> order(g.edges.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const auto& ea = g.edges[a];
            const auto& eb = g.edges[b];
            const int da = degree[ea.u] + degree[ea.v];
            const int db = degree[eb.u] + degree[eb.v];
            if (da != db) return da > db;
            return std::tie(ea.u, ea.v) < std::tie(eb.u, eb.v);
        });
        std::vector<std::vector<bool>> used(N);
        int q = 0;
        for (std::size_t idx : order) {
            auto& e = g.edges[idx];
            auto& cu = used[e.u];
            auto& cv = used[e.v];
            int c = 0;
            while ((c < static_cast<int>(cu.size()) && cu[c]) ||
                   (c < static_cast<int>(cv.size()) && cv[c]))
                ++c;
            e.color = c;
            if (c >= static_cast<int>(cu.size())) cu.resize(c + 1, false);
            if (c >= static_cast<int>(cv.size())) cv.resize(c + 1, false);
            cu[c] = cv[c] = true;
            q = std::max(q, c + 1);
        }
        g.num_colors = q;
    }
    return g;
}

void check_coloring(const TransitionGraph& g) {
    // same-colored edges must not share a vertex
    for (const auto& e : g.edges) {
        if (e.color < 0 || e.color >= g.num_colors)
            throw schema_error("check_coloring: edge color out of range");
    }
    std::vector<std::unordered_map<std::uint64_t, bool>> per_color(g.num_colors);
    for (const auto& e : g.edges) {
        auto& m = per_color[e.color];
        if (m.count(e.u) || m.count(e.v))
            throw schema_error("check_coloring: two edges of one color share a vertex");
        m[e.u] = m[e.v] = true;
    }
}

AmplifiedOperator build_amplified(const TransitionGraph& g, double delta_bound) {
    if (!(delta_bound > 0.0)) throw schema_error("build_amplified: delta_bound must be positive");
    check_coloring(g);
    const Eigen::Index N = g.num_vertices;
    const int q = g.num_colors;
    const Eigen::Index dim = N * (q + 1);

    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(g.edges.size() * 8);
    for (const auto& e : g.edges) {
        const double a = e.pr_u_given_v; // weight on |u> of the edge state... see below
        const double b = e.pr_v_given_u;
        // edge state sqrt(Pr(u|v)) |v> - sqrt(Pr(v|u)) |u>, rank-1 square root
        const double nrm = std::sqrt(a + b);
        const double duu = b / nrm;            // <u| . |u>
        const double dvv = a / nrm;            // <v| . |v>
        const double duv = -std::sqrt(a * b) / nrm;
        const Eigen::Index blk = static_cast<Eigen::Index>(e.color + 1) * N;
        const auto u = static_cast<Eigen::Index>(e.u);
        const auto v = static_cast<Eigen::Index>(e.v);
        // block (k, 0) and its transpose (0, k)
        trips.emplace_back(blk + u, u, duu);
        trips.emplace_back(blk + v, v, dvv);
        trips.emplace_back(blk + u, v, duv);
        trips.emplace_back(blk + v, u, duv);
        trips.emplace_back(u, blk + u, duu);
        trips.emplace_back(v, blk + v, dvv);
        trips.emplace_back(v, blk + u, duv);
        trips.emplace_back(u, blk + v, duv);
    }
    SparseMat A(dim, dim);
    A.setFromTriplets(trips.begin(), trips.end());

    AmplifiedOperator amp;
    amp.a_matrix = SparseSym(std::move(A), BasisTag::computational_ancilla);
    amp.penalty = std::sqrt(delta_bound);
    amp.ancilla_dim = q + 1;
    amp.base_dim = N;
    return amp;
}

AmplifiedOperator build_amplified(const StochasticMatrix& S, double delta_bound) {
    return build_amplified(transition_graph(S), delta_bound);
}

SparseSym AmplifiedOperator::h_tilde() const {
    SparseMat H = a_matrix.matrix();
    const Eigen::Index dim = H.rows();
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(dim - base_dim);
    for (Eigen::Index i = base_dim; i < dim; ++i) trips.emplace_back(i, i, penalty);
    SparseMat P(dim, dim);
    P.setFromTriplets(trips.begin(), trips.end());
    H += P;
    return SparseSym(std::move(H), BasisTag::computational_ancilla);
}

AmplifiedSpectrumReport verify_amplified_spectrum(const AmplifiedOperator& amp,
                                                  const Spectrum& base, double tol) {
    const Eigen::Index dim = amp.a_matrix.dim();
    if (dim > kDenseSpectrumGuard)
        throw guard_error("verify_amplified_spectrum: dense guard exceeded");
    const VectorXd spec_a =
        exact_spectrum_dense(amp.a_matrix.dense(), static_cast<int>(dim)).eigenvalues;
    const VectorXd spec_h =
        exact_spectrum_dense(amp.h_tilde().dense(), static_cast<int>(dim)).eigenvalues;

    auto nearest_dev = [](const VectorXd& sorted, double x) {
        const double* b = sorted.data();
        const double* e = b + sorted.size();
        const double* it = std::lower_bound(b, e, x);
        double d = std::numeric_limits<double>::infinity();
        if (it != e) d = std::min(d, std::abs(*it - x));
        if (it != b) d = std::min(d, std::abs(*(it - 1) - x));
        return d;
    };

    AmplifiedSpectrumReport rep;
    const double p = amp.penalty;
    for (Eigen::Index j = 0; j < base.eigenvalues.size(); ++j) {
        const double lam = base.eigenvalues(j);
        if (lam <= 1e-12) continue;
        const double r = std::sqrt(lam);
        rep.max_pair_dev = std::max({rep.max_pair_dev, nearest_dev(spec_a, r), nearest_dev(spec_a, -r)});
        const double disc = std::sqrt(p * p + 4.0 * lam);
        rep.max_block_dev = std::max({rep.max_block_dev, nearest_dev(spec_h, 0.5 * (p + disc)),
                                      nearest_dev(spec_h, 0.5 * (p - disc))});
    }
    rep.all_matched = rep.max_pair_dev <= tol && rep.max_block_dev <= tol;

    const double zero_tol = 1e-9;
    double gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < spec_h.size(); ++i) {
        const double m = std::abs(spec_h(i));
        if (m < zero_tol)
            ++rep.zero_multiplicity;
        else
            gap = std::min(gap, m);
    }
    rep.relevant_gap = gap;
    rep.ratio_to_sqrt_delta = gap / p;
    return rep;
}

double measure_relevant_gap(const AmplifiedOperator& amp, const VectorXd& sqrt_gibbs) {
    const Eigen::Index dim = amp.a_matrix.dim();
    const SparseSym ht = amp.h_tilde();
    if (dim <= 1100) {
        const VectorXd spec = exact_spectrum_dense(ht.dense(), static_cast<int>(dim)).eigenvalues;
        double gap = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < spec.size(); ++i)
            if (std::abs(spec(i)) >= 1e-9) gap = std::min(gap, std::abs(spec(i)));
        return gap;
    }
    // iterative route: smallest nonzero eigenvalue of h_tilde^2 after
    // deflating the analytically known null vector psi (x) |0>
    if (sqrt_gibbs.size() != amp.base_dim)
        throw schema_error("measure_relevant_gap: sqrt_gibbs dimension mismatch");
    VectorXd null_vec = VectorXd::Zero(dim);
    null_vec.head(amp.base_dim) = sqrt_gibbs / sqrt_gibbs.norm();
    const SparseMat& H = ht.matrix();
    auto mv = [&H](const VectorXd& v) { return VectorXd(H * (H * v).eval()); };
    LanczosOptions opts;
    opts.nev = 1;
    opts.tol = 1e-10;
    opts.max_basis = 80;
    LanczosResult r = lanczos_smallest(mv, dim, opts, {null_vec});
    return std::sqrt(std::max(0.0, r.values(0)));
}

GapScalingRow gap_scaling_point(const ObjectiveFunction& E, const StochasticMatrix& S) {
    GapScalingRow row;
    row.n = E.n();
    row.N = S.probs.rows();
    row.delta_beta = chain_spectrum(S, E).gap;
    AmplifiedOperator amp = build_amplified(S, row.delta_beta);
    const GibbsDistribution pi = gibbs(E, S.beta);
    row.amp_gap = measure_relevant_gap(amp, pi.probs.array().sqrt().matrix());
    row.ratio = row.amp_gap / std::sqrt(row.delta_beta);
    return row;
}

} // namespace annlab
