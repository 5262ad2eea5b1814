#include "annlab/problems.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>

#include "annlab/evolve.hpp"
#include "annlab/rng.hpp"

#include <nlohmann/json.hpp>

namespace annlab {

ObjectiveFunction grover_objective(const GroverInstance& inst) {
    if (inst.n < 1) throw schema_error("grover_objective: n must be positive");
    if (inst.marked >= (1ULL << inst.n)) throw schema_error("grover_objective: marked out of range");
    if (inst.sign != 1 && inst.sign != -1) throw schema_error("grover_objective: sign must be +-1");
    const std::uint64_t marked = inst.marked;
    const double val = static_cast<double>(inst.sign);
    return ObjectiveFunction::custom(
        inst.n, [marked, val](std::uint64_t z) { return z == marked ? val : 0.0; }, 1.0,
        inst.sign < 0 ? "grover-min" : "grover");
}

StochasticMatrix grover_sa_chain(const GroverInstance& inst, double beta) {
    if (beta < 0.0) throw schema_error("grover_sa_chain: beta must be nonnegative");
    if (inst.n > 12) throw guard_error("grover_sa_chain: complete-graph guard n <= 12");
    const ObjectiveFunction E = grover_objective(inst);
    const auto N = static_cast<Eigen::Index>(E.num_configs());
    const double inv = 1.0 / static_cast<double>(N);

    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(N) * N);
    for (Eigen::Index j = 0; j < N; ++j) {
        const double ej = E.energy(static_cast<std::uint64_t>(j));
        double off = 0.0;
        for (Eigen::Index i = 0; i < N; ++i) {
            if (i == j) continue;
            const double de = E.energy(static_cast<std::uint64_t>(i)) - ej;
            const double p = inv * std::min(1.0, std::exp(-beta * de));
            trips.emplace_back(i, j, p);
            off += p;
        }
        trips.emplace_back(j, j, 1.0 - off);
    }
    StochasticMatrix S;
    S.beta = beta;
    S.probs.resize(N, N);
    S.probs.setFromTriplets(trips.begin(), trips.end());
    S.chi = inv;
    S.kappa = 1.0;
    S.neighborhood = MoveStructure::complete_graph;
    return S;
}

std::string serialize_grover(const GroverInstance& inst) {
    nlohmann::json j;
    j["n"] = inst.n;
    j["marked"] = inst.marked;
    j["sign"] = inst.sign;
    return j.dump();
}

GroverInstance parse_grover(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    GroverInstance inst;
    inst.n = j.at("n").get<int>();
    inst.marked = j.at("marked").get<std::uint64_t>();
    inst.sign = j.value("sign", -1);
    if (inst.n < 1 || inst.marked >= (1ULL << inst.n))
        throw schema_error("parse_grover: invalid instance");
    return inst;
}

long Max2SatInstance::f(std::uint64_t z) const {
    long sat = 0;
    for (const auto& c : clauses) {
        bool ok = false;
        for (int k = 0; k < c.size; ++k) {
            const int lit = c.lit[k];
            const int var = std::abs(lit) - 1;
            const bool val = (z >> var) & 1ULL;
            if ((lit > 0) == val) {
                ok = true;
                break;
            }
        }
        sat += ok ? 1 : 0;
    }
    return sat;
}

Max2SatInstance parse_dimacs(std::istream& in) {
    Max2SatInstance inst;
    std::string line;
    long expected = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            ls >> p >> fmt >> inst.n >> expected;
            if (fmt != "cnf" || inst.n < 1) throw schema_error("parse_dimacs: bad problem line");
            continue;
        }
        Clause c;
        int lit;
        while (ls >> lit && lit != 0) {
            if (c.size >= 2) throw schema_error("parse_dimacs: clause with more than two literals");
            if (std::abs(lit) > inst.n) throw schema_error("parse_dimacs: literal out of range");
            c.lit[c.size++] = lit;
        }
        if (c.size == 2 && std::abs(c.lit[0]) == std::abs(c.lit[1]))
            throw schema_error("parse_dimacs: repeated variable in a clause");
        if (c.size > 0) inst.clauses.push_back(c);
    }
    if (inst.n == 0) throw schema_error("parse_dimacs: missing problem line");
    if (expected >= 0 && expected != static_cast<long>(inst.clauses.size()))
        throw schema_error("parse_dimacs: clause count mismatch");
    return inst;
}

Max2SatInstance load_dimacs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("load_dimacs: cannot open " + path);
    return parse_dimacs(in);
}

std::string serialize_dimacs(const Max2SatInstance& inst) {
    std::ostringstream out;
    out << "p cnf " << inst.n << " " << inst.clauses.size() << "\n";
    for (const auto& c : inst.clauses) {
        for (int k = 0; k < c.size; ++k) out << c.lit[k] << " ";
        out << "0\n";
    }
    return out.str();
}

Max2SatInstance random_max2sat(int n, int m, std::uint64_t seed) {
    if (n < 2 || m < 1) throw schema_error("random_max2sat: need n >= 2, m >= 1");
    CounterRng rng(seed, 0x25a7);
    Max2SatInstance inst;
    inst.n = n;
    for (int i = 0; i < m; ++i) {
        Clause c;
        const int a = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
        int b = a;
        while (b == a) b = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
        c.lit[0] = (a + 1) * (rng.uniform01() < 0.5 ? 1 : -1);
        c.lit[1] = (b + 1) * (rng.uniform01() < 0.5 ? 1 : -1);
        c.size = 2;
        inst.clauses.push_back(c);
    }
    return inst;
}

std::pair<SparseSym, SparseSym> max2sat_hamiltonians(const Max2SatInstance& inst) {
    if (inst.n > kMatrixGuard) throw guard_error("max2sat_hamiltonians: matrix guard exceeded");
    const auto N = static_cast<Eigen::Index>(1ULL << inst.n);
    std::vector<Eigen::Triplet<double>> tb, tp;
    tb.reserve(static_cast<std::size_t>(N) * (inst.n + 1));
    tp.reserve(static_cast<std::size_t>(N));
    const double half_n = 0.5 * inst.n;
    for (Eigen::Index z = 0; z < N; ++z) {
        tb.emplace_back(z, z, -half_n);
        for (int l = 0; l < inst.n; ++l)
            tb.emplace_back(static_cast<Eigen::Index>(z) ^ (1LL << l), z, 0.5);
        const long fz = inst.f(static_cast<std::uint64_t>(z));
        if (fz != 0) tp.emplace_back(z, z, -static_cast<double>(fz));
    }
    SparseMat HB(N, N), HP(N, N);
    HB.setFromTriplets(tb.begin(), tb.end());
    HP.setFromTriplets(tp.begin(), tp.end());
    return {SparseSym(std::move(HB), BasisTag::computational),
            SparseSym(std::move(HP), BasisTag::computational)};
}

Max2SatSweepResult diabatic_max2sat_run(const Max2SatInstance& inst,
                                        const std::vector<double>& times, double dt) {
    if (inst.n > 12) throw guard_error("diabatic_max2sat_run: guard n <= 12");
    if (times.empty()) throw schema_error("diabatic_max2sat_run: empty time grid");
    auto [HB, HP] = max2sat_hamiltonians(inst);
    const auto N = static_cast<Eigen::Index>(1ULL << inst.n);

    Max2SatSweepResult out;
    out.best_f = 0;
    for (Eigen::Index z = 0; z < N; ++z) out.best_f = std::max(out.best_f, inst.f(z));
    std::vector<Eigen::Index> optima;
    for (Eigen::Index z = 0; z < N; ++z)
        if (inst.f(z) == out.best_f) optima.push_back(z);
    out.optimum_count = static_cast<long>(optima.size());

    // ground state of H_B: product of single-site (|0> - |1>)/sqrt(2)
    VectorXcd psi0(N);
    const double amp = 1.0 / std::sqrt(static_cast<double>(N));
    for (Eigen::Index z = 0; z < N; ++z)
        psi0(z) = (std::popcount(static_cast<std::uint64_t>(z)) % 2 == 0) ? amp : -amp;

    const SparseMat& B = HB.matrix();
    const SparseMat& P = HP.matrix();
    for (double T : times) {
        StateVector psi;
        psi.amplitudes = psi0;
        psi.basis_tag = BasisTag::computational;
        auto path = [&](double s) {
            SparseMat H = (1.0 - s) * B + s * P;
            return SparseSym(std::move(H), BasisTag::computational);
        };
        EvolutionResult r = evolve(path, Schedule::linear(0.0, 1.0, T), psi, DtPolicy{dt});
        double succ = 0.0;
        for (Eigen::Index z : optima) succ += std::norm(r.final_state.amplitudes(z));
        out.points.push_back({T, succ});
    }
    for (std::size_t i = 0; i + 1 < out.points.size(); ++i)
        for (std::size_t j = i + 1; j < out.points.size(); ++j)
            if (out.points[i].success > out.points[j].success + 0.02) out.non_monotone = true;
    return out;
}

} // namespace annlab
