#include "annlab/ising.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace annlab {

namespace {

void check_enumerable(int n, const char* what) {
    if (n > kEnumerationGuard) {
        throw guard_error(std::string(what) + ": enumeration guard exceeded (n = " +
                          std::to_string(n) + " > " + std::to_string(kEnumerationGuard) + ")");
    }
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

ObjectiveFunction ObjectiveFunction::ising(const VectorXd& h, const MatrixXd& J) {
    const int n = static_cast<int>(h.size());
    if (n < 1) throw schema_error("build_ising: empty field vector");
    if (J.rows() != n || J.cols() != n) throw schema_error("build_ising: J dimension mismatch");
    for (int l = 0; l < n; ++l) {
        if (J(l, l) != 0.0) throw schema_error("build_ising: nonzero J diagonal");
        for (int lp = l + 1; lp < n; ++lp) {
            if (J(l, lp) != J(lp, l)) throw schema_error("build_ising: J not symmetric");
        }
    }
    ObjectiveFunction E;
    E.n_ = n;
    E.kind_ = Kind::ising;
    E.label_ = "ising";
    E.h_ = h;
    E.J_ = J;
    if (n <= kEnumerationGuard) {
        double m = 0.0;
        for (std::uint64_t i = 0; i < E.num_configs(); ++i) m = std::max(m, std::abs(E.energy(i)));
        E.e_max_ = m;
    } else {
        E.e_max_ = h.cwiseAbs().sum() + J.cwiseAbs().sum();
    }
    return E;
}

ObjectiveFunction ObjectiveFunction::custom(int n, std::function<double(std::uint64_t)> f,
                                            double e_max_hint, std::string label) {
    if (n < 1) throw schema_error("ObjectiveFunction: n must be positive");
    ObjectiveFunction E;
    E.n_ = n;
    E.kind_ = Kind::custom;
    E.label_ = std::move(label);
    E.f_ = std::move(f);
    if (e_max_hint >= 0.0) {
        E.e_max_ = e_max_hint;
    } else {
        check_enumerable(n, "ObjectiveFunction::custom");
        double m = 0.0;
        for (std::uint64_t i = 0; i < E.num_configs(); ++i) m = std::max(m, std::abs(E.f_(i)));
        E.e_max_ = m;
    }
    return E;
}

double ObjectiveFunction::energy(std::uint64_t idx) const {
    if (kind_ == Kind::custom) return f_(idx);
    double e = 0.0;
    for (int l = 0; l < n_; ++l) {
        const int sl = spin(idx, l);
        e += h_(l) * sl;
        for (int lp = l + 1; lp < n_; ++lp) e += 2.0 * J_(l, lp) * sl * spin(idx, lp);
    }
    return e;
}

double ObjectiveFunction::flip_diff(std::uint64_t idx, int l) const {
    if (l < 0 || l >= n_) throw schema_error("flip_diff: site out of range");
    if (kind_ == Kind::custom) return f_(idx) - f_(flip(idx, l));
    double field = h_(l);
    for (int lp = 0; lp < n_; ++lp) {
        if (lp != l) field += 2.0 * J_(l, lp) * spin(idx, lp);
    }
    return 2.0 * spin(idx, l) * field;
}

VectorXd ObjectiveFunction::energy_table() const {
    check_enumerable(n_, "energy_table");
    VectorXd t(num_configs());
    for (std::uint64_t i = 0; i < num_configs(); ++i) t(i) = energy(i);
    return t;
}

double ObjectiveFunction::kappa() const {
    if (kind_ == Kind::ising) {
        // The single-flip spread 2|h_l + 2 sum J s| is maximized by aligning
        // every neighbor spin with its coupling sign, so the bound is attained.
        double k = 0.0;
        for (int l = 0; l < n_; ++l) {
            double b = std::abs(h_(l));
            for (int lp = 0; lp < n_; ++lp)
                if (lp != l) b += 2.0 * std::abs(J_(l, lp));
            k = std::max(k, 2.0 * b);
        }
        return k;
    }
    check_enumerable(n_, "kappa");
    double k = 0.0;
    for (std::uint64_t i = 0; i < num_configs(); ++i)
        for (int l = 0; l < n_; ++l) k = std::max(k, std::abs(flip_diff(i, l)));
    return k;
}

const VectorXd& ObjectiveFunction::h() const {
    if (kind_ != Kind::ising) throw schema_error("h(): not an Ising instance");
    return h_;
}

const MatrixXd& ObjectiveFunction::J() const {
    if (kind_ != Kind::ising) throw schema_error("J(): not an Ising instance");
    return J_;
}

VectorXd site_energy_diff(const ObjectiveFunction& E, int l) {
    if (l < 0 || l >= E.n()) throw schema_error("site_energy_diff: site out of range");
    check_enumerable(E.n(), "site_energy_diff");
    VectorXd d(E.num_configs());
    for (std::uint64_t i = 0; i < E.num_configs(); ++i) d(i) = 0.5 * E.flip_diff(i, l);
    return d;
}

std::vector<std::uint64_t> brute_force_minima(const ObjectiveFunction& E) {
    check_enumerable(E.n(), "brute_force_minima");
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < E.num_configs(); ++i) {
        const double e = E.energy(i);
        if (e < best - 1e-12) {
            best = e;
            out.clear();
            out.push_back(i);
        } else if (e <= best + 1e-12) {
            out.push_back(i);
        }
    }
    return out;
}

std::string serialize_instance(const ObjectiveFunction& E) {
    if (E.kind() != ObjectiveFunction::Kind::ising)
        throw schema_error("serialize_instance: only Ising instances have a text form");
    std::ostringstream out;
    out << "# annlab instance v1\n";
    out << "kind ising\n";
    out << "n " << E.n() << "\n";
    out << "h";
    for (int l = 0; l < E.n(); ++l) out << " " << fmt17(E.h()(l));
    out << "\n";
    for (int l = 0; l < E.n(); ++l)
        for (int lp = l + 1; lp < E.n(); ++lp)
            if (E.J()(l, lp) != 0.0)
                out << "J " << l << " " << lp << " " << fmt17(E.J()(l, lp)) << "\n";
    return out.str();
}

ObjectiveFunction parse_instance(std::istream& in) {
    std::string line, kind;
    int n = -1;
    VectorXd h;
    std::vector<std::tuple<int, int, double>> js;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "kind") {
            ls >> kind;
        } else if (key == "n") {
            ls >> n;
            if (!ls || n < 1) throw schema_error("parse_instance: bad n");
        } else if (key == "h") {
            if (n < 1) throw schema_error("parse_instance: h before n");
            h.resize(n);
            for (int l = 0; l < n; ++l) {
                if (!(ls >> h(l))) throw schema_error("parse_instance: h length mismatch");
            }
        } else if (key == "J") {
            int l = -1, lp = -1;
            double v = 0.0;
            if (!(ls >> l >> lp >> v)) throw schema_error("parse_instance: bad J line");
            js.emplace_back(l, lp, v);
        } else {
            throw schema_error("parse_instance: unknown key '" + key + "'");
        }
    }
    if (kind != "ising") throw schema_error("parse_instance: unsupported kind '" + kind + "'");
    if (n < 1 || h.size() != n) throw schema_error("parse_instance: incomplete instance");
    MatrixXd J = MatrixXd::Zero(n, n);
    for (auto& [l, lp, v] : js) {
        if (l < 0 || lp < 0 || l >= n || lp >= n || l == lp)
            throw schema_error("parse_instance: J index out of range");
        J(l, lp) = v;
        J(lp, l) = v;
    }
    return ObjectiveFunction::ising(h, J);
}

ObjectiveFunction load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("load_instance: cannot open " + path);
    return parse_instance(in);
}

} // namespace annlab
