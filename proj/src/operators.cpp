#include "annlab/operators.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace annlab {

std::string to_string(BasisTag tag) {
    switch (tag) {
        case BasisTag::computational: return "computational";
        case BasisTag::computational_ancilla: return "computational_ancilla";
        case BasisTag::column: return "column";
    }
    return "?";
}

BasisTag basis_tag_from_string(const std::string& s) {
    if (s == "computational") return BasisTag::computational;
    if (s == "computational_ancilla") return BasisTag::computational_ancilla;
    if (s == "column") return BasisTag::column;
    throw schema_error("unknown basis tag '" + s + "'");
}

SparseSym::SparseSym(SparseMat m, BasisTag tag, double sym_tol) : mat_(std::move(m)), tag_(tag) {
    if (mat_.rows() != mat_.cols()) throw schema_error("SparseSym: matrix not square");
    mat_.makeCompressed();
    SparseMat diff = SparseMat(mat_.transpose()) - mat_;
    double asym = 0.0;
    for (int k = 0; k < diff.outerSize(); ++k)
        for (SparseMat::InnerIterator it(diff, k); it; ++it) asym = std::max(asym, std::abs(it.value()));
    if (asym > sym_tol)
        throw schema_error("SparseSym: matrix not symmetric (max asymmetry " + std::to_string(asym) + ")");
}

VectorXcd SparseSym::apply(const VectorXcd& v) const {
    VectorXcd out(v.size());
    out.real() = mat_ * v.real().eval();
    out.imag() = mat_ * v.imag().eval();
    return out;
}

void StateVector::check_normalized(double tol) const {
    if (std::abs(norm() - 1.0) > tol)
        throw numerical_error("StateVector: norm deviates from 1 by " + std::to_string(std::abs(norm() - 1.0)));
}

double fidelity(const VectorXcd& a, const VectorXcd& b) {
    if (a.size() != b.size()) throw schema_error("fidelity: dimension mismatch");
    return std::norm(a.dot(b));
}

double fidelity(const StateVector& a, const StateVector& b) {
    if (a.basis_tag != b.basis_tag) throw schema_error("fidelity: basis mismatch");
    return fidelity(a.amplitudes, b.amplitudes);
}

void dump_operator(const SparseSym& op, std::ostream& out) {
    out << "# annlab operator v1\n";
    out << "dim " << op.dim() << "\n";
    out << "basis " << to_string(op.basis_tag()) << "\n";
    char buf[40];
    const SparseMat& m = op.matrix();
    for (int k = 0; k < m.outerSize(); ++k) {
        for (SparseMat::InnerIterator it(m, k); it; ++it) {
            if (it.row() < it.col()) continue; // lower triangle carries the data
            std::snprintf(buf, sizeof(buf), "%.17g", it.value());
            out << it.row() << " " << it.col() << " " << buf << " 0\n";
        }
    }
}

SparseSym load_operator(std::istream& in) {
    std::string line;
    Eigen::Index dim = -1;
    BasisTag tag = BasisTag::computational;
    std::vector<Eigen::Triplet<double>> trips;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string first;
        ls >> first;
        if (first == "dim") {
            ls >> dim;
        } else if (first == "basis") {
            std::string s;
            ls >> s;
            tag = basis_tag_from_string(s);
        } else {
            const Eigen::Index r = std::stoll(first);
            Eigen::Index c;
            double re, im;
            if (!(ls >> c >> re >> im)) throw schema_error("load_operator: bad entry line");
            if (im != 0.0) throw schema_error("load_operator: nonzero imaginary part");
            trips.emplace_back(r, c, re);
            if (r != c) trips.emplace_back(c, r, re);
        }
    }
    if (dim < 1) throw schema_error("load_operator: missing dim header");
    SparseMat m(dim, dim);
    m.setFromTriplets(trips.begin(), trips.end());
    return SparseSym(std::move(m), tag);
}

} // namespace annlab
