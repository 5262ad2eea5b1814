#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>
#include <iosfwd>
#include <optional>
#include <string>

#include "annlab/errors.hpp"

namespace annlab {

using Eigen::VectorXcd;
using SparseMat = Eigen::SparseMatrix<double>;

/// Basis label carried by operators and states.
enum class BasisTag { computational, computational_ancilla, column };

std::string to_string(BasisTag tag);
BasisTag basis_tag_from_string(const std::string& s);

/// Sparse real-symmetric operator (all operators in this laboratory are
/// real in their natural basis). Hermiticity is validated on construction.
class SparseSym {
  public:
    SparseSym() = default;
    SparseSym(SparseMat m, BasisTag tag, double sym_tol = 1e-14);

    Eigen::Index dim() const { return mat_.rows(); }
    BasisTag basis_tag() const { return tag_; }
    const SparseMat& matrix() const { return mat_; }

    Eigen::VectorXd apply(const Eigen::VectorXd& v) const { return mat_ * v; }
    VectorXcd apply(const VectorXcd& v) const;

    Eigen::MatrixXd dense() const { return Eigen::MatrixXd(mat_); }

  private:
    SparseMat mat_;
    BasisTag tag_ = BasisTag::computational;
};

/// Normalized complex state over a labeled basis.
struct StateVector {
    VectorXcd amplitudes;
    BasisTag basis_tag = BasisTag::computational;

    double norm() const { return amplitudes.norm(); }
    void check_normalized(double tol = 1e-9) const;
};

/// |<a|b>|^2 for states over the same basis.
double fidelity(const StateVector& a, const StateVector& b);
double fidelity(const VectorXcd& a, const VectorXcd& b);

/// Sorted ascending eigenvalues; gap() is the difference of the two lowest.
struct Spectrum {
    Eigen::VectorXd eigenvalues;
    std::optional<Eigen::MatrixXd> eigenvectors; // columns, aligned with eigenvalues

    double gap() const {
        if (eigenvalues.size() < 2) throw numerical_error("Spectrum::gap: fewer than 2 values");
        return eigenvalues(1) - eigenvalues(0);
    }
};

/// Coordinate-list text dump with {dim, basis_tag} header. Lower triangle
/// only; imaginary column kept for format stability (always zero here).
void dump_operator(const SparseSym& op, std::ostream& out);
SparseSym load_operator(std::istream& in);

} // namespace annlab
