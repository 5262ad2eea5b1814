#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "annlab/errors.hpp"

namespace annlab {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Spin value of site l in configuration index idx. Bit 0 is site 0;
/// bit value 0 encodes spin +1, bit value 1 encodes spin -1.
inline int spin(std::uint64_t idx, int l) { return 1 - 2 * static_cast<int>((idx >> l) & 1ULL); }

/// Configuration index with spin l flipped.
inline std::uint64_t flip(std::uint64_t idx, int l) { return idx ^ (1ULL << l); }

/// Largest site count for which dense enumeration over all 2^n
/// configurations is allowed.
inline constexpr int kEnumerationGuard = 24;

/// Classical objective function E over n binary sites. Quadratic (Ising)
/// instances carry their couplings; other landscapes supply an evaluator.
///
/// Ising energies follow E(sigma) = sum_l h_l s_l + sum_{l<l'} 2 J_{ll'} s_l s_{l'}
/// with J stored symmetric and zero on the diagonal, so that the double-sum
/// form over ordered pairs is reproduced exactly.
class ObjectiveFunction {
  public:
    enum class Kind { ising, custom };

    static ObjectiveFunction ising(const VectorXd& h, const MatrixXd& J);

    /// Arbitrary landscape. e_max_hint, if nonnegative, is trusted as an
    /// upper bound on |E|; otherwise it is found by enumeration (guarded).
    static ObjectiveFunction custom(int n, std::function<double(std::uint64_t)> f,
                                    double e_max_hint = -1.0, std::string label = "custom");

    int n() const { return n_; }
    std::uint64_t num_configs() const { return 1ULL << n_; }
    Kind kind() const { return kind_; }
    const std::string& label() const { return label_; }

    double energy(std::uint64_t idx) const;

    /// E(sigma) - E(sigma with spin l flipped). O(n) for Ising instances.
    double flip_diff(std::uint64_t idx, int l) const;

    /// All N energies, index order. Guarded at n <= 24.
    VectorXd energy_table() const;

    /// Upper bound on |E|; exact maximum for enumerable instances.
    double e_max() const { return e_max_; }

    /// Maximum |E(sigma)-E(sigma')| over single-flip pairs. Exact for Ising
    /// instances (closed form) and for enumerable custom instances.
    double kappa() const;

    const VectorXd& h() const;
    const MatrixXd& J() const;

  private:
    ObjectiveFunction() = default;

    int n_ = 0;
    Kind kind_ = Kind::ising;
    std::string label_ = "ising";
    VectorXd h_;
    MatrixXd J_;
    std::function<double(std::uint64_t)> f_;
    double e_max_ = 0.0;
};

/// Diagonal of the single-site energy-difference operator at site l:
/// value at sigma is (E(sigma) - E(sigma^(l)))/2. Guarded at n <= 24.
VectorXd site_energy_diff(const ObjectiveFunction& E, int l);

/// Exact global minimizer set by enumeration, ascending index order.
std::vector<std::uint64_t> brute_force_minima(const ObjectiveFunction& E);

/// Structured-text instance serialization (deterministic round trip).
std::string serialize_instance(const ObjectiveFunction& E);
ObjectiveFunction parse_instance(std::istream& in);
ObjectiveFunction load_instance(const std::string& path);

} // namespace annlab
