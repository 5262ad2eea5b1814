#pragma once

#include <string>
#include <vector>

#include "annlab/errors.hpp"

namespace annlab {

/// Time-parametrized control path over [0, T].
class Schedule {
  public:
    enum class Kind { sa_log, eqa_power, linear, custom };

    /// beta(t) = c log(1 + t)/n.
    static Schedule sa_log(double c, int n, double total_time);

    /// gamma(t) = c (t + t0)^{-1/(2n-1)} with both endpoints pinned:
    /// gamma(0) = gamma0 and gamma(T) = chi exactly. Requires gamma0 > chi > 0.
    static Schedule eqa_power(double gamma0, double chi, int n, double total_time);

    static Schedule linear(double from, double to, double total_time);

    /// Piecewise-linear interpolation of (t, value) samples (t ascending).
    static Schedule custom(std::vector<std::pair<double, double>> samples);

    double value(double t) const;
    double total_time() const { return total_time_; }
    Kind kind() const { return kind_; }
    std::string kind_name() const;
    bool nondecreasing() const;

  private:
    Kind kind_ = Kind::linear;
    double total_time_ = 0.0;
    double c_ = 0.0, t0_ = 0.0, exponent_ = 0.0; // eqa_power / sa_log parameters
    int n_ = 1;
    double from_ = 0.0, to_ = 0.0;
    std::vector<std::pair<double, double>> samples_;
};

} // namespace annlab
