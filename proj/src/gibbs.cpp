#include "annlab/gibbs.hpp"

#include <cmath>

namespace annlab {

GibbsDistribution gibbs(const ObjectiveFunction& E, double beta) {
    if (!std::isfinite(beta)) throw schema_error("gibbs: beta must be finite");
    const VectorXd energies = E.energy_table();
    const double m = (-beta * energies.array()).maxCoeff();
    VectorXd w = (-beta * energies.array() - m).exp();
    const double s = w.sum();
    GibbsDistribution pi;
    pi.beta = beta;
    pi.probs = w / s;
    pi.log_z = m + std::log(s);
    return pi;
}

double thermal_expectation(const VectorXd& A, const GibbsDistribution& pi) {
    if (A.size() != pi.probs.size()) throw schema_error("thermal_expectation: dimension mismatch");
    return A.dot(pi.probs);
}

} // namespace annlab
