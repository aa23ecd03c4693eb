#ifndef KPRAB_INEQUALITY_HPP
#define KPRAB_INEQUALITY_HPP

#include "kprab/green.hpp"

#include <utility>

namespace kprab {

enum class Verdict {
    NecessaryConditionHolds,
    NoNontrivialSolutionCertified,
};

// Hartman-Wintner check: lhs = integral_a^b G(b,s) |q(s)| ds, rhs = 1/C.
// margin < 0 certifies that only the trivial solution exists.
struct InequalityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    Verdict verdict = Verdict::NecessaryConditionHolds;
};

double hw_lhs(const PotentialSpec& q, const BVPConfig& cfg,
              const QuadratureRule& rule = {});

InequalityReport hw_check(const PotentialSpec& q, const BVPConfig& cfg,
                          const QuadratureRule& rule = {});

// Classical Riemann-Liouville Hartman-Wintner bound for the same boundary
// conditions: (1 + coupling (b-a)^{order-1} / ((order-1)(b-a)^{order-2}
// - coupling (xi-a)^{order-1}))^{-1} Gamma(order).
double cabrera_rhs(double order, double a, double b, double xi,
                   double coupling);

// (integral (b-s)(s-a) q+(s) ds, integral |q(s)| ds) for comparison with
// the thresholds (b-a) and 4/(b-a).
std::pair<double, double> classical_bounds(double a, double b,
                                           const PotentialSpec& q);

} // namespace kprab

#endif
