#ifndef KPRAB_OPERATORS_HPP
#define KPRAB_OPERATORS_HPP

#include "kprab/special.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace kprab {

enum class QuadScheme {
    GradedMesh,     // composite Gauss panels graded toward the singular end
    JacobiEndpoint, // global Gauss-Jacobi rule absorbing the power weight
};

struct QuadratureRule {
    QuadScheme scheme = QuadScheme::GradedMesh;
    int n_panels = 32;
    double grading = 0.0;  // <= 0: pick max(1, 2/(beta_eff/k)) automatically
    double rel_tol = 1e-8; // refinement acceptance threshold
    int max_refine = 6;    // 0 disables refinement (fixed-mesh evaluation)
};

// Sampled function on strictly increasing nodes; evaluation is linear
// interpolation, constant extrapolation outside the node range.
struct GridFunction {
    std::vector<double> nodes;
    std::vector<double> values;

    GridFunction() = default;
    GridFunction(std::vector<double> n, std::vector<double> v);

    double operator()(double t) const;
};

using RealFn = std::function<double(double)>;

// Prabhakar kernel of the integral operator:
//   t^{(beta - shift*k)/k - 1}/k * E^gamma_{k,rho,beta-shift*k}(omega t^{rho/k})
// for t > 0, and 0 for t <= 0.
double kernel_eval(double t, const MLParams& p, int shift = 0);

// j-th derivative of x^{beta/k-1} E^gamma_{k,rho,beta}(omega x^{rho/k})
// via the closed form x^{beta/k-(j+1)}/k^j E^gamma_{k,rho,beta-jk}(...).
// Note the j = 0 case equals k * kernel_eval(x, p, 0).
double kernel_jet(double x, const MLParams& p, int j);

// Left-sided k-Prabhakar integral based at a, evaluated at x >= a:
//   integral_a^x (x-t)^{beta/k-1}/k E^gamma_{k,rho,beta}(omega (x-t)^{rho/k}) f(t) dt
double prabhakar_integral(const RealFn& f, double a, double x,
                          const MLParams& p, const QuadratureRule& rule = {});

// Number of ordinary derivatives in the k-Prabhakar derivative,
// m = floor(beta/k) + 1.
int derivative_order(const MLParams& p);

// k-Prabhakar derivative at x, interior to [a, b]: m-th central finite
// difference (with Richardson extrapolation at h and h/2) of
//   g(y) = k^m (P^{-gamma}_{rho, mk-beta, omega, a+} f)(y).
// h <= 0 selects the default (b-a)*1e-3.
double prabhakar_derivative(const RealFn& f, double x, double a, double b,
                            const MLParams& p, const QuadratureRule& rule = {},
                            double h = 0.0);

namespace detail {

// Nodes/weights of the n-point Gauss-Jacobi rule on [-1,1] with weight
// (1-x)^alpha; alpha = 0 reduces to Gauss-Legendre.
std::pair<std::vector<double>, std::vector<double>> gauss_jacobi(int n,
                                                                 double alpha);

// integral_lo^hi w(t) f(t, u) dt where w(t) = u^p, u = hi - t (singular end
// at hi), on a graded composite Gauss mesh; p > -1. The distance u is
// propagated exactly so integrands can form u^q without cancellation.
using WeightedFn = std::function<double(double, double)>;
double graded_integrate(const WeightedFn& f, double lo, double hi, double p,
                        double grading, int n_panels);

} // namespace detail

} // namespace kprab

#endif
