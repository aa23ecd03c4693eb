#ifndef KPRAB_SOLVER_HPP
#define KPRAB_SOLVER_HPP

#include "kprab/green.hpp"

#include <vector>

namespace kprab {

// Nystrom discretization of the integral-equation representation:
// matrix entries K[i][j] = H(t_i, s_j) q(s_j) w_j with
// H(t,s) = G(t,s) + A(t) G(xi,s) and A(t) the nonlocal prefactor.
// Collocation points and quadrature nodes coincide (square Nystrom).
struct NystromOperator {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> matrix; // row-major, n x n
    int n = 0;

    double at(int i, int j) const { return matrix[static_cast<std::size_t>(i) * n + j]; }
};

struct SpectralResult {
    double dominant_eigenvalue = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

struct SolutionCheck {
    bool nontrivial = false;
    double margin = 0.0; // sigma_min(I - K) / ||K||_F
};

NystromOperator build_operator(const BVPConfig& cfg, const PotentialSpec& q,
                               int n);

// Dominant eigenvalue by power iteration; throws SpectralFailure when the
// residual fails to reach tol (e.g. an oscillating dominant pair).
SpectralResult power_iteration(const NystromOperator& op, double tol = 1e-10,
                               int max_iter = 20000);

// True when I - K is singular to within tol (smallest singular value
// <= tol * ||K||_F), i.e. the discretized problem admits a nontrivial
// solution.
SolutionCheck has_nontrivial_solution(const BVPConfig& cfg,
                                      const PotentialSpec& q, int n,
                                      double tol);

// Critical constant potential: lambda* = 1/mu_max for the q == 1 operator.
double critical_lambda(const BVPConfig& cfg, int n);

} // namespace kprab

#endif
