#include "kprab/operators.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

namespace kprab {

namespace {

// 4-point Gauss-Legendre on [-1,1]
const double kGL4Nodes[4] = {-0.8611363115940526, -0.3399810435848563,
                             0.3399810435848563, 0.8611363115940526};
const double kGL4Weights[4] = {0.3478548451374538, 0.6521451548625461,
                               0.6521451548625461, 0.3478548451374538};

double binom(int n, int i) {
    double c = 1.0;
    for (int j = 0; j < i; ++j)
        c = c * (n - j) / (j + 1);
    return c;
}

double default_grading(double beta_eff_over_k) {
    return std::max(1.0, 2.0 / beta_eff_over_k);
}

} // namespace

GridFunction::GridFunction(std::vector<double> n, std::vector<double> v)
    : nodes(std::move(n)), values(std::move(v)) {
    if (nodes.size() != values.size())
        throw DomainError("GridFunction: node/value lengths differ");
    if (nodes.empty())
        throw DomainError("GridFunction: empty");
    for (std::size_t i = 1; i < nodes.size(); ++i)
        if (!(nodes[i] > nodes[i - 1]))
            throw DomainError("GridFunction: nodes must be strictly increasing");
}

double GridFunction::operator()(double t) const {
    if (t <= nodes.front())
        return values.front();
    if (t >= nodes.back())
        return values.back();
    auto it = std::upper_bound(nodes.begin(), nodes.end(), t);
    std::size_t i = static_cast<std::size_t>(it - nodes.begin());
    double w = (t - nodes[i - 1]) / (nodes[i] - nodes[i - 1]);
    return (1.0 - w) * values[i - 1] + w * values[i];
}

double kernel_eval(double t, const MLParams& p, int shift) {
    if (t <= 0.0)
        return 0.0;
    MLParams q = p.with_beta_shift(shift);
    double z = p.omega * std::pow(t, p.rho / p.k);
    return std::pow(t, q.beta / p.k - 1.0) / p.k * ml_k_value(z, q);
}

double kernel_jet(double x, const MLParams& p, int j) {
    if (!(x > 0.0))
        throw DomainError("kernel_jet: x must be positive");
    if (j < 0)
        throw DomainError("kernel_jet: j must be nonnegative");
    MLParams q = p.with_beta_shift(j);
    double z = p.omega * std::pow(x, p.rho / p.k);
    return std::pow(x, p.beta / p.k - (j + 1.0)) / std::pow(p.k, j) *
           ml_k_value(z, q);
}

namespace detail {

std::pair<std::vector<double>, std::vector<double>> gauss_jacobi(int n,
                                                                 double alpha) {
    if (n < 1)
        throw DomainError("gauss_jacobi: n must be positive");
    if (!(alpha > -1.0))
        throw DomainError("gauss_jacobi: alpha must exceed -1");
    // gsl weight convention: (b-x)^alpha (x-a)^beta on [a,b]
    gsl_integration_fixed_workspace* ws = gsl_integration_fixed_alloc(
        gsl_integration_fixed_jacobi, static_cast<std::size_t>(n), -1.0, 1.0,
        alpha, 0.0);
    if (!ws)
        throw QuadratureError("gauss_jacobi: workspace allocation failed");
    std::vector<double> x(gsl_integration_fixed_nodes(ws),
                          gsl_integration_fixed_nodes(ws) + n);
    std::vector<double> w(gsl_integration_fixed_weights(ws),
                          gsl_integration_fixed_weights(ws) + n);
    gsl_integration_fixed_free(ws);
    return {std::move(x), std::move(w)};
}

double graded_integrate(const WeightedFn& f, double lo, double hi, double p,
                        double grading, int n_panels) {
    double len = hi - lo;
    if (len <= 0.0)
        return 0.0;
    double sum = 0.0;
    // panel boundaries measured as distance u from the singular end t = hi;
    // staying in u-space avoids cancellation in hi - t on the tiny panels
    for (int j = n_panels - 1; j >= 0; --j) {
        double d0 = len * std::pow(static_cast<double>(j) / n_panels, grading);
        double d1 =
            len * std::pow(static_cast<double>(j + 1) / n_panels, grading);
        double c = 0.5 * (d0 + d1);
        double r = 0.5 * (d1 - d0);
        if (r <= 0.0)
            continue;
        double acc = 0.0;
        for (int q = 0; q < 4; ++q) {
            double u = c - r * kGL4Nodes[q];
            if (!(u > 0.0))
                continue;
            acc += kGL4Weights[q] * std::pow(u, p) * f(hi - u, u);
        }
        sum += acc * r;
    }
    return sum;
}

} // namespace detail

double prabhakar_integral(const RealFn& f, double a, double x,
                          const MLParams& p, const QuadratureRule& rule) {
    if (!(p.k > 0.0) || !(p.rho > 0.0))
        throw DomainError("prabhakar_integral: k and rho must be positive");
    if (x < a)
        throw DomainError("prabhakar_integral: x must satisfy x >= a");
    if (x == a)
        return 0.0;

    double p_exp = p.beta / p.k - 1.0;
    if (!(p_exp > -1.0))
        throw DomainError("prabhakar_integral: beta/k must be positive");
    MLParams mp = p;
    auto smooth = [&](double t, double u) {
        double z = p.omega * std::pow(u, p.rho / p.k);
        return ml_k_value(z, mp) * f(t) / p.k;
    };

    auto evaluate = [&](int n) -> double {
        if (rule.scheme == QuadScheme::JacobiEndpoint) {
            auto [u, w] = detail::gauss_jacobi(4 * n, p_exp);
            double half = 0.5 * (x - a);
            double scale = std::pow(half, p_exp + 1.0);
            double s = 0.0;
            for (std::size_t i = 0; i < u.size(); ++i) {
                double t = a + half * (u[i] + 1.0);
                s += w[i] * smooth(t, half * (1.0 - u[i]));
            }
            return scale * s;
        }
        double g = rule.grading > 0.0 ? rule.grading
                                      : default_grading(p.beta / p.k);
        return detail::graded_integrate(smooth, a, x, p_exp, g, n);
    };

    int n = std::max(rule.n_panels, 1);
    if (rule.max_refine <= 0)
        return evaluate(n);

    // doubling with Richardson acceleration of the leading n^-2 error
    double prev_q = evaluate(n);
    double prev_r = prev_q;
    for (int r = 0; r < rule.max_refine; ++r) {
        n *= 2;
        double q = evaluate(n);
        double rich = q + (q - prev_q) / 3.0;
        double diff = std::abs(rich - prev_r);
        if (diff <= rule.rel_tol * std::max(std::abs(rich), std::abs(prev_r)) ||
            diff == 0.0)
            return rich;
        prev_q = q;
        prev_r = rich;
    }
    std::ostringstream os;
    os << "prabhakar_integral: panel doubling did not settle within rel_tol="
       << rule.rel_tol << " at " << n << " panels";
    throw QuadratureError(os.str());
}

int derivative_order(const MLParams& p) {
    if (!(p.k > 0.0))
        throw DomainError("derivative_order: k must be positive");
    return static_cast<int>(std::floor(p.beta / p.k)) + 1;
}

double prabhakar_derivative(const RealFn& f, double x, double a, double b,
                            const MLParams& p, const QuadratureRule& rule,
                            double h) {
    int m = derivative_order(p);
    double hh = h > 0.0 ? h : (b - a) * 1e-3;
    if (x - m * hh < a || x + m * hh > b)
        throw DomainError("prabhakar_derivative: stencil leaves [a, b]");

    MLParams inner = p;
    inner.beta = m * p.k - p.beta;
    inner.gamma_p = -p.gamma_p;

    // Fixed mesh for the pre-integration: refinement switches would put
    // discontinuities into g(y) that the difference stencil amplifies.
    QuadratureRule fixed = rule;
    fixed.max_refine = 0;
    fixed.n_panels = std::max(rule.n_panels, 128);

    double km = std::pow(p.k, m);
    auto g = [&](double y) {
        return km * prabhakar_integral(f, a, y, inner, fixed);
    };
    auto central = [&](double step) {
        double s = 0.0;
        for (int i = 0; i <= m; ++i) {
            double sign = (i % 2 == 0) ? 1.0 : -1.0;
            s += sign * binom(m, i) * g(x + (m / 2.0 - i) * step);
        }
        return s / std::pow(step, m);
    };
    return (4.0 * central(hh / 2.0) - central(hh)) / 3.0;
}

} // namespace kprab
