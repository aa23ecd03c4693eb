#include "kprab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kprab {

namespace {

// LU with partial pivoting; returns false on a (numerically) zero pivot.
bool lu_factor(std::vector<double>& m, std::vector<int>& piv, int n) {
    piv.resize(n);
    std::iota(piv.begin(), piv.end(), 0);
    for (int c = 0; c < n; ++c) {
        int best = c;
        double bv = std::abs(m[static_cast<std::size_t>(c) * n + c]);
        for (int r = c + 1; r < n; ++r) {
            double v = std::abs(m[static_cast<std::size_t>(r) * n + c]);
            if (v > bv) {
                bv = v;
                best = r;
            }
        }
        if (bv < 1e-300)
            return false;
        if (best != c) {
            for (int j = 0; j < n; ++j)
                std::swap(m[static_cast<std::size_t>(c) * n + j],
                          m[static_cast<std::size_t>(best) * n + j]);
            std::swap(piv[c], piv[best]);
        }
        double d = m[static_cast<std::size_t>(c) * n + c];
        for (int r = c + 1; r < n; ++r) {
            double f = m[static_cast<std::size_t>(r) * n + c] / d;
            m[static_cast<std::size_t>(r) * n + c] = f;
            for (int j = c + 1; j < n; ++j)
                m[static_cast<std::size_t>(r) * n + j] -=
                    f * m[static_cast<std::size_t>(c) * n + j];
        }
    }
    return true;
}

void lu_solve(const std::vector<double>& lu, const std::vector<int>& piv,
              int n, const std::vector<double>& b, std::vector<double>& x) {
    x.resize(n);
    for (int i = 0; i < n; ++i)
        x[i] = b[piv[i]];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            x[i] -= lu[static_cast<std::size_t>(i) * n + j] * x[j];
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j)
            x[i] -= lu[static_cast<std::size_t>(i) * n + j] * x[j];
        x[i] /= lu[static_cast<std::size_t>(i) * n + i];
    }
}

// Solve A^T y = b given PA = LU, i.e. U^T L^T P y = b.
void lu_solve_transpose(const std::vector<double>& lu,
                        const std::vector<int>& piv, int n,
                        const std::vector<double>& b, std::vector<double>& y) {
    std::vector<double> z(b);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j)
            z[i] -= lu[static_cast<std::size_t>(j) * n + i] * z[j];
        z[i] /= lu[static_cast<std::size_t>(i) * n + i];
    }
    for (int i = n - 1; i >= 0; --i)
        for (int j = i + 1; j < n; ++j)
            z[i] -= lu[static_cast<std::size_t>(j) * n + i] * z[j];
    y.assign(n, 0.0);
    for (int i = 0; i < n; ++i)
        y[piv[i]] = z[i];
}

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v)
        s += x * x;
    return std::sqrt(s);
}

double frobenius(const NystromOperator& op) {
    double s = 0.0;
    for (double x : op.matrix)
        s += x * x;
    return std::sqrt(s);
}

} // namespace

NystromOperator build_operator(const BVPConfig& cfg, const PotentialSpec& q,
                               int n) {
    if (n < 8)
        throw DomainError("build_operator: n must be at least 8");
    cfg.validate();
    const MLParams& p = cfg.params;
    double ord = p.beta / p.k;
    double grading = std::max(1.0, 2.0 / (ord - 1.0));

    NystromOperator op;
    op.n = n;
    op.nodes.resize(n);
    op.weights.assign(n, 0.0);
    // nodes graded toward s = b where (b-s)^{beta/k-2} loses smoothness
    for (int i = 0; i < n; ++i) {
        double u = 1.0 - static_cast<double>(i) / (n - 1);
        op.nodes[i] = cfg.b - (cfg.b - cfg.a) * std::pow(u, grading);
    }
    op.nodes.front() = cfg.a;
    op.nodes.back() = cfg.b;
    for (int i = 0; i < n; ++i) {
        double left = (i == 0) ? op.nodes[0] : op.nodes[i - 1];
        double right = (i == n - 1) ? op.nodes[n - 1] : op.nodes[i + 1];
        op.weights[i] = 0.5 * (right - left);
    }

    double delta = denominator(cfg);
    auto prefactor = [&](double t) {
        if (t <= cfg.a)
            return 0.0;
        MLParams base = p;
        double z = p.omega * std::pow(t - cfg.a, p.rho / p.k);
        return cfg.eta * std::pow(t - cfg.a, ord - 1.0) *
               ml_k_value(z, base) / delta;
    };

    std::vector<double> gxi(n);
    for (int j = 0; j < n; ++j)
        gxi[j] = green_value(cfg.xi, op.nodes[j], cfg);

    op.matrix.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        double t = op.nodes[i];
        double at = prefactor(t);
        for (int j = 0; j < n; ++j) {
            double h = green_value(t, op.nodes[j], cfg) + at * gxi[j];
            op.matrix[static_cast<std::size_t>(i) * n + j] =
                h * q(op.nodes[j]) * op.weights[j];
        }
    }
    return op;
}

SpectralResult power_iteration(const NystromOperator& op, double tol,
                               int max_iter) {
    int n = op.n;
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    SpectralResult res;
    double scale = std::max(frobenius(op), 1e-300);
    for (int it = 1; it <= max_iter; ++it) {
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            const double* row = &op.matrix[static_cast<std::size_t>(i) * n];
            for (int j = 0; j < n; ++j)
                s += row[j] * x[j];
            y[i] = s;
        }
        double mu = 0.0;
        for (int i = 0; i < n; ++i)
            mu += x[i] * y[i];
        double r = 0.0;
        for (int i = 0; i < n; ++i) {
            double d = y[i] - mu * x[i];
            r += d * d;
        }
        r = std::sqrt(r);
        res.dominant_eigenvalue = mu;
        res.residual = r;
        res.iterations = it;
        if (r <= tol * scale)
            return res;
        double ny = norm2(y);
        if (ny < 1e-300) {
            // K x vanished; operator is (numerically) zero on this vector
            res.dominant_eigenvalue = 0.0;
            res.residual = 0.0;
            return res;
        }
        for (int i = 0; i < n; ++i)
            x[i] = y[i] / ny;
    }
    throw SpectralFailure("power_iteration: residual stagnated "
                          "(oscillating dominant pair?)");
}

SolutionCheck has_nontrivial_solution(const BVPConfig& cfg,
                                      const PotentialSpec& q, int n,
                                      double tol) {
    NystromOperator op = build_operator(cfg, q, n);
    double normk = frobenius(op);
    SolutionCheck chk;
    if (normk == 0.0) {
        chk.nontrivial = false;
        chk.margin = 1.0;
        return chk;
    }

    // M = I - K; sigma_min via inverse iteration on (M^T M)^{-1}
    std::vector<double> m(op.matrix);
    for (int i = 0; i < n; ++i)
        m[static_cast<std::size_t>(i) * n + i] =
            1.0 - m[static_cast<std::size_t>(i) * n + i];
    for (std::size_t i = 0; i < m.size(); ++i)
        if (i % (n + 1) != 0)
            m[i] = -m[i];

    std::vector<int> piv;
    if (!lu_factor(m, piv, n)) {
        chk.nontrivial = true;
        chk.margin = 0.0;
        return chk;
    }
    std::vector<double> x(n), u, w;
    for (int i = 0; i < n; ++i)
        x[i] = 1.0 / std::sqrt(static_cast<double>(n)) *
               (i % 2 == 0 ? 1.0 : 0.5);
    double nu = 0.0;
    for (int it = 0; it < 100; ++it) {
        lu_solve_transpose(m, piv, n, x, u);
        lu_solve(m, piv, n, u, w);
        double nw = norm2(w);
        if (!std::isfinite(nw) || nw > 1e280) {
            chk.nontrivial = true;
            chk.margin = 0.0;
            return chk;
        }
        double nu_new = nw;
        bool settled = it > 2 && std::abs(nu_new - nu) <= 1e-10 * nu_new;
        nu = nu_new;
        for (int i = 0; i < n; ++i)
            x[i] = w[i] / nw;
        if (settled)
            break;
    }
    double sigma_min = 1.0 / std::sqrt(nu);
    chk.margin = sigma_min / normk;
    chk.nontrivial = chk.margin <= tol;
    return chk;
}

double critical_lambda(const BVPConfig& cfg, int n) {
    NystromOperator op = build_operator(cfg, PotentialSpec::constant(1.0), n);
    SpectralResult sr = power_iteration(op, 1e-10);
    if (!(sr.dominant_eigenvalue > 0.0))
        throw SpectralFailure("critical_lambda: dominant eigenvalue not "
                              "positive");
    return 1.0 / sr.dominant_eigenvalue;
}

} // namespace kprab
