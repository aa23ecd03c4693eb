#include "kprab/special.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace kprab {

namespace {

constexpr double kLogDoubleMax = 709.0;

bool near_nonpositive_integer(double u) {
    if (u > 0.5)
        return false;
    double r = std::round(u);
    return r <= 0.0 && std::abs(u - r) < 1e-12 * std::max(1.0, std::abs(u));
}

struct SignedLog {
    double log_abs = 0.0;
    int sign = 1;
    bool pole = false;
};

// log|Gamma(u)| with sign; flags poles at u = 0, -1, -2, ...
SignedLog signed_log_gamma(double u) {
    SignedLog r;
    if (near_nonpositive_integer(u)) {
        r.pole = true;
        return r;
    }
    r.log_abs = std::lgamma(u);
    if (u < 0.0) {
        long m = static_cast<long>(std::floor(u));
        r.sign = (m % 2 == 0) ? 1 : -1;
    }
    return r;
}

// log|Gamma_k(x)| = (x/k - 1) ln k + log|Gamma(x/k)|, with sign and pole flag.
SignedLog signed_log_k_gamma(double x, double k) {
    SignedLog r = signed_log_gamma(x / k);
    if (!r.pole)
        r.log_abs += (x / k - 1.0) * std::log(k);
    return r;
}

} // namespace

void MLParams::validate() const {
    auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(k) || !finite(rho) || !finite(beta) || !finite(gamma_p) ||
        !finite(omega))
        throw DomainError("MLParams: all fields must be finite");
    if (k <= 0.0)
        throw DomainError("MLParams: k must be positive");
    if (rho <= 0.0)
        throw DomainError("MLParams: rho must be positive");
    if (beta <= 0.0)
        throw DomainError("MLParams: beta must be positive");
}

double k_gamma(double x, double k) {
    if (!(k > 0.0))
        throw DomainError("k_gamma: k must be positive");
    double u = x / k;
    if (near_nonpositive_integer(u)) {
        std::ostringstream os;
        os << "k_gamma: pole at x=" << x << ", k=" << k;
        throw PoleError(os.str());
    }
    SignedLog sl = signed_log_k_gamma(x, k);
    if (std::abs(sl.log_abs) > kLogDoubleMax)
        throw OverflowError("k_gamma: magnitude outside double range, "
                            "use log_k_gamma");
    return sl.sign * std::exp(sl.log_abs);
}

double log_k_gamma(double x, double k) {
    if (!(k > 0.0))
        throw DomainError("log_k_gamma: k must be positive");
    if (!(x > 0.0))
        throw DomainError("log_k_gamma: x must be positive");
    return (x / k - 1.0) * std::log(k) + std::lgamma(x / k);
}

double pochhammer_k(double g, int n, double k) {
    if (!(k > 0.0))
        throw DomainError("pochhammer_k: k must be positive");
    if (n < 0)
        throw DomainError("pochhammer_k: n must be nonnegative");
    double prod = 1.0;
    for (int i = 0; i < n; ++i)
        prod *= g + static_cast<double>(i) * k;
    return prod;
}

SeriesResult ml_k(double z, const MLParams& p, double tol, int max_terms) {
    if (!(p.k > 0.0) || !(p.rho > 0.0))
        throw DomainError("ml_k: k and rho must be positive");
    if (!(tol > 0.0) || !(tol < 1.0))
        throw DomainError("ml_k: tol must lie in (0, 1)");

    // prefactor (gamma)_{n,k} z^n / n! carried as log magnitude + sign
    double log_pref = 0.0;
    int sign_pref = 1;
    double sum = 0.0;
    double comp = 0.0; // Kahan compensation
    double prev_abs = std::numeric_limits<double>::infinity();
    int consec = 0;

    SeriesResult res;
    for (int n = 0; n <= max_terms; ++n) {
        double garg = p.rho * static_cast<double>(n) + p.beta;
        SignedLog gl = signed_log_k_gamma(garg, p.k);
        double term = 0.0;
        if (!gl.pole && sign_pref != 0)
            term = sign_pref * gl.sign * std::exp(log_pref - gl.log_abs);
        double yk = term - comp;
        double tk = sum + yk;
        comp = (tk - sum) - yk;
        sum = tk;
        res.terms_used = n + 1;

        double abs_term = std::abs(term);
        // Stopping rule: two consecutive relatively-small terms with the
        // magnitudes no longer growing; only engages once the gamma
        // argument has cleared any pole region.
        if (garg > 0.0 && n >= 1) {
            if (abs_term <= tol * std::abs(sum) && abs_term <= prev_abs)
                ++consec;
            else
                consec = 0;
            if (consec >= 2) {
                res.value = sum;
                res.truncation_estimate =
                    (sum != 0.0) ? abs_term / std::abs(sum) : 0.0;
                return res;
            }
        }
        prev_abs = abs_term;

        double factor = (p.gamma_p + static_cast<double>(n) * p.k) * z /
                        (static_cast<double>(n) + 1.0);
        if (factor == 0.0) {
            // All remaining terms vanish (z = 0 or terminating Pochhammer).
            res.value = sum;
            res.truncation_estimate = 0.0;
            return res;
        }
        log_pref += std::log(std::abs(factor));
        if (factor < 0.0)
            sign_pref = -sign_pref;
    }
    throw NonConvergence("ml_k: stopping rule not met within max_terms");
}

double ml_k_value(double z, const MLParams& p, double tol) {
    return ml_k(z, p, tol).value;
}

} // namespace kprab
