#ifndef KPRAB_SPECIAL_HPP
#define KPRAB_SPECIAL_HPP

#include "kprab/errors.hpp"

namespace kprab {

// Parameter set of the k-Prabhakar family.  All parameters are real;
// validate() enforces k > 0, rho > 0, beta > 0 and finiteness.
struct MLParams {
    double k = 1.0;
    double rho = 1.0;
    double beta = 1.0;
    double gamma_p = 1.0;
    double omega = 0.0;

    void validate() const;

    // Same family with beta -> beta - j*k.  The shifted beta may be
    // nonpositive; series evaluation handles the resulting gamma poles
    // via the reciprocal-gamma convention (1/Gamma_k := 0 at poles).
    MLParams with_beta_shift(int j) const {
        MLParams q = *this;
        q.beta = beta - static_cast<double>(j) * k;
        return q;
    }
};

struct SeriesResult {
    double value = 0.0;
    int terms_used = 0;
    double truncation_estimate = 0.0; // bound on the relative tail
};

// k-Gamma function, Gamma_k(x) = k^(x/k-1) Gamma(x/k).
// Throws PoleError when x/k is a nonpositive integer and OverflowError
// when the magnitude leaves the double range.
double k_gamma(double x, double k);

// ln Gamma_k(x) for x > 0.
double log_k_gamma(double x, double k);

// Pochhammer k-symbol (g)_{n,k} = g (g+k) ... (g+(n-1)k).
double pochhammer_k(double g, int n, double k);

// k-Mittag-Leffler function E^gamma_{k,rho,beta}(z), series of Eq-style
// terms (gamma)_{n,k} z^n / (Gamma_k(rho n + beta) n!).  omega is unused
// here.  Terms are accumulated in log space with a sign tracker; a term
// whose Gamma_k argument sits at a pole contributes zero.
SeriesResult ml_k(double z, const MLParams& p, double tol = 1e-12,
                  int max_terms = 10000);

// Convenience wrapper returning just the value.
double ml_k_value(double z, const MLParams& p, double tol = 1e-12);

} // namespace kprab

#endif
