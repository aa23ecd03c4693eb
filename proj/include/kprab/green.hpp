#ifndef KPRAB_GREEN_HPP
#define KPRAB_GREEN_HPP

#include "kprab/operators.hpp"

#include <string>
#include <variant>
#include <vector>

namespace kprab {

// Nonlocal boundary value problem on [a,b]: the fractional equation with
// boundary conditions y(a) = y'(a) = 0 and y'(b) = eta * y(xi).
struct BVPConfig {
    double a = 0.0;
    double b = 1.0;
    double xi = 0.5;
    double eta = 0.0;
    MLParams params;

    // Throws DomainError / DegenerateConfig on invalid configs; returns
    // non-fatal warnings (beta outside (2,3], integer beta/k).
    std::vector<std::string> validate() const;
};

// Coefficient function q on [a,b]: constant, polynomial in s, or
// tabulated samples (linearly interpolated).
struct PotentialSpec {
    struct Poly {
        std::vector<double> coeffs; // c0 + c1 s + c2 s^2 + ...
    };
    std::variant<double, Poly, GridFunction> payload = 0.0;

    static PotentialSpec constant(double c);
    static PotentialSpec polynomial(std::vector<double> coeffs);
    static PotentialSpec samples(GridFunction g);

    double operator()(double s) const;
};

// Boundary-coupling denominator
//   Delta = (b-a)^{beta/k-2}/k E_{beta-k}(omega (b-a)^{rho/k})
//         - eta (xi-a)^{beta/k-1} E_{beta}(omega (xi-a)^{rho/k}).
// Throws DegenerateConfig when Delta <= 0.
double denominator(const BVPConfig& cfg);

// Green's function G(t,s) of the integral-equation representation.
double green_value(double t, double s, const BVPConfig& cfg);

// Bracket C = 1 + eta (b-a)^{beta/k-1} E_{beta}(omega (b-a)^{rho/k}) / Delta;
// the inequality right-hand side is 1/C.  C >= 1, with equality iff eta = 0.
double amplification_factor(const BVPConfig& cfg);

} // namespace kprab

#endif
