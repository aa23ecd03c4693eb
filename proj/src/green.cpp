#include "kprab/green.hpp"

#include <cmath>
#include <sstream>

namespace kprab {

namespace {

double ml_at(double r, const MLParams& p, int shift) {
    MLParams q = p.with_beta_shift(shift);
    double z = p.omega * std::pow(r, p.rho / p.k);
    return ml_k_value(z, q);
}

// eta-free part of the denominator, (b-a)^{beta/k-2}/k E_{beta-k}(...)
double denominator0(const BVPConfig& cfg) {
    const MLParams& p = cfg.params;
    double ba = cfg.b - cfg.a;
    return std::pow(ba, p.beta / p.k - 2.0) / p.k * ml_at(ba, p, 1);
}

} // namespace

std::vector<std::string> BVPConfig::validate() const {
    std::vector<std::string> warnings;
    params.validate();
    auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(a) || !finite(b) || !finite(xi) || !finite(eta))
        throw DomainError("BVPConfig: all fields must be finite");
    if (!(b > a))
        throw DomainError("BVPConfig: requires b > a");
    if (!(a < xi && xi < b))
        throw DomainError("BVPConfig: requires a < xi < b");
    if (eta < 0.0)
        throw DomainError("BVPConfig: eta must be nonnegative");
    double order = params.beta / params.k;
    if (!(order > 2.0 && order <= 3.0))
        throw DomainError("BVPConfig: requires 2 < beta/k <= 3");
    if (!(params.beta > 2.0 && params.beta <= 3.0))
        warnings.push_back("beta itself lies outside (2, 3]");
    if (std::abs(order - std::round(order)) < 1e-12)
        warnings.push_back("beta/k is an integer; derivative order m = beta/k + 1");
    double d0 = denominator0(*this);
    if (!(d0 > 0.0))
        throw DegenerateConfig("BVPConfig: Green's denominator is not positive");
    double d = denominator(*this);
    (void)d; // throws DegenerateConfig if <= 0
    return warnings;
}

PotentialSpec PotentialSpec::constant(double c) {
    PotentialSpec q;
    q.payload = c;
    return q;
}

PotentialSpec PotentialSpec::polynomial(std::vector<double> coeffs) {
    PotentialSpec q;
    q.payload = Poly{std::move(coeffs)};
    return q;
}

PotentialSpec PotentialSpec::samples(GridFunction g) {
    PotentialSpec q;
    q.payload = std::move(g);
    return q;
}

double PotentialSpec::operator()(double s) const {
    if (const double* c = std::get_if<double>(&payload))
        return *c;
    if (const Poly* p = std::get_if<Poly>(&payload)) {
        double v = 0.0;
        for (auto it = p->coeffs.rbegin(); it != p->coeffs.rend(); ++it)
            v = v * s + *it;
        return v;
    }
    return std::get<GridFunction>(payload)(s);
}

double denominator(const BVPConfig& cfg) {
    const MLParams& p = cfg.params;
    double d = denominator0(cfg) -
               cfg.eta * std::pow(cfg.xi - cfg.a, p.beta / p.k - 1.0) *
                   ml_at(cfg.xi - cfg.a, p, 0);
    if (!(d > 0.0)) {
        std::ostringstream os;
        os << "denominator: Delta = " << d
           << " <= 0; boundary coupling eta violates the representation "
              "constraint";
        throw DegenerateConfig(os.str());
    }
    return d;
}

double green_value(double t, double s, const BVPConfig& cfg) {
    const MLParams& p = cfg.params;
    if (t < cfg.a || t > cfg.b || s < cfg.a || s > cfg.b)
        throw DomainError("green_value: (t, s) outside [a,b]^2");
    double ord = p.beta / p.k;
    double d0 = denominator0(cfg);

    double g = std::pow(t - cfg.a, ord - 1.0) * ml_at(t - cfg.a, p, 0) *
               std::pow(cfg.b - s, ord - 2.0) / (p.k * p.k) *
               ml_at(cfg.b - s, p, 1) / d0;
    if (s < t)
        g -= std::pow(t - s, ord - 1.0) / p.k * ml_at(t - s, p, 0);
    return g;
}

double amplification_factor(const BVPConfig& cfg) {
    const MLParams& p = cfg.params;
    double d = denominator(cfg);
    double ba = cfg.b - cfg.a;
    return 1.0 +
           cfg.eta * std::pow(ba, p.beta / p.k - 1.0) * ml_at(ba, p, 0) / d;
}

} // namespace kprab
