#include "kprab/inequality.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

namespace kprab {

namespace {

// composite GL4 with panel doubling on a smooth (or piecewise smooth)
// integrand; used for the classical bounds where no endpoint weight occurs
double refine_integrate(const RealFn& f, double lo, double hi, double rel_tol,
                        int n0 = 32, int max_refine = 10) {
    auto g = [&](double t, double) { return f(t); };
    int n = n0;
    double prev = detail::graded_integrate(g, lo, hi, 0.0, 1.0, n);
    for (int r = 0; r < max_refine; ++r) {
        n *= 2;
        double q = detail::graded_integrate(g, lo, hi, 0.0, 1.0, n);
        double diff = std::abs(q - prev);
        if (diff <= rel_tol * std::max(std::abs(q), std::abs(prev)) ||
            diff == 0.0)
            return q;
        prev = q;
    }
    throw QuadratureError("refine_integrate: no convergence under doubling");
}

} // namespace

double hw_lhs(const PotentialSpec& q, const BVPConfig& cfg,
              const QuadratureRule& rule) {
    cfg.validate();
    double ord = cfg.params.beta / cfg.params.k;
    double grading =
        rule.grading > 0.0 ? rule.grading : std::max(1.0, 2.0 / (ord - 1.0));
    auto f = [&](double s, double) {
        return green_value(cfg.b, s, cfg) * std::abs(q(s));
    };

    int n = std::max(rule.n_panels, 1);
    double prev = detail::graded_integrate(f, cfg.a, cfg.b, 0.0, grading, n);
    int refinements = rule.max_refine > 0 ? rule.max_refine : 6;
    for (int r = 0; r < refinements; ++r) {
        n *= 2;
        double v = detail::graded_integrate(f, cfg.a, cfg.b, 0.0, grading, n);
        double diff = std::abs(v - prev);
        if (diff <= rule.rel_tol * std::max(std::abs(v), std::abs(prev)) ||
            diff == 0.0)
            return v;
        prev = v;
    }
    throw QuadratureError("hw_lhs: panel doubling did not converge");
}

InequalityReport hw_check(const PotentialSpec& q, const BVPConfig& cfg,
                          const QuadratureRule& rule) {
    InequalityReport rep;
    rep.lhs = hw_lhs(q, cfg, rule);
    rep.rhs = 1.0 / amplification_factor(cfg);
    rep.margin = rep.lhs - rep.rhs;
    rep.verdict = rep.margin < 0.0 ? Verdict::NoNontrivialSolutionCertified
                                   : Verdict::NecessaryConditionHolds;
    return rep;
}

double cabrera_rhs(double order, double a, double b, double xi,
                   double coupling) {
    double den = (order - 1.0) * std::pow(b - a, order - 2.0) -
                 coupling * std::pow(xi - a, order - 1.0);
    if (!(den > 0.0)) {
        std::ostringstream os;
        os << "cabrera_rhs: coupling constraint violated (denominator = "
           << den << ")";
        throw DegenerateConfig(os.str());
    }
    double bracket = 1.0 + coupling * std::pow(b - a, order - 1.0) / den;
    return std::tgamma(order) / bracket;
}

std::pair<double, double> classical_bounds(double a, double b,
                                           const PotentialSpec& q) {
    if (!(b > a))
        throw DomainError("classical_bounds: requires b > a");
    double kernel_max = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        double s = a + (b - a) * i / 1000.0;
        kernel_max = std::max(kernel_max, (b - s) * (s - a));
    }
    assert(std::abs(kernel_max - (b - a) * (b - a) / 4.0) <=
           1e-10 * (b - a) * (b - a));

    auto qplus = [&](double s) { return std::max(q(s), 0.0); };
    double hw = refine_integrate(
        [&](double s) { return (b - s) * (s - a) * qplus(s); }, a, b, 1e-10);
    double lyap =
        refine_integrate([&](double s) { return std::abs(q(s)); }, a, b, 1e-10);
    return {hw, lyap};
}

} // namespace kprab
