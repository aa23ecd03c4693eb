#include "kprab/inequality.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace kprab;

namespace {

BVPConfig make_config(double beta, double xi, double eta, double k = 1.0,
                      double omega = 0.0, double gamma = 0.0) {
    BVPConfig cfg;
    cfg.a = 0.0;
    cfg.b = 1.0;
    cfg.xi = xi;
    cfg.eta = eta;
    cfg.params = MLParams{k, 1.0, beta, gamma, omega};
    return cfg;
}

} // namespace

TEST_CASE("hw_lhs basics") {
    BVPConfig cfg = make_config(2.5, 0.5, 0.0);
    CHECK(hw_lhs(PotentialSpec::constant(0.0), cfg) == 0.0);

    // q == 1: integral (1-s)^{1/2} s ds / Gamma(2.5) = B(2, 1.5)/Gamma(2.5)
    double lhs = hw_lhs(PotentialSpec::constant(1.0), cfg);
    double expect = (4.0 / 15.0) / std::tgamma(2.5);
    CHECK(lhs == doctest::Approx(expect).epsilon(1e-7));
    CHECK(expect == doctest::Approx(0.20060).epsilon(1e-4));

    // homogeneity in the potential
    double scaled = hw_lhs(PotentialSpec::constant(3.5), cfg);
    CHECK(scaled == doctest::Approx(3.5 * lhs).epsilon(1e-10));
}

TEST_CASE("hw_lhs monotone in |q|") {
    BVPConfig cfg = make_config(2.4, 0.6, 0.1, 1.0, 0.3, 0.5);
    double small = hw_lhs(PotentialSpec::polynomial({0.5, 0.2}), cfg);
    double big = hw_lhs(PotentialSpec::polynomial({0.8, 0.2}), cfg);
    CHECK(small <= big + 1e-12);
}

TEST_CASE("hw_check verdict semantics") {
    BVPConfig cfg = make_config(2.5, 0.5, 0.3);
    InequalityReport rep = hw_check(PotentialSpec::constant(0.0), cfg);
    CHECK(rep.lhs == 0.0);
    CHECK(rep.rhs == doctest::Approx(1.0 / amplification_factor(cfg)));
    CHECK(rep.margin < 0.0);
    CHECK(rep.verdict == Verdict::NoNontrivialSolutionCertified);

    rep = hw_check(PotentialSpec::constant(50.0), cfg);
    CHECK(rep.margin >= 0.0);
    CHECK(rep.verdict == Verdict::NecessaryConditionHolds);

    // verdict is a pure function of the margin sign
    for (const auto& r :
         {hw_check(PotentialSpec::constant(0.2), cfg),
          hw_check(PotentialSpec::constant(7.0), cfg)})
        CHECK((r.margin < 0.0) ==
              (r.verdict == Verdict::NoNontrivialSolutionCertified));
}

TEST_CASE("cabrera_rhs values") {
    CHECK(cabrera_rhs(2.5, 0, 1, 0.5, 0.0) ==
          doctest::Approx(std::tgamma(2.5)).epsilon(1e-13));
    CHECK(cabrera_rhs(2.5, 0, 1, 0.5, 0.3) ==
          doctest::Approx(1.09391).epsilon(1e-4));
    CHECK_THROWS_AS(cabrera_rhs(2.5, 0, 1, 0.5, 10.0), DegenerateConfig);
}

TEST_CASE("reduction identity: hw rhs times Gamma(beta) is the Cabrera bound") {
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> bd(2.05, 3.0);
    std::uniform_real_distribution<double> xd(0.2, 0.8);
    std::uniform_real_distribution<double> ed(0.0, 0.4);
    for (int i = 0; i < 5; ++i) {
        double beta = bd(rng), xi = xd(rng), eta = ed(rng);
        BVPConfig cfg = make_config(beta, xi, eta);
        double rhs = 1.0 / amplification_factor(cfg);
        double cab = cabrera_rhs(beta, 0, 1, xi, eta);
        CHECK(rhs * std::tgamma(beta) ==
              doctest::Approx(cab).epsilon(1e-10));
    }
}

TEST_CASE("classical bounds") {
    auto [hw0, ly0] = classical_bounds(0, 1, PotentialSpec::constant(0.0));
    CHECK(hw0 == 0.0);
    CHECK(ly0 == 0.0);

    double c = 4.2;
    auto [hw, ly] = classical_bounds(0, 1, PotentialSpec::constant(c));
    CHECK(hw == doctest::Approx(c / 6.0).epsilon(1e-10));
    CHECK(ly == doctest::Approx(c).epsilon(1e-10));

    // q+ keeps only the positive part
    auto [hwn, lyn] = classical_bounds(0, 1, PotentialSpec::constant(-c));
    CHECK(hwn == 0.0);
    CHECK(lyn == doctest::Approx(c).epsilon(1e-10));
}

TEST_CASE("kernel max and the Lyapunov chain") {
    double a = 0.0, b = 2.0;
    double maxv = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        double s = a + (b - a) * i / 1000.0;
        double v = (b - s) * (s - a);
        CHECK(v <= (b - a) * (b - a) / 4.0 + 1e-12);
        maxv = std::max(maxv, v);
    }
    CHECK(maxv == doctest::Approx((b - a) * (b - a) / 4.0).epsilon(1e-12));

    // Hartman-Wintner LHS <= (b-a)^2/4 * integral|q| when q+ = |q|
    auto q = PotentialSpec::polynomial({1.0, 0.5});
    auto [hw, ly] = classical_bounds(a, b, q);
    CHECK(hw <= (b - a) * (b - a) / 4.0 * ly + 1e-12);
}
