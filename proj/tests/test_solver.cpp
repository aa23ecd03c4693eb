#include "kprab/solver.hpp"

#include "kprab/inequality.hpp"

#include <doctest.h>

#include <cmath>

using namespace kprab;

namespace {

BVPConfig reduction_config(double eta = 0.0) {
    BVPConfig cfg;
    cfg.a = 0.0;
    cfg.b = 1.0;
    cfg.xi = 0.5;
    cfg.eta = eta;
    cfg.params = MLParams{1.0, 1.0, 2.5, 0.0, 0.0};
    return cfg;
}

} // namespace

TEST_CASE("zero potential gives the zero operator") {
    BVPConfig cfg = reduction_config();
    NystromOperator op = build_operator(cfg, PotentialSpec::constant(0.0), 32);
    for (double v : op.matrix)
        CHECK(v == 0.0);
    SolutionCheck chk =
        has_nontrivial_solution(cfg, PotentialSpec::constant(0.0), 32, 1e-6);
    CHECK_FALSE(chk.nontrivial);
}

TEST_CASE("operator scales linearly in the potential") {
    BVPConfig cfg = reduction_config(0.2);
    NystromOperator k1 = build_operator(cfg, PotentialSpec::constant(1.0), 48);
    NystromOperator k2 = build_operator(cfg, PotentialSpec::constant(2.0), 48);
    for (std::size_t i = 0; i < k1.matrix.size(); ++i)
        CHECK(k2.matrix[i] == doctest::Approx(2.0 * k1.matrix[i]).epsilon(1e-14));

    double mu1 = power_iteration(k1).dominant_eigenvalue;
    double mu2 = power_iteration(k2).dominant_eigenvalue;
    CHECK(mu2 == doctest::Approx(2.0 * mu1).epsilon(1e-10));

    NystromOperator kh = build_operator(cfg, PotentialSpec::constant(0.5), 48);
    double muh = power_iteration(kh).dominant_eigenvalue;
    CHECK(muh == doctest::Approx(0.5 * mu1).epsilon(1e-10));
}

TEST_CASE("row at t = a vanishes; entries nonnegative for omega,gamma >= 0") {
    BVPConfig cfg = reduction_config(0.3);
    cfg.params.omega = 0.4;
    cfg.params.gamma_p = 0.5;
    NystromOperator op = build_operator(cfg, PotentialSpec::constant(1.0), 40);
    for (int j = 0; j < op.n; ++j)
        CHECK(op.at(0, j) == 0.0);
    for (double v : op.matrix)
        CHECK(v >= -1e-14);
}

TEST_CASE("row sums approximate the H integral under refinement") {
    BVPConfig cfg = reduction_config(0.0);
    NystromOperator c = build_operator(cfg, PotentialSpec::constant(1.0), 64);
    NystromOperator f = build_operator(cfg, PotentialSpec::constant(1.0), 256);
    // compare the row at t = b: sum_j w_j G(b, s_j) vs the hw integral
    double coarse = 0.0, fine = 0.0;
    for (int j = 0; j < c.n; ++j)
        coarse += c.at(c.n - 1, j);
    for (int j = 0; j < f.n; ++j)
        fine += f.at(f.n - 1, j);
    double exact = hw_lhs(PotentialSpec::constant(1.0), cfg);
    CHECK(std::abs(fine - exact) < std::abs(coarse - exact) + 1e-12);
    CHECK(fine == doctest::Approx(exact).epsilon(1e-3));
}

TEST_CASE("dominant eigenvalue is stable under refinement") {
    BVPConfig cfg = reduction_config(0.0);
    double l128 = critical_lambda(cfg, 128);
    double l256 = critical_lambda(cfg, 256);
    CHECK(std::abs(l128 - l256) <= 1e-3 * l256);
}

TEST_CASE("critical potential closes the spectral loop") {
    BVPConfig cfg = reduction_config(0.0);
    double lambda = critical_lambda(cfg, 256);
    CHECK(lambda > 0.0);

    SolutionCheck at = has_nontrivial_solution(
        cfg, PotentialSpec::constant(lambda), 256, 1e-6);
    CHECK(at.nontrivial);

    SolutionCheck half = has_nontrivial_solution(
        cfg, PotentialSpec::constant(lambda / 2.0), 256, 1e-6);
    CHECK_FALSE(half.nontrivial);
    CHECK(half.margin > at.margin);
}

TEST_CASE("inequality is necessary at the critical potential") {
    BVPConfig cfg = reduction_config(0.0);
    double lambda = critical_lambda(cfg, 256);
    InequalityReport rep = hw_check(PotentialSpec::constant(lambda), cfg);
    CHECK(rep.margin >= -1e-4);
}

TEST_CASE("determinism") {
    BVPConfig cfg = reduction_config(0.1);
    double l1 = critical_lambda(cfg, 64);
    double l2 = critical_lambda(cfg, 64);
    CHECK(l1 == l2);
}
