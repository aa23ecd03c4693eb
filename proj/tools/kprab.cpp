#include "kprab/io.hpp"
#include "kprab/solver.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

using namespace kprab;

constexpr int kExitBadFlags = 1;
constexpr int kExitNonConvergence = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitSpectral = 4;
constexpr int kExitQuadrature = 5;
constexpr int kExitCertified = 10;

struct ParamFlags {
    double k = 1.0, rho = 1.0, beta = 1.0, gamma = 1.0, omega = 0.0;

    void attach(CLI::App* app) {
        app->add_option("--k", k, "deformation parameter k > 0");
        app->add_option("--rho", rho, "series step rho > 0");
        app->add_option("--beta", beta, "order parameter beta");
        app->add_option("--gamma", gamma, "Prabhakar exponent gamma");
        app->add_option("--omega", omega, "kernel frequency omega");
    }
    MLParams params() const { return MLParams{k, rho, beta, gamma, omega}; }
};

struct QFlags {
    double q_const = 0.0;
    std::string q_poly, q_csv;
    bool has_const = false;

    void attach(CLI::App* app) {
        auto* c = app->add_option("--q-const", q_const, "constant potential");
        auto* p = app->add_option("--q-poly", q_poly,
                                  "polynomial coefficients c0,c1,...");
        auto* f = app->add_option("--q-csv", q_csv, "tabulated potential CSV");
        c->excludes(p)->excludes(f);
        p->excludes(f);
        flag_const = c;
    }
    CLI::Option* flag_const = nullptr;

    PotentialSpec spec() const {
        if (!q_poly.empty()) {
            std::vector<double> coeffs;
            std::stringstream ss(q_poly);
            std::string tok;
            while (std::getline(ss, tok, ','))
                coeffs.push_back(std::stod(tok));
            return PotentialSpec::polynomial(std::move(coeffs));
        }
        if (!q_csv.empty())
            return PotentialSpec::samples(read_grid_csv(q_csv));
        return PotentialSpec::constant(q_const);
    }
};

int cmd_ml(const ParamFlags& pf, double z, double tol, int max_terms) {
    SeriesResult r = ml_k(z, pf.params(), tol, max_terms);
    std::printf("E = %s  (terms_used=%d, truncation_estimate=%s)\n",
                format_double(r.value).c_str(), r.terms_used,
                format_double(r.truncation_estimate).c_str());
    std::printf("{\"value\": %s, \"terms_used\": %d, "
                "\"truncation_estimate\": %s}\n",
                format_double(r.value).c_str(), r.terms_used,
                format_double(r.truncation_estimate).c_str());
    return 0;
}

int cmd_green(const std::string& config_path, int grid,
              const std::string& out_path) {
    BVPConfig cfg = load_config(config_path);
    auto warnings = cfg.validate();
    for (const auto& w : warnings)
        std::fprintf(stderr, "warning: %s\n", w.c_str());

    std::ofstream out(out_path);
    if (!out)
        throw DomainError("cannot write " + out_path);
    out << "t,s,G\n";
    double gmin = 0.0, gmax = 0.0;
    int nonneg_viol = 0, mono_viol = 0, bracket_viol = 0;
    std::vector<double> prev_col;
    double scale = 0.0;
    std::vector<std::vector<double>> g(grid + 1,
                                       std::vector<double>(grid + 1));
    for (int i = 0; i <= grid; ++i) {
        double t = cfg.a + (cfg.b - cfg.a) * i / grid;
        for (int j = 0; j <= grid; ++j) {
            double s = cfg.a + (cfg.b - cfg.a) * j / grid;
            g[i][j] = green_value(t, s, cfg);
            scale = std::max(scale, std::abs(g[i][j]));
            gmin = std::min(gmin, g[i][j]);
            gmax = std::max(gmax, g[i][j]);
            out << format_double(t) << ',' << format_double(s) << ','
                << format_double(g[i][j]) << '\n';
        }
    }
    double tol = 1e-12 * std::max(scale, 1.0);
    for (int j = 0; j <= grid; ++j) {
        for (int i = 0; i <= grid; ++i) {
            if (g[i][j] < -tol)
                ++nonneg_viol;
            if (i > 0 && g[i][j] < g[i - 1][j] - tol)
                ++mono_viol;
            if (g[i][j] > g[grid][j] + tol || g[0][j] < -tol)
                ++bracket_viol;
        }
    }
    std::printf("grid %dx%d written to %s\n", grid + 1, grid + 1,
                out_path.c_str());
    std::printf("min G = %s, max G = %s\n", format_double(gmin).c_str(),
                format_double(gmax).c_str());
    std::printf("property battery: nonnegativity violations=%d, "
                "t-monotonicity violations=%d, bracketing violations=%d\n",
                nonneg_viol, mono_viol, bracket_viol);
    return 0;
}

int cmd_hw(const std::string& config_path, const QFlags& qf) {
    BVPConfig cfg = load_config(config_path);
    cfg.validate();
    InequalityReport rep = hw_check(qf.spec(), cfg);
    std::printf("%s\n", report_to_json(rep).c_str());
    return rep.verdict == Verdict::NoNontrivialSolutionCertified
               ? kExitCertified
               : 0;
}

int cmd_critical(const std::string& config_path, int n) {
    BVPConfig cfg = load_config(config_path);
    cfg.validate();
    NystromOperator op = build_operator(cfg, PotentialSpec::constant(1.0), n);
    SpectralResult sr = power_iteration(op, 1e-10);
    if (!(sr.dominant_eigenvalue > 0.0))
        throw SpectralFailure("dominant eigenvalue not positive");
    double lambda = 1.0 / sr.dominant_eigenvalue;
    std::printf("{\"lambda_star\": %s, \"mu_max\": %s, \"residual\": %s, "
                "\"n\": %d}\n",
                format_double(lambda).c_str(),
                format_double(sr.dominant_eigenvalue).c_str(),
                format_double(sr.residual).c_str(), n);
    return 0;
}

bool report(const char* name, bool ok) {
    std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", name);
    return ok;
}

// Golden suite for the classical k=1, omega=0 reduction.
int cmd_reduce_check() {
    bool all = true;

    // exponential identity of the three-parameter series
    {
        MLParams p{1, 1, 1, 1, 0};
        bool ok = true;
        for (double z : {-2.0, -0.5, 0.0, 0.5, 1.0, 3.0})
            ok = ok && std::abs(ml_k_value(z, p) - std::exp(z)) <=
                           1e-10 * std::exp(z);
        all &= report("Mittag-Leffler exponential identity", ok);
    }
    // Green's function against the closed Riemann-Liouville form
    {
        BVPConfig cfg;
        cfg.a = 0;
        cfg.b = 1;
        cfg.xi = 0.5;
        cfg.eta = 0.3;
        cfg.params = MLParams{1, 1, 2.5, 0.7, 0};
        cfg.validate();
        double beta = cfg.params.beta;
        double worst = 0.0;
        for (int i = 0; i <= 100; ++i)
            for (int j = 0; j <= 100; ++j) {
                double t = i / 100.0, s = j / 100.0;
                double closed = std::pow(t, beta - 1) *
                                std::pow(1 - s, beta - 2);
                if (s < t)
                    closed -= std::pow(t - s, beta - 1);
                closed /= std::tgamma(beta);
                worst = std::max(worst,
                                 std::abs(green_value(t, s, cfg) - closed));
            }
        all &= report("Riemann-Liouville Green's function reduction",
                      worst * std::tgamma(beta) <= 1e-9);
    }
    // Cabrera bound identity
    {
        BVPConfig cfg;
        cfg.a = 0;
        cfg.b = 1;
        cfg.xi = 0.5;
        cfg.eta = 0.3;
        cfg.params = MLParams{1, 1, 2.5, 0.4, 0};
        double rhs = 1.0 / amplification_factor(cfg);
        double cab = cabrera_rhs(2.5, 0, 1, 0.5, 0.3);
        all &= report("Cabrera bound reduction",
                      std::abs(rhs * std::tgamma(2.5) - cab) <= 1e-10 * cab);
    }
    // Beta-integral value of the inequality LHS for q == 1
    {
        BVPConfig cfg;
        cfg.a = 0;
        cfg.b = 1;
        cfg.xi = 0.5;
        cfg.eta = 0.0;
        cfg.params = MLParams{1, 1, 2.5, 0.0, 0};
        double lhs = hw_lhs(PotentialSpec::constant(1.0), cfg);
        double expect = (4.0 / 15.0) / std::tgamma(2.5);
        all &= report("Hartman-Wintner LHS Beta integral",
                      std::abs(lhs - expect) <= 1e-7 * expect);
    }
    // classical Hartman-Wintner / Lyapunov pair
    {
        auto [hw, ly] = classical_bounds(0, 1, PotentialSpec::constant(3.0));
        all &= report("classical bounds (c/6, c)",
                      std::abs(hw - 0.5) <= 1e-10 && std::abs(ly - 3) <= 1e-10);
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-Prabhakar fractional calculus toolkit"};
    app.require_subcommand(1);

    // ml
    auto* ml = app.add_subcommand("ml", "evaluate the k-Mittag-Leffler series");
    ParamFlags ml_p;
    ml_p.attach(ml);
    double ml_z = 0.0, ml_tol = 1e-12;
    int ml_max_terms = 10000;
    ml->add_option("--z", ml_z, "argument")->required();
    ml->add_option("--tol", ml_tol, "relative tolerance");
    ml->add_option("--max-terms", ml_max_terms, "series term cap");

    // kernel
    auto* ker = app.add_subcommand("kernel", "evaluate the Prabhakar kernel");
    ParamFlags ker_p;
    ker_p.attach(ker);
    double ker_t = 1.0;
    int ker_shift = 0;
    ker->add_option("--t", ker_t, "evaluation point")->required();
    ker->add_option("--shift", ker_shift, "beta shift (0, 1 or 2)");

    // integral
    auto* integ = app.add_subcommand("integral", "k-Prabhakar integral of q");
    ParamFlags in_p;
    in_p.attach(integ);
    QFlags in_q;
    in_q.attach(integ);
    double in_a = 0.0, in_x = 1.0;
    integ->add_option("--a", in_a, "base point");
    integ->add_option("--x", in_x, "evaluation point")->required();

    // derivative
    auto* deriv =
        app.add_subcommand("derivative", "k-Prabhakar derivative of q");
    ParamFlags de_p;
    de_p.attach(deriv);
    QFlags de_q;
    de_q.attach(deriv);
    double de_a = 0.0, de_b = 1.0, de_x = 0.5, de_h = 0.0;
    deriv->add_option("--a", de_a, "left endpoint");
    deriv->add_option("--b", de_b, "right endpoint");
    deriv->add_option("--x", de_x, "evaluation point")->required();
    deriv->add_option("--step", de_h, "difference step (0 = default)");

    // green
    auto* green = app.add_subcommand("green", "export the Green's function grid");
    std::string green_cfg, green_out = "green.csv";
    int green_grid = 100;
    green->add_option("--config", green_cfg, "config JSON")->required();
    green->add_option("--grid", green_grid, "grid subdivisions");
    green->add_option("--out", green_out, "output CSV path");

    // hw
    auto* hw = app.add_subcommand("hw", "Hartman-Wintner inequality check");
    std::string hw_cfg;
    QFlags hw_q;
    hw->add_option("--config", hw_cfg, "config JSON")->required();
    hw_q.attach(hw);

    // critical
    auto* crit =
        app.add_subcommand("critical", "critical constant potential lambda*");
    std::string crit_cfg;
    int crit_n = 128;
    crit->add_option("--config", crit_cfg, "config JSON")->required();
    crit->add_option("--n", crit_n, "Nystrom grid size");

    // reduce-check
    auto* reduce = app.add_subcommand(
        "reduce-check", "run the classical k=1, omega=0 golden suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitBadFlags;
    }

    try {
        if (ml->parsed())
            return cmd_ml(ml_p, ml_z, ml_tol, ml_max_terms);
        if (ker->parsed()) {
            double v = kernel_eval(ker_t, ker_p.params(), ker_shift);
            std::printf("{\"value\": %s}\n", format_double(v).c_str());
            return 0;
        }
        if (integ->parsed()) {
            auto q = in_q.spec();
            double v = prabhakar_integral([&](double t) { return q(t); },
                                          in_a, in_x, in_p.params());
            std::printf("{\"value\": %s}\n", format_double(v).c_str());
            return 0;
        }
        if (deriv->parsed()) {
            auto q = de_q.spec();
            double v = prabhakar_derivative([&](double t) { return q(t); },
                                            de_x, de_a, de_b, de_p.params(),
                                            {}, de_h);
            std::printf("{\"value\": %s}\n", format_double(v).c_str());
            return 0;
        }
        if (green->parsed())
            return cmd_green(green_cfg, green_grid, green_out);
        if (hw->parsed())
            return cmd_hw(hw_cfg, hw_q);
        if (crit->parsed())
            return cmd_critical(crit_cfg, crit_n);
        if (reduce->parsed())
            return cmd_reduce_check();
    } catch (const NonConvergence& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNonConvergence;
    } catch (const DegenerateConfig& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDegenerate;
    } catch (const SpectralFailure& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitSpectral;
    } catch (const QuadratureError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitQuadrature;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadFlags;
    }
    return kExitBadFlags;
}
