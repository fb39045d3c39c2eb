// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#include "sincconv/selftest.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "sincconv/bench.hpp"
#include "sincconv/conv.hpp"
#include "sincconv/matfun.hpp"
#include "sincconv/refquad.hpp"
#include "sincconv/sincquad.hpp"
#include "sincconv/specfun.hpp"
#include "sincconv/spectra.hpp"
#include "sincconv/transform.hpp"

namespace sincconv {

namespace {

constexpr double pi = 3.14159265358979323846264338328;

struct Suite {
    std::vector<CheckResult> results;
    std::ostream* progress = nullptr;

    void record(const std::string& name, bool pass, const std::string& detail) {
        results.push_back({name, pass, detail});
        if (progress) {
            (*progress) << (pass ? "PASS " : "FAIL ") << name
                        << (detail.empty() ? "" : "  (" + detail + ")") << '\n';
        }
    }

    // Pass iff worst <= bound; detail reports both.
    void bound(const std::string& name, double worst, double limit) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "worst %.3g, limit %.3g", worst, limit);
        record(name, worst <= limit, buf);
    }
};

std::string fit_detail(const RateFit& fit, double target) {
    char buf[112];
    std::snprintf(buf, sizeof buf, "c = %.4f, target %.4f (%d points)", fit.c,
                  target, fit.points_used);
    return buf;
}

bool within_rel(double value, double target, double rel) {
    return std::fabs(value - target) <= rel * std::fabs(target);
}

// --- specfun ----------------------------------------------------------

void check_specfun(Suite& s) {
    std::mt19937 rng(20260613u);
    std::uniform_real_distribution<double> unif(-50.0, 50.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double x = unif(rng);
        const double ref = integrate(
            [](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }, 0.0, x,
            1e-14);
        worst = std::max(worst, std::fabs(si(x) - ref));
    }
    s.bound("specfun.si-vs-quadrature", worst, 1e-13);

    worst = 0.0;
    for (long long k = -100; k <= 100; ++k) {
        worst = std::max(worst, std::fabs(delta_im1(k) + delta_im1(-k) - 1.0));
    }
    s.bound("specfun.delta-pair-sum", worst, 1e-15);

    worst = 0.0;
    for (double x : {0.25, 0.5, 1.0, 1.7, 1.9, 2.5, 3.0, 5.0, 12.0, 33.0}) {
        worst = std::max(worst, std::fabs(si(x) + si(-x)));
        worst = std::max(worst, std::fabs(sincconv::erf(x) + sincconv::erf(-x)));
        worst = std::max(worst, std::fabs(fresnel_c(x) + fresnel_c(-x)));
        worst = std::max(worst, std::fabs(fresnel_s(x) + fresnel_s(-x)));
    }
    s.bound("specfun.odd-symmetry", worst, 1e-15);

    worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double x = 0.1 + 1.9 * i / 19.0;
        const double c_ref = integrate(
            [](double t) { return std::cos(pi / 2 * t * t); }, 0.0, x, 1e-14);
        const double s_ref = integrate(
            [](double t) { return std::sin(pi / 2 * t * t); }, 0.0, x, 1e-14);
        worst = std::max(worst, std::fabs(fresnel_c(x) - c_ref));
        worst = std::max(worst, std::fabs(fresnel_s(x) - s_ref));
    }
    s.bound("specfun.fresnel-vs-quadrature", worst, 1e-12);
}

// --- transform --------------------------------------------------------

void check_transform(Suite& s) {
    const Interval iv(0.0, 2.0);
    for (TransformKind kind : {TransformKind::se, TransformKind::de}) {
        const char* tag = (kind == TransformKind::se) ? "se" : "de";
        double worst = 0.0;
        for (int k = 1; k <= 49; ++k) {
            const double x = iv.a + k * iv.length() / 50.0;
            worst = std::max(worst, std::fabs(psi(kind, iv, phi(kind, iv, x)) - x));
        }
        s.bound(std::string("transform.round-trip.") + tag, worst,
                1e-12 * iv.length());

        const double d = (kind == TransformKind::se) ? 3.14 : 1.57;
        bool monotone = true;
        int bad_n = 0;
        for (int n = 1; n <= 256 && monotone; ++n) {
            const SincGrid grid = make_grid(kind, iv, d, n);
            for (int i = 1; i < grid.m; ++i) {
                if (!(grid.nodes[i - 1] < grid.nodes[i]) || grid.nodes[i] >= iv.b
                    || grid.nodes[i - 1] <= iv.a) {
                    monotone = false;
                    bad_n = n;
                    break;
                }
            }
        }
        s.record(std::string("transform.nodes-strictly-increasing.") + tag,
                 monotone, monotone ? "n = 1..256" : "first failure at n = "
                 + std::to_string(bad_n));

        const SincGrid grid = make_grid(kind, iv, d, 48);
        worst = 0.0;
        for (int j = 1; j <= grid.N; ++j) {
            worst = std::max(worst, std::fabs(psi(kind, iv, j * grid.h)
                                              + psi(kind, iv, -j * grid.h)
                                              - (iv.a + iv.b)));
        }
        s.bound(std::string("transform.node-symmetry.") + tag, worst, 1e-12);

        double wsum = 0.0;
        for (double w : grid.weights) wsum += w;
        wsum *= grid.h;
        const double limit = (kind == TransformKind::se)
            ? iv.length() * (1.0 + std::sqrt(pi * d) / 4.0)
            : iv.length() * (1.0 + pi * d / (2.0 * std::exp(1.0)));
        s.bound(std::string("transform.weight-sum-bound.") + tag, wsum, limit);
    }
}

// --- sincquad ---------------------------------------------------------

void check_sincquad(Suite& s) {
    const Interval iv(0.0, 2.0);
    for (TransformKind kind : {TransformKind::se, TransformKind::de}) {
        const char* tag = (kind == TransformKind::se) ? "se" : "de";
        const double d = (kind == TransformKind::se) ? 3.14 : 1.57;
        double worst = 0.0;
        for (int n : {2, 8, 32}) {
            const SincGrid grid = make_grid(kind, iv, d, n);
            for (int i = 0; i < grid.m; ++i) {
                const Eigen::RowVectorXd w = omega_basis(grid, grid.nodes[i]);
                for (int j = 0; j < grid.m; ++j) {
                    worst = std::max(worst,
                                     std::fabs(w(j) - (i == j ? 1.0 : 0.0)));
                }
            }
        }
        s.bound(std::string("sincquad.omega-kronecker.") + tag, worst, 1e-12);
    }

    {
        std::mt19937 rng(8841u);
        std::uniform_int_distribution<int> pick_j(-24, 24);
        const SincGrid grid = make_grid(TransformKind::se, iv, 3.14, 24);
        double worst = 0.0;
        for (int r = 0; r < 5; ++r) {
            const int j = pick_j(rng);
            for (int k = 0; k < 1000; ++k) {
                const double x = iv.a + iv.length() * k / 999.0;
                const double u = phi(grid.kind, iv, x);
                worst = std::max(worst, std::fabs(j_basis(j, grid.h, u)));
            }
        }
        s.bound("sincquad.j-basis-uniform-bound", worst, 1.1 * grid.h);
    }

    {
        const SincGrid grid = make_grid(TransformKind::de, iv, 1.57, 32);
        const IndefMatrix mat = build_A(grid);
        const auto one = [](double) { return 1.0; };
        const auto inner = [&](double x) { return apply_indef(mat, one, x); };
        double worst = 0.0;
        for (int k = 0; k <= 20; ++k) {
            const double x = iv.a + iv.length() * k / 20.0;
            worst = std::max(worst, std::fabs(apply_indef(mat, inner, x)
                                              - 0.5 * x * x));
        }
        s.bound("sincquad.operator-power-k2", worst, 1e-6);
    }

    // Indefinite-integration convergence rates for g(t) = sqrt(t)(2 - t):
    // root-exponential (SE) and nearly exponential (DE).
    const auto g = [](double t) { return std::sqrt(t) * (2.0 - t); };
    const auto exact = [](double x) {
        return 4.0 / 3.0 * std::pow(x, 1.5) - 0.4 * std::pow(x, 2.5);
    };
    const auto indef_error = [&](TransformKind kind, double d, int n) {
        const SincGrid grid = make_grid(kind, iv, d, n);
        const IndefMatrix mat = build_A(grid);
        const Eigen::VectorXd c = mat.A * sample(grid, g);
        double worst = 0.0;
        for (int k = 0; k < 200; ++k) {
            const double x = iv.a + iv.length() * k / 199.0;
            worst = std::max(worst,
                             std::fabs(omega_basis(grid, x).dot(c) - exact(x)));
        }
        return worst;
    };

    {
        std::vector<SweepRecord> recs;
        for (int n : {4, 9, 16, 25, 36, 49}) {
            SweepRecord r;
            r.n = n;
            r.h = std::sqrt(pi * 3.14 / n);
            r.max_error = indef_error(TransformKind::se, 3.14, n);
            recs.push_back(r);
        }
        const RateFit fit = fit_rate(recs, RateModel::se_root_exp);
        const double target = std::sqrt(pi * 3.14);
        s.record("sincquad.rate-se-root-exp", within_rel(fit.c, target, 0.25),
                 fit_detail(fit, target));
    }
    {
        std::vector<SweepRecord> recs;
        for (int n = 4; n <= 64; n += 4) {
            SweepRecord r;
            r.n = n;
            r.h = std::log(2.0 * 1.57 * n) / n;
            r.max_error = indef_error(TransformKind::de, 1.57, n);
            recs.push_back(r);
        }
        const RateFit fit = fit_rate(recs, RateModel::de_milog);
        const double target = pi * 1.57;
        s.record("sincquad.rate-de-milog", within_rel(fit.c, target, 0.25),
                 fit_detail(fit, target));
    }
}

// --- matfun -----------------------------------------------------------

void check_matfun(Suite& s) {
    const Interval iv(0.0, 2.0);

    double worst = 0.0;
    for (TransformKind kind : {TransformKind::se, TransformKind::de}) {
        const double d = (kind == TransformKind::se) ? 3.14 : 1.57;
        const IndefMatrix mat = build_A(make_grid(kind, iv, d, 8));
        const EigFactorization f = eig(mat.A);
        // Multiset of eigenvalues equals its conjugate within pairing
        // tolerance: match each eigenvalue to the nearest conjugate.
        for (Eigen::Index i = 0; i < f.lambda.size(); ++i) {
            const std::complex<double> target = std::conj(f.lambda(i));
            double best = 1e300;
            for (Eigen::Index j = 0; j < f.lambda.size(); ++j) {
                best = std::min(best, std::abs(f.lambda(j) - target));
            }
            worst = std::max(worst, best);
        }
    }
    s.bound("matfun.conjugate-pairing", worst, 1e-10);

    worst = 0.0;
    const LaplaceSymbol polys[4] = {
        LaplaceSymbol([](std::complex<double>) { return std::complex<double>(1.0); }),
        LaplaceSymbol([](std::complex<double> z) { return z; }),
        LaplaceSymbol([](std::complex<double> z) { return z * z; }),
        LaplaceSymbol([](std::complex<double> z) { return z * z * z; }),
    };
    for (TransformKind kind : {TransformKind::se, TransformKind::de}) {
        const double d = (kind == TransformKind::se) ? 3.14 : 1.57;
        for (int n : {2, 4, 8, 16}) {
            const IndefMatrix mat = build_A(make_grid(kind, iv, d, n));
            const Eigen::MatrixXd I =
                Eigen::MatrixXd::Identity(mat.A.rows(), mat.A.cols());
            const Eigen::MatrixXd direct[4] = {I, mat.A, mat.A * mat.A,
                                               mat.A * mat.A * mat.A};
            for (int p = 0; p < 4; ++p) {
                const MatFunResult r = matfun_eig(mat.A, polys[p]);
                const double scale = direct[p].cwiseAbs().maxCoeff();
                worst = std::max(worst, (r.value - direct[p]).cwiseAbs().maxCoeff()
                                            / scale);
            }
        }
    }
    s.bound("matfun.polynomial-exactness", worst, 1e-9);

    const LaplaceSymbol sexp([](std::complex<double> z) { return z * std::exp(-z); });
    worst = 0.0;
    for (TransformKind kind : {TransformKind::se, TransformKind::de}) {
        const double d = (kind == TransformKind::se) ? 3.14 : 1.57;
        for (int n : {4, 16}) {
            const IndefMatrix mat = build_A(make_grid(kind, iv, d, n));
            const MatFunResult via_eig = matfun_eig(mat.A, sexp);
            const MatFunResult via_contour = matfun_contour(mat.A, sexp);
            worst = std::max(worst, (via_eig.value - via_contour.value)
                                        .cwiseAbs().maxCoeff());
        }
    }
    s.bound("matfun.eig-vs-contour", worst, 1e-8);

    {
        const IndefMatrix mat = build_A(make_grid(TransformKind::se, iv, 3.14, 8));
        const double sr = spectral_radius(mat.A);
        const Eigen::MatrixXcd Ac = mat.A.cast<std::complex<double>>();
        const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(mat.A.rows(),
                                                              mat.A.cols());
        bool all_finite = true;
        for (int k = 0; k < 16; ++k) {
            const double theta = 2.0 * pi * k / 16.0;
            const std::complex<double> z =
                2.0 * sr * std::complex<double>(std::cos(theta), std::sin(theta));
            const Eigen::MatrixXcd R =
                Eigen::PartialPivLU<Eigen::MatrixXcd>(z * I - Ac).solve(I);
            all_finite = all_finite && R.allFinite();
        }
        s.record("matfun.resolvent-finite-on-contour", all_finite,
                 "16 phases at |z| = 2 rho(A)");
    }
}

// --- conv -------------------------------------------------------------

void check_conv(Suite& s) {
    const Interval iv(0.0, 2.0);
    const LaplaceSymbol identity_symbol(
        [](std::complex<double> z) { return z; });
    const auto g = [](double t) { return std::sqrt(t); };

    double worst = 0.0;
    for (TransformKind kind : {TransformKind::se, TransformKind::de}) {
        const double d = (kind == TransformKind::se) ? 3.14 : 1.57;
        for (int n : {4, 16}) {
            const ConvApproximant approx =
                build_convolution(kind, iv, d, n, identity_symbol, g);
            const IndefMatrix mat = build_A(approx.grid());
            for (int k = 0; k < 50; ++k) {
                const double x = iv.a + iv.length() * k / 49.0;
                worst = std::max(worst, std::fabs(approx.eval(x)
                                                  - apply_indef(mat, g, x)));
            }
        }
    }
    s.bound("conv.identity-symbol-matches-indef", worst, 1e-12);

    {
        const auto g1 = [](double t) { return std::sqrt(t); };
        const auto g2 = [](double t) { return std::cos(t); };
        const double al = 0.75, be = -1.25;
        const auto gc = [&](double t) { return al * g1(t) + be * g2(t); };
        const ExampleProblem ex3 = example(3);
        const auto build = [&](const std::function<double(double)>& gg) {
            return build_convolution(TransformKind::de, iv, 1.57, 12,
                                     ex3.symbol, gg);
        };
        const Eigen::VectorXd lhs = build(gc).coeffs();
        const Eigen::VectorXd rhs =
            al * build(g1).coeffs() + be * build(g2).coeffs();
        s.bound("conv.linearity-in-g", (lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
    }

    worst = 0.0;
    for (int id : {1, 3}) {
        const ExampleProblem prob = example(id);
        for (TransformKind kind : {TransformKind::se, TransformKind::de}) {
            const double d = (kind == TransformKind::se) ? prob.d_se : prob.d_de;
            const ConvApproximant via_eig = build_convolution(
                kind, iv, d, 16, prob.symbol, prob.g, MatFunMethod::eig);
            const ConvApproximant via_contour = build_convolution(
                kind, iv, d, 16, prob.symbol, prob.g, MatFunMethod::contour);
            worst = std::max(
                worst, via_eig.max_error([&](double x) {
                    return via_contour.eval(x);
                }));
        }
    }
    s.bound("conv.method-independence", worst, 1e-8);

    {
        std::vector<SweepRecord> recs = run_sweep(
            {1}, {TransformKind::se}, {9, 16, 25, 36, 49, 64});
        const RateFit fit = fit_rate(recs, RateModel::se_root_exp);
        const double target = std::sqrt(pi * 3.14);
        s.record("conv.rate-se-root-exp", within_rel(fit.c, target, 0.25),
                 fit_detail(fit, target));
    }
    {
        std::vector<SweepRecord> recs = run_sweep(
            {1}, {TransformKind::de}, {5, 10, 15, 20, 25, 30, 35, 40, 45});
        const RateFit fit = fit_rate(recs, RateModel::de_milog);
        const double target = pi * 1.57;
        s.record("conv.rate-de-milog", within_rel(fit.c, target, 0.25),
                 fit_detail(fit, target));
    }
}

// --- spectra ----------------------------------------------------------

void check_spectra(Suite& s) {
    double min_re = 1e300;
    for (int m = 1; m <= 257; m += 8) {
        min_re = std::min(min_re, spectrum_im1(m).min_real_part);
    }
    char buf[80];
    std::snprintf(buf, sizeof buf, "min Re over m = 1,9,...,257: %.6g", min_re);
    s.record("spectra.stenger-min-real-part", min_re > 0.0, buf);

    for (TransformKind kind : {TransformKind::se, TransformKind::de}) {
        const char* tag = (kind == TransformKind::se) ? "se" : "de";
        const double d = (kind == TransformKind::se) ? 3.14 : 1.57;
        const auto reports = contraction_sweep(kind, Interval(0.0, 2.0), d,
                                               {4, 16, 64});
        const bool decreasing =
            reports[0].spectral_radius > reports[1].spectral_radius
            && reports[1].spectral_radius > reports[2].spectral_radius;
        const bool halved =
            reports[2].spectral_radius < 0.5 * reports[0].spectral_radius;
        std::snprintf(buf, sizeof buf, "rho: %.4g > %.4g > %.4g",
                      reports[0].spectral_radius, reports[1].spectral_radius,
                      reports[2].spectral_radius);
        s.record(std::string("spectra.radius-contraction.") + tag,
                 decreasing && halved, buf);
    }

    {
        const double L = 3.0;
        const IndefMatrix base =
            build_A(make_grid(TransformKind::se, Interval(0.0, 2.0), 3.14, 6));
        const IndefMatrix scaled =
            build_A(make_grid(TransformKind::se, Interval(0.0, 2.0 * L), 3.14, 6));
        s.bound("spectra.interval-scale-covariance",
                (scaled.A - L * base.A).cwiseAbs().maxCoeff(), 1e-13);
    }
}

// --- bench ------------------------------------------------------------

void check_bench(Suite& s) {
    double worst = 0.0;
    int worst_id = 0;
    for (int id = 1; id <= 9; ++id) {
        const ExampleProblem prob = example(id);
        for (int k = 1; k <= 10; ++k) {
            const double x = 2.0 * k / 11.0;
            double q;
            if (id == 9) {
                // Kernel jumps at t = x - 1; the integrand vanishes beyond it.
                q = (x <= 1.0) ? 0.0
                               : integrate(prob.g, 0.0, x - 1.0, 1e-12);
            } else {
                q = integrate([&](double t) { return prob.kernel(x - t) * prob.g(t); },
                              0.0, x, 1e-12);
            }
            const double err = std::fabs(prob.reference(x) - q);
            if (err > worst) {
                worst = err;
                worst_id = id;
            }
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "worst %.3g (example %d), limit 1e-8", worst,
                  worst_id);
    s.record("bench.reference-vs-quadrature", worst <= 1e-8, buf);

    {
        std::vector<int> ids = {1, 2, 3, 4, 5, 6};
        const auto recs = run_sweep(ids, {TransformKind::de}, {10, 40});
        bool ok = true;
        std::string detail;
        for (int id : ids) {
            double e10 = 0.0, e40 = 0.0;
            for (const auto& rec : recs) {
                if (rec.example_id == id && rec.n == 10) e10 = rec.max_error;
                if (rec.example_id == id && rec.n == 40) e40 = rec.max_error;
            }
            if (!(e40 < 1e-3 * e10)) {
                ok = false;
                detail += "example " + std::to_string(id) + " ";
            }
        }
        s.record("bench.de-error-drop-1e3", ok,
                 ok ? "examples 1-6, n 10 -> 40" : detail + "missed the drop");
    }

    for (int id : {7, 8}) {
        const auto recs = run_sweep({id}, {TransformKind::se},
                                    {9, 16, 25, 36, 49, 64});
        const RateFit fit = fit_rate(recs, RateModel::se_root_exp);
        std::snprintf(buf, sizeof buf, "c = %.4f (%d points)", fit.c,
                      fit.points_used);
        s.record("bench.se-robust-example" + std::to_string(id), fit.c > 0.0,
                 buf);
    }

    {
        // Deterministic reduction: records must not depend on worker count.
        const std::vector<int> ids = {1, 9};
        const std::vector<TransformKind> methods = {TransformKind::se,
                                                    TransformKind::de};
        const std::vector<int> ns = {4, 8, 12};
        const auto seq = run_sweep(ids, methods, ns, 1);
        const auto par = run_sweep(ids, methods, ns, 4);
        bool same = seq.size() == par.size();
        for (size_t i = 0; same && i < seq.size(); ++i) {
            same = seq[i].example_id == par[i].example_id
                   && seq[i].method == par[i].method && seq[i].n == par[i].n
                   && seq[i].flag == par[i].flag
                   && ((std::isnan(seq[i].max_error) && std::isnan(par[i].max_error))
                       || seq[i].max_error == par[i].max_error);
        }
        s.record("bench.worker-count-determinism", same,
                 "workers 1 vs 4, non-timing fields bitwise equal");
    }
}

} // namespace

std::vector<CheckResult> run_selftest(std::ostream* progress) {
    Suite s;
    s.progress = progress;
    check_specfun(s);
    check_transform(s);
    check_sincquad(s);
    check_matfun(s);
    check_conv(s);
    check_spectra(s);
    check_bench(s);
    return s.results;
}

} // namespace sincconv
