// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#include "sincconv/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "sincconv/specfun.hpp"

namespace sincconv {

namespace {

constexpr double pi = 3.14159265358979323846264338328;
using cd = std::complex<double>;

double sqrt_t(double t) { return std::sqrt(t); }

} // namespace

ExampleProblem example(int id) {
    ExampleProblem p;
    p.id = id;
    p.g = sqrt_t;
    switch (id) {
        case 1:
            p.symbol = LaplaceSymbol([](cd s) { return s * s; });
            p.reference = [](double x) { return 4.0 / 15.0 * std::pow(x, 2.5); };
            p.kernel = [](double x) { return x; };
            break;
        case 2:
            p.symbol = LaplaceSymbol([](cd s) { return s * s; });
            p.g = [](double t) { return std::sqrt(t) / (1.0 + t * t); };
            p.reference = [](double x) {
                if (x == 0.0) return 0.0;
                const double s2x = std::sqrt(2.0 * x);
                return (x + 1.0) / std::sqrt(2.0)
                           * (std::atan(s2x + 1.0) + std::atan(s2x - 1.0))
                       + (x - 1.0) / (2.0 * std::sqrt(2.0))
                           * std::log((x - s2x + 1.0) / (x + s2x + 1.0))
                       - 2.0 * std::sqrt(x);
            };
            p.kernel = [](double x) { return x; };
            p.d_se = 2.35;   // g has poles at +-i
            p.d_de = 0.833;
            break;
        case 3:
            p.symbol = LaplaceSymbol([](cd s) { return s * std::exp(-s); });
            p.reference = [](double x) {
                const double r = 2.0 * std::sqrt(x);
                return 0.25 * (std::sin(r) - r * std::cos(r));
            };
            p.kernel = [](double x) { return bessel_j0(2.0 * std::sqrt(x)); };
            break;
        case 4:
            p.symbol = LaplaceSymbol([](cd s) { return s / (1.0 - s); },
                                     {cd(1.0, 0.0)}, 0.5);
            p.reference = [](double x) {
                return std::sqrt(pi) / 2.0 * std::exp(x)
                           * std::erf(std::sqrt(x))
                       - std::sqrt(x);
            };
            p.kernel = [](double x) { return std::exp(x); };
            break;
        case 5:
            p.symbol = LaplaceSymbol([](cd s) { return s / (1.0 + s * s); },
                                     {cd(0.0, 1.0), cd(0.0, -1.0)}, 0.5);
            p.reference = [](double x) {
                const double r = std::sqrt(2.0 * x / pi);
                return std::sqrt(pi / 2.0)
                       * (fresnel_c(r) * std::sin(x) - fresnel_s(r) * std::cos(x));
            };
            p.kernel = [](double x) { return std::cos(x); };
            break;
        case 6:
            p.symbol = LaplaceSymbol([](cd s) { return std::atan(s); },
                                     {cd(0.0, 1.0), cd(0.0, -1.0)}, 0.5);
            p.reference = [](double x) {
                const double r = std::sqrt(2.0 * x / pi);
                const double C = fresnel_c(r);
                const double S = fresnel_s(r);
                return std::sqrt(2.0 * pi) * (S * std::cos(x) - C * std::sin(x))
                       + pi * std::sqrt(x) * (S * S + C * C);
            };
            p.kernel = [](double x) { return sinc(x / pi); };  // sin(x)/x
            break;
        case 7:
            p.symbol = LaplaceSymbol(
                [](cd s) { return s * (-euler_gamma + std::log(s)); },
                {cd(0.0, 0.0)}, 0.0);
            p.reference = [](double x) {
                if (x == 0.0) return 0.0;
                return 2.0 / 9.0 * std::pow(x, 1.5) * (-8.0 + 3.0 * std::log(4.0 * x));
            };
            p.kernel = [](double x) { return std::log(x); };
            break;
        case 8: {
            const double one_over_gamma43 = 1.0 / gamma_fn(4.0 / 3.0);
            const double ref_const = std::sqrt(pi) / (2.0 * gamma_fn(17.0 / 6.0));
            p.symbol = LaplaceSymbol(
                [](cd s) { return std::exp(4.0 / 3.0 * std::log(s)); },
                {cd(0.0, 0.0)}, 0.0);
            p.reference = [ref_const](double x) {
                return ref_const * std::pow(x, 11.0 / 6.0);
            };
            p.kernel = [one_over_gamma43](double x) {
                return std::cbrt(x) * one_over_gamma43;
            };
            break;
        }
        case 9:
            p.symbol = LaplaceSymbol([](cd s) { return s * std::exp(-1.0 / s); },
                                     {cd(0.0, 0.0)}, 0.0);
            p.reference = [](double x) {
                if (x <= 1.0) return 0.0;
                return 2.0 / 3.0 * std::pow(x - 1.0, 1.5) * heaviside(x - 1.0);
            };
            p.kernel = [](double x) { return heaviside(x - 1.0); };
            p.expect_convergence_de = false;
            break;
        default:
            throw std::invalid_argument("example: id must be in 1..9, got "
                                        + std::to_string(id));
    }
    return p;
}

namespace {

SweepRecord run_one(int id, TransformKind method, int n, MatFunMethod matfun,
                    int error_points) {
    const ExampleProblem prob = example(id);
    const double d = (method == TransformKind::se) ? prob.d_se : prob.d_de;

    SweepRecord rec;
    rec.example_id = id;
    rec.method = method;
    rec.n = n;
    rec.m = 2 * n + 1;

    using clock = std::chrono::steady_clock;
    try {
        const auto t0 = clock::now();
        const ConvApproximant approx = build_convolution(
            method, bench_interval(), d, n, prob.symbol, prob.g, matfun);
        const auto t1 = clock::now();
        rec.h = approx.grid().h;
        rec.max_error = approx.max_error(prob.reference, error_points);
        const auto t2 = clock::now();
        rec.build_seconds = std::chrono::duration<double>(t1 - t0).count();
        rec.eval_seconds = std::chrono::duration<double>(t2 - t1).count();
        rec.flag = approx.diagnostics().zero_coeffs ? "zero_coeffs" : "ok";
    } catch (const std::exception&) {
        rec.max_error = std::numeric_limits<double>::quiet_NaN();
        rec.flag = "nonfinite";
    }
    return rec;
}

} // namespace

std::vector<SweepRecord> run_sweep(const std::vector<int>& ids,
                                   const std::vector<TransformKind>& methods,
                                   const std::vector<int>& n_list, int workers,
                                   MatFunMethod matfun, int error_points) {
    struct Task {
        int id;
        TransformKind method;
        int n;
    };
    std::vector<Task> tasks;
    for (int id : ids) {
        for (TransformKind method : methods) {
            for (int n : n_list) tasks.push_back({id, method, n});
        }
    }
    std::sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
        if (a.id != b.id) return a.id < b.id;
        if (a.method != b.method) return a.method < b.method;
        return a.n < b.n;
    });

    std::vector<SweepRecord> records(tasks.size());
    if (workers < 1) workers = 1;
    workers = std::min<int>(workers, static_cast<int>(tasks.size()));
    if (workers <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) {
            records[i] = run_one(tasks[i].id, tasks[i].method, tasks[i].n,
                                 matfun, error_points);
        }
        return records;
    }

    // Each record lands in its preassigned slot, so the output is identical
    // for any worker count.
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                records[i] = run_one(tasks[i].id, tasks[i].method, tasks[i].n,
                                     matfun, error_points);
            }
        });
    }
    for (auto& t : pool) t.join();
    return records;
}

RateFit fit_rate(const std::vector<SweepRecord>& records, RateModel model) {
    struct Point {
        int n;
        double xi;
        double log_err;
    };
    std::vector<Point> pts;
    for (const auto& rec : records) {
        if (!std::isfinite(rec.max_error) || rec.max_error < 1e-13) continue;
        const double xi = (model == RateModel::se_root_exp)
                              ? std::sqrt(static_cast<double>(rec.n))
                              : 1.0 / rec.h;  // n / log(2 d n / mu)
        pts.push_back({rec.n, xi, std::log(rec.max_error)});
    }
    std::sort(pts.begin(), pts.end(),
              [](const Point& a, const Point& b) { return a.n < b.n; });
    if (!pts.empty()) pts.erase(pts.begin());  // drop the preasymptotic point
    if (pts.size() < 4) {
        throw std::runtime_error("fit_rate: fewer than 4 usable points after "
                                 "plateau and preasymptotic trimming");
    }

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& pt : pts) {
        sx += pt.xi;
        sy += pt.log_err;
        sxx += pt.xi * pt.xi;
        sxy += pt.xi * pt.log_err;
    }
    const double k = static_cast<double>(pts.size());
    const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / k;
    RateFit fit;
    fit.c = -slope;
    fit.C = std::exp(intercept);
    fit.points_used = static_cast<int>(pts.size());
    return fit;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records) {
    os << "example,method,n,m,h,max_error,build_seconds,eval_seconds,flag\n";
    char buf[160];
    for (const auto& rec : records) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g", rec.h,
                      rec.max_error, rec.build_seconds, rec.eval_seconds);
        os << rec.example_id << ','
           << (rec.method == TransformKind::se ? "se" : "de") << ',' << rec.n
           << ',' << rec.m << ',' << buf << ',' << rec.flag << '\n';
    }
}

} // namespace sincconv
