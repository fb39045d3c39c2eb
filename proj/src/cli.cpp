// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#include "sincconv/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "sincconv/bench.hpp"
#include "sincconv/selftest.hpp"
#include "sincconv/spectra.hpp"

namespace sincconv {

namespace {

std::vector<int> parse_range(const std::string& text) {
    // start:stop:step, stop inclusive when the step lands on it.
    std::vector<int> out;
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 + 1);
    const int start = std::stoi(text.substr(0, c1));
    const int stop = std::stoi(text.substr(c1 + 1, c2 - c1 - 1));
    const int step = (c2 == std::string::npos) ? 1
                                               : std::stoi(text.substr(c2 + 1));
    if (step <= 0 || stop < start) {
        throw std::invalid_argument("parse_int_list: bad range '" + text + "'");
    }
    for (int v = start; v <= stop; v += step) out.push_back(v);
    return out;
}

int env_workers() {
    const char* env = std::getenv("SINCCONV_WORKERS");
    if (!env) return 1;
    const int w = std::atoi(env);
    return w >= 1 ? w : 1;
}

std::vector<TransformKind> parse_methods(const std::string& text) {
    if (text == "se") return {TransformKind::se};
    if (text == "de") return {TransformKind::de};
    if (text == "both") return {TransformKind::se, TransformKind::de};
    throw CLI::ValidationError("--method", "must be se, de, or both");
}

MatFunMethod parse_matfun(const std::string& text) {
    if (text == "eig") return MatFunMethod::eig;
    if (text == "contour") return MatFunMethod::contour;
    if (text == "auto") return MatFunMethod::automatic;
    throw CLI::ValidationError("--matfun", "must be eig, contour, or auto");
}

// Writes to the --out path, or stdout when the path is empty.
struct OutStream {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit OutStream(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) {
                throw std::runtime_error("cannot open output file: " + path);
            }
            os = &file;
        }
    }
};

struct BenchOptions {
    std::vector<int> ids{1};
    std::string method = "both";
    std::string n_spec = "5:80:5";
    double d_se = -1.0;  // < 0: per-example default
    double d_de = -1.0;
    std::string out;
    int workers = env_workers();
    std::string matfun = "auto";
};

int run_bench(const BenchOptions& opt) {
    const auto methods = parse_methods(opt.method);
    const auto n_list = parse_int_list(opt.n_spec);
    const auto matfun = parse_matfun(opt.matfun);

    std::vector<SweepRecord> records;
    if (opt.d_se < 0.0 && opt.d_de < 0.0) {
        records = run_sweep(opt.ids, methods, n_list, opt.workers, matfun);
    } else {
        // d overrides bypass the stock sweep so each problem is rebuilt with
        // the requested strip width.
        for (int id : opt.ids) {
            ExampleProblem prob = example(id);
            if (opt.d_se > 0.0) prob.d_se = opt.d_se;
            if (opt.d_de > 0.0) prob.d_de = opt.d_de;
            for (TransformKind method : methods) {
                const double d = (method == TransformKind::se) ? prob.d_se
                                                               : prob.d_de;
                for (int n : n_list) {
                    SweepRecord rec;
                    rec.example_id = id;
                    rec.method = method;
                    rec.n = n;
                    rec.m = 2 * n + 1;
                    try {
                        const ConvApproximant approx = build_convolution(
                            method, bench_interval(), d, n, prob.symbol,
                            prob.g, matfun);
                        rec.h = approx.grid().h;
                        rec.max_error = approx.max_error(prob.reference);
                        rec.flag = approx.diagnostics().zero_coeffs
                                       ? "zero_coeffs" : "ok";
                    } catch (const std::exception&) {
                        rec.max_error = std::numeric_limits<double>::quiet_NaN();
                        rec.flag = "nonfinite";
                    }
                    records.push_back(rec);
                }
            }
        }
    }
    OutStream out(opt.out);
    write_sweep_csv(*out.os, records);
    return 0;
}

struct EvalOptions {
    int id = 1;
    std::string method = "de";
    int n = 32;
    double x = 1.0;
    double d = -1.0;
    std::string matfun = "auto";
};

int run_eval(const EvalOptions& opt) {
    if (opt.method != "se" && opt.method != "de") {
        throw CLI::ValidationError("--method", "eval needs se or de");
    }
    const TransformKind kind = (opt.method == "se") ? TransformKind::se
                                                    : TransformKind::de;
    const ExampleProblem prob = example(opt.id);
    const double d = (opt.d > 0.0) ? opt.d
                     : (kind == TransformKind::se ? prob.d_se : prob.d_de);
    const ConvApproximant approx =
        build_convolution(kind, bench_interval(), d, opt.n, prob.symbol,
                          prob.g, parse_matfun(opt.matfun));
    const double value = approx.eval(opt.x);
    const double ref = prob.reference(opt.x);
    std::printf("example %d %s n=%d d=%.17g x=%.17g\n", opt.id,
                opt.method.c_str(), opt.n, d, opt.x);
    std::printf("p_approx  = %.17g\n", value);
    std::printf("reference = %.17g\n", ref);
    std::printf("abs_error = %.17g\n", std::fabs(value - ref));
    return 0;
}

struct SpectrumOptions {
    std::string kind = "im1";
    int m = 65;
    std::string n_spec = "4,16,64";
    double d = -1.0;
    std::string out;
};

int run_spectrum(const SpectrumOptions& opt) {
    std::vector<SpectrumReport> reports;
    if (opt.kind == "im1") {
        reports.push_back(spectrum_im1(opt.m));
    } else if (opt.kind == "se" || opt.kind == "de") {
        const TransformKind kind = (opt.kind == "se") ? TransformKind::se
                                                      : TransformKind::de;
        const double d = (opt.d > 0.0) ? opt.d
                         : (kind == TransformKind::se ? 3.14 : 1.57);
        reports = contraction_sweep(kind, bench_interval(), d,
                                    parse_int_list(opt.n_spec));
    } else {
        throw CLI::ValidationError("--kind", "must be im1, se, or de");
    }

    OutStream out(opt.out);
    write_eigenvalue_csv(*out.os, reports);
    std::ostringstream summary;
    write_summary_csv(summary, reports);
    std::cout << summary.str();
    if (opt.kind == "im1") {
        std::printf("min_real_part = %.17g (%s)\n", reports[0].min_real_part,
                    reports[0].min_real_part > 0.0 ? "positive"
                                                   : "NOT positive");
    }
    return 0;
}

int run_selftest_cmd() {
    const auto results = run_selftest(&std::cout);
    int failures = 0;
    for (const auto& r : results) failures += r.pass ? 0 : 1;
    std::printf("%zu checks, %d failed\n", results.size(), failures);
    return failures == 0 ? 0 : 2;
}

} // namespace

std::vector<int> parse_int_list(const std::string& text) {
    if (text.find(':') != std::string::npos) return parse_range(text);
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size()) {
            throw std::invalid_argument("parse_int_list: bad entry '" + item + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("parse_int_list: empty list");
    return out;
}

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Sinc convolution benchmarks (SE and DE transformations)"};
    app.require_subcommand(1);

    BenchOptions bench_opt;
    CLI::App* bench = app.add_subcommand(
        "bench", "error sweeps over the benchmark problems, CSV output");
    bench->add_option("--example", bench_opt.ids, "example ids (1-9)")
        ->delimiter(',')->check(CLI::Range(1, 9));
    bench->add_option("--method", bench_opt.method, "se | de | both");
    bench->add_option("--n", bench_opt.n_spec,
                      "n values: single, comma list, or start:stop:step");
    bench->add_option("--d-se", bench_opt.d_se, "override d for SE");
    bench->add_option("--d-de", bench_opt.d_de, "override d for DE");
    bench->add_option("--out", bench_opt.out, "CSV path (default stdout)");
    bench->add_option("--workers", bench_opt.workers,
                      "parallel workers (default $SINCCONV_WORKERS or 1)");
    bench->add_option("--matfun", bench_opt.matfun, "eig | contour | auto");

    EvalOptions eval_opt;
    CLI::App* eval = app.add_subcommand(
        "eval", "evaluate one benchmark approximant at a point");
    eval->add_option("--example", eval_opt.id, "example id (1-9)")
        ->check(CLI::Range(1, 9));
    eval->add_option("--method", eval_opt.method, "se | de");
    eval->add_option("--n", eval_opt.n, "grid parameter n");
    eval->add_option("--x", eval_opt.x, "evaluation point in [0, 2]");
    eval->add_option("--d", eval_opt.d, "override strip half-width d");
    eval->add_option("--matfun", eval_opt.matfun, "eig | contour | auto");

    SpectrumOptions spec_opt;
    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "eigenvalue dumps for I_m^(-1) or A_m");
    spectrum->add_option("--kind", spec_opt.kind, "im1 | se | de");
    spectrum->add_option("--m", spec_opt.m, "order for --kind im1");
    spectrum->add_option("--n", spec_opt.n_spec, "n values for --kind se/de");
    spectrum->add_option("--d", spec_opt.d, "strip half-width (default 3.14/1.57)");
    spectrum->add_option("--out", spec_opt.out, "eigenvalue CSV path");

    app.add_subcommand("selftest", "run the full property suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (bench->parsed()) return run_bench(bench_opt);
        if (eval->parsed()) return run_eval(eval_opt);
        if (spectrum->parsed()) return run_spectrum(spec_opt);
        return run_selftest_cmd();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << '\n';
        return 2;
    }
}

} // namespace sincconv
