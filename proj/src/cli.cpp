#include "xpower/cli.hpp"

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "xpower/errors.hpp"
#include "xpower/generators.hpp"
#include "xpower/linear_operator.hpp"
#include "xpower/matrix_market.hpp"
#include "xpower/solvers.hpp"
#include "xpower/trace_csv.hpp"

namespace xpower {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Options {
    std::string gen;
    std::string mtx;
    std::string method = "all";
    std::string init = "ones";
    std::string out_path;
    std::string stiffness;
    std::string mass;
    double t = 1.0;
    double tol = 1e-7;
    double eta = 40.0;
    double shift = 0.0;
    int max_iter = 6000;
    int warmup = 40;
    int trials = 100;
    long long seed = 1;
    CLI::Option* shift_opt = nullptr;
};

void add_common_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--gen", o.gen, "built-in problem generator")
        ->check(CLI::IsMember({"wilkinson", "clustered-diag", "linspace-diag", "nonnormal"}));
    cmd->add_option("--t", o.t, "coupling strength for --gen nonnormal (default 1)");
    cmd->add_option("--mtx", o.mtx, "MatrixMarket file to load");
    cmd->add_option("--method", o.method, "solver selection (default all)")
        ->check(CLI::IsMember({"power", "simple", "augmented", "all"}));
    cmd->add_option("--tol", o.tol, "residual-norm stopping threshold (default 1e-7)");
    cmd->add_option("--max-iter", o.max_iter, "iteration cap (default 6000)");
    cmd->add_option("--m", o.warmup, "extra power applications before simple blending (default 40)");
    cmd->add_option("--eta", o.eta, "augmented damping parameter (default 40)");
    cmd->add_option("--init", o.init, "initial vector family (default ones)")
        ->check(CLI::IsMember({"ones", "random"}));
    cmd->add_option("--seed", o.seed, "seed for --init random / bench base seed (default 1)");
    o.shift_opt = cmd->add_option("--shift", o.shift, "shift-invert target shift");
    cmd->add_option("--stiffness", o.stiffness, "MatrixMarket file K for shift-invert mode");
    cmd->add_option("--mass", o.mass, "MatrixMarket file M for shift-invert mode");
    cmd->add_option("--out", o.out_path, "output CSV path");
}

std::vector<std::string> expand_methods(const std::string& m) {
    if (m == "all") return {"power", "simple", "augmented"};
    return {m};
}

EigenResult solve_with(const std::string& method, const LinearOperator& op,
                       const Vector& u0, const SolverConfig& cfg) {
    if (method == "power") return power_iterate(op, u0, cfg);
    if (method == "simple") return simple_extrapolation(op, u0, cfg);
    return augmented_extrapolation(op, u0, cfg);
}

LinearOperator build_operator(const Options& o) {
    const bool shift_mode =
        o.shift_opt->count() > 0 || !o.stiffness.empty() || !o.mass.empty();
    const int sources = (o.gen.empty() ? 0 : 1) + (o.mtx.empty() ? 0 : 1) + (shift_mode ? 1 : 0);
    if (sources != 1) {
        throw std::invalid_argument(
            "exactly one problem source is required: --gen, --mtx, or "
            "--shift with --stiffness and --mass");
    }
    if (shift_mode) {
        if (o.shift_opt->count() == 0 || o.stiffness.empty() || o.mass.empty()) {
            throw std::invalid_argument(
                "shift-invert mode needs --shift, --stiffness and --mass together");
        }
        MatrixHandle k_matrix = read_matrix_market_file(o.stiffness);
        MatrixHandle m_matrix = read_matrix_market_file(o.mass);
        return shift_invert_operator(k_matrix, m_matrix, o.shift);
    }
    if (!o.mtx.empty()) {
        return make_operator(read_matrix_market_file(o.mtx));
    }
    if (o.gen == "wilkinson") return make_operator(wilkinson_w21());
    if (o.gen == "clustered-diag") return make_operator(clustered_diag());
    if (o.gen == "linspace-diag") return make_operator(linspace_diag());
    if (o.gen == "nonnormal") return make_operator(nonnormal_t(o.t));
    throw std::invalid_argument("unknown generator '" + o.gen + "'");
}

SolverConfig config_of(const Options& o, bool record_trace) {
    SolverConfig cfg;
    cfg.tol = o.tol;
    cfg.max_iter = o.max_iter;
    cfg.warmup_m = o.warmup;
    cfg.eta = o.eta;
    cfg.record_trace = record_trace;
    return cfg;
}

// trace.csv -> trace.power.csv when several methods share one --out value.
std::string path_for_method(const std::string& path, const std::string& method) {
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return path + "." + method;
    }
    return path.substr(0, dot) + "." + method + path.substr(dot);
}

int do_run(const Options& o, std::ostream& out) {
    LinearOperator op = build_operator(o);
    const Vector u0 = (o.init == "random")
                          ? random_init(op.n, static_cast<std::uint64_t>(o.seed))
                          : ones_init(op.n);
    const SolverConfig cfg = config_of(o, true);
    const auto methods = expand_methods(o.method);

    bool all_converged = true;
    for (const auto& method : methods) {
        EigenResult r = solve_with(method, op, u0, cfg);
        out << "method=" << method << " converged=" << (r.converged ? "true" : "false")
            << " lambda=" << fmt17(r.eigenvalue) << " iters=" << r.iterations
            << " resid=" << fmt17(r.final_residual) << "\n";
        if (!r.converged) all_converged = false;
        if (!o.out_path.empty()) {
            const std::string path = (methods.size() == 1)
                                         ? o.out_path
                                         : path_for_method(o.out_path, method);
            std::ofstream f(path);
            if (!f) throw IoError("cannot open output file: " + path);
            write_trace_csv(r.trace, method, f);
        }
    }
    return all_converged ? 0 : 2;
}

int do_bench(const Options& o, std::ostream& out) {
    if (o.trials < 1) {
        throw std::invalid_argument("--trials must be at least 1");
    }
    LinearOperator op = build_operator(o);
    const SolverConfig cfg = config_of(o, false);
    const auto methods = expand_methods(o.method);
    const int trials = o.trials;

    struct Cell {
        int iters = 0;
        bool converged = false;
    };
    std::vector<std::vector<Cell>> results(
        static_cast<std::size_t>(trials), std::vector<Cell>(methods.size()));

    // Trials are independent; workers pull indices and write disjoint slots,
    // so the aggregate below is identical for any scheduling.
    std::atomic<int> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto worker = [&]() {
        try {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= trials) break;
                const Vector u0 =
                    random_init(op.n, static_cast<std::uint64_t>(o.seed + i));
                for (std::size_t mi = 0; mi < methods.size(); ++mi) {
                    EigenResult r = solve_with(methods[mi], op, u0, cfg);
                    results[i][mi] = Cell{r.iterations, r.converged};
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };

    unsigned n_workers = std::thread::hardware_concurrency();
    if (n_workers == 0) n_workers = 1;
    if (n_workers > static_cast<unsigned>(trials)) n_workers = trials;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);

    std::string csv = "method,mean_iters,n_nonconverged,n_trials\n";
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
        long long total = 0;
        int nonconverged = 0;
        for (int i = 0; i < trials; ++i) {
            total += results[i][mi].iters; // at max_iter when unconverged
            if (!results[i][mi].converged) ++nonconverged;
        }
        const double mean = static_cast<double>(total) / trials;
        csv += methods[mi] + "," + fmt17(mean) + "," + std::to_string(nonconverged) +
               "," + std::to_string(trials) + "\n";
    }
    out << csv;
    out.flush();
    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path);
        f << csv;
        f.flush();
        if (!f) throw IoError("cannot open output file: " + o.out_path);
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"dominant-eigenpair solvers: plain power iteration and its "
                 "one-step extrapolation accelerations"};
    app.name("eigbench");

    Options run_opts;
    Options bench_opts;
    CLI::App* run_cmd =
        app.add_subcommand("run", "solve one problem, print a summary line per method");
    add_common_options(run_cmd, run_opts);
    CLI::App* bench_cmd = app.add_subcommand(
        "bench", "average iteration counts over seeded random starts");
    add_common_options(bench_cmd, bench_opts);
    bench_cmd->add_option("--trials", bench_opts.trials,
                          "number of random starts (default 100)");
    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("eigbench");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (run_cmd->parsed()) return do_run(run_opts, out);
        return do_bench(bench_opts, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace xpower
