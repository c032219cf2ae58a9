#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "vbound/cesaro.hpp"
#include "vbound/errors.hpp"
#include "vbound/hardy.hpp"
#include "vbound/io.hpp"
#include "vbound/phi.hpp"
#include "vbound/search.hpp"
#include "vbound/verify.hpp"

namespace {

using vbound::io::format_double;

int run_verify(const std::string& out_path) {
    const auto results = vbound::verify::run_acceptance_checks(".");
    std::printf("%-4s  %-55s %-12s %-12s\n", "", "check", "error", "tolerance");
    for (const auto& r : results) {
        std::printf("%-4s  %-55s %-12.3e %-12.3e %s\n", r.passed ? "ok" : "FAIL",
                    r.name.c_str(), r.worst_error, r.worst_tolerance,
                    r.detail.c_str());
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
        out << "check,passed,error,tolerance\n";
        for (const auto& r : results)
            out << '"' << r.name << "\"," << (r.passed ? 1 : 0) << ','
                << format_double(r.worst_error) << ','
                << format_double(r.worst_tolerance) << '\n';
    }
    const bool ok = vbound::verify::all_passed(results);
    std::printf("%s\n", ok ? "all checks passed" : "CHECKS FAILED");
    return ok ? 0 : 1;
}

int run_phi_curve(double p_min, double p_max, int steps, const std::string& format,
                  const std::string& out_path) {
    const auto curve = vbound::phi::phi_curve(p_min, p_max, steps);
    if (format == "svg")
        vbound::io::write_phi_curve_svg(out_path, curve);
    else
        vbound::io::write_phi_curve_csv(out_path, curve);
    std::cout << "wrote " << curve.size() << " points to " << out_path << "\n";
    return 0;
}

int run_ratio(double p, double t, double tol) {
    const auto ratio = vbound::phi::exact_ratio(p, t, tol);
    const double phi = vbound::phi::phi_closed(p).phi;
    std::cout << "p                 = " << format_double(ratio.p) << "\n"
              << "t                 = " << format_double(ratio.t) << "\n"
              << "||Vf||^p / ||f||^p = " << format_double(ratio.ratio_pth_power) << "\n"
              << "||Vf|| / ||f||     = "
              << format_double(std::pow(ratio.ratio_pth_power, 1.0 / p)) << "\n"
              << "phi(p)            = " << format_double(phi) << "\n";
    return 0;
}

int run_search(double p, int kernels, std::uint64_t seed, int budget, double tol) {
    vbound::search::SearchConfig config;
    config.seed = seed;
    config.max_iterations = budget;
    config.report_tol = tol;
    const auto result = vbound::search::maximize_ratio(p, kernels, config);
    const double single = std::pow(vbound::phi::phi_closed(p).phi, 1.0 / p);
    std::cout << "p            = " << format_double(p) << "\n"
              << "best ratio   = " << format_double(result.best_ratio) << "\n"
              << "phi(p)^(1/p) = " << format_double(single) << "\n"
              << "evaluations  = " << result.evaluations << "\n"
              << "converged    = " << (result.converged ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < result.parameters.terms.size(); ++i) {
        const auto& [c, t] = result.parameters.terms[i];
        std::cout << "term " << i << ": c = " << format_double(c.real()) << " + "
                  << format_double(c.imag()) << "i, t = " << format_double(t) << "\n";
    }
    return 0;
}

int run_cesaro_eval(double t, double p, double z_real, double z_imag, double tol) {
    const std::complex<double> z(z_real, z_imag);
    auto f = [t](std::complex<double> w) {
        return vbound::hardy::kernel_eval(vbound::hardy::KernelFunction{t}, w);
    };
    const auto c_num = vbound::cesaro::cesaro_apply_numeric(f, z, tol);
    const auto c_closed = vbound::cesaro::cesaro_kernel_closed(t, z);
    const auto v_num = vbound::cesaro::v_apply(f, p, z, tol);
    const auto v_closed = vbound::cesaro::v_kernel_closed(t, p, z);
    auto show = [](const char* label, std::complex<double> numeric,
                   std::complex<double> closed) {
        std::cout << label << ": numeric = " << format_double(numeric.real()) << " + "
                  << format_double(numeric.imag())
                  << "i, closed = " << format_double(closed.real()) << " + "
                  << format_double(closed.imag())
                  << "i, |diff| = " << format_double(std::abs(numeric - closed))
                  << "\n";
    };
    show("Cf", c_num, c_closed);
    show("Vf", v_num, v_closed);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical study of the shifted Cesaro operator on H^p of the half-plane"};
    app.require_subcommand(1);

    double tol = 1e-8;
    app.add_option("--tol", tol, "numerical tolerance")
        ->check(CLI::Range(1e-12, 1e-3))
        ->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "run the full verification suite");
    std::string report_path;
    verify_cmd->add_option("--out", report_path, "write a CSV report here");

    auto* curve_cmd = app.add_subcommand("phi-curve", "emit the Phi(p) curve");
    double p_min = 1.05, p_max = 10.0;
    int steps = 896;
    std::string format = "csv", curve_out = "phi_curve.csv";
    curve_cmd->add_option("--p-min", p_min)->capture_default_str();
    curve_cmd->add_option("--p-max", p_max)->capture_default_str();
    curve_cmd->add_option("--steps", steps)->capture_default_str();
    curve_cmd->add_option("--format", format)
        ->check(CLI::IsMember({"csv", "svg"}))
        ->capture_default_str();
    curve_cmd->add_option("--out", curve_out)->capture_default_str();

    auto* ratio_cmd = app.add_subcommand("ratio", "||V f_t||_p / ||f_t||_p by quadrature");
    double ratio_p = 0.0, ratio_t = 1.0;
    ratio_cmd->add_option("--p", ratio_p, "exponent, in (1, inf)")
        ->required()
        ->check(CLI::Range(1.0 + 1e-9, 1e6));
    ratio_cmd->add_option("--t", ratio_t)->check(CLI::PositiveNumber)->capture_default_str();

    auto* search_cmd =
        app.add_subcommand("search", "maximize the norm ratio over kernel combinations");
    double search_p = 0.0;
    int kernels = 2, budget = 300;
    std::uint64_t seed = 42;
    search_cmd->add_option("--p", search_p)->required()->check(CLI::Range(1.0 + 1e-9, 1e6));
    search_cmd->add_option("--kernels", kernels)->check(CLI::Range(1, 8))->capture_default_str();
    search_cmd->add_option("--seed", seed)->capture_default_str();
    search_cmd->add_option("--budget", budget, "iterations per restart")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* eval_cmd =
        app.add_subcommand("cesaro-eval", "compare numeric and closed-form C and V");
    double eval_t = 1.0, eval_p = 2.0, z_real = 0.0, z_imag = 1.0;
    eval_cmd->add_option("--t", eval_t)->check(CLI::PositiveNumber)->capture_default_str();
    eval_cmd->add_option("--p", eval_p)->check(CLI::Range(1.0 + 1e-9, 1e6))->capture_default_str();
    eval_cmd->add_option("--z-real", z_real)->capture_default_str();
    eval_cmd->add_option("--z-imag", z_imag)->capture_default_str();

    try {
        app.parse(argc, argv);
        if (*verify_cmd) return run_verify(report_path);
        if (*curve_cmd) return run_phi_curve(p_min, p_max, steps, format, curve_out);
        if (*ratio_cmd) return run_ratio(ratio_p, ratio_t, tol);
        if (*search_cmd) return run_search(search_p, kernels, seed, budget, tol);
        if (*eval_cmd) return run_cesaro_eval(eval_t, eval_p, z_real, z_imag, tol);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const vbound::NonConvergence& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
