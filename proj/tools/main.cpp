// Command-line surface over the truncated non-commutative distribution
// algebra: series arithmetic, graded norms, inversion, power-series
// application, derivations, the second-quantization constants and inequality
// audits, and the linear-systems commands. JSON in, JSON out.
//
// Exit codes: 0 ok, 2 usage or parse error, 3 domain error (the violated
// condition is named on stderr), 4 property violation (an audit found a
// counterexample; indicates an implementation bug).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncwick/calculus.hpp"
#include "ncwick/json_io.hpp"
#include "ncwick/linsys.hpp"
#include "ncwick/quantization.hpp"
#include "ncwick/random.hpp"
#include "ncwick/series.hpp"

namespace {

using namespace ncwick;

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_domain = 3;
constexpr int exit_violation = 4;

struct Output {
    std::string path; // empty = stdout
    void write_json(const nlohmann::json& j) const {
        if (path.empty()) {
            std::cout << j.dump(2) << '\n';
        } else {
            store_json_file(path, j);
        }
    }
    void write_line(const std::string& line) const {
        if (path.empty()) {
            std::cout << line << '\n';
        } else {
            std::ofstream out(path);
            if (!out) throw schema_error("cannot open " + path + " for writing");
            out << line << '\n';
        }
    }
};

std::string format_17g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int run_mul(const std::string& f_path, const std::string& g_path, const Output& out) {
    const NcSeries f = series_from_json(load_json_file(f_path));
    const NcSeries g = series_from_json(load_json_file(g_path));
    out.write_json(series_to_json(wick_mul(f, g)));
    return exit_ok;
}

int run_norm(const std::string& f_path, int p, const Output& out) {
    const NcSeries f = series_from_json(load_json_file(f_path));
    out.write_line(format_17g(norm_p(f, p)));
    return exit_ok;
}

int run_vage_const(int p, int q, const Output& out) {
    out.write_line(format_17g(vage_constant(WeightSequence::kondratiev(), q - p)));
    return exit_ok;
}

int run_vage_check(int p, int q, int trials, std::uint64_t seed, std::size_t trunc_len,
                   Word::Letter max_letter, const Output& out) {
    const double bound = vage_constant(WeightSequence::kondratiev(), q - p);
    std::mt19937_64 rng(seed);
    const RandomSeriesParams params{trunc_len, max_letter, 1, 12};
    double max_ratio = 0.0;
    int violations = 0;
    for (int t = 0; t < trials; ++t) {
        const NcSeries f = random_series(rng, params);
        const NcSeries g = random_series(rng, params);
        const double denom = norm_p(f, p) * norm_p(g, q);
        if (denom == 0.0) continue;
        const double r1 = norm_p(wick_mul(f, g), q) / denom;
        const double r2 = norm_p(wick_mul(g, f), q) / denom;
        max_ratio = std::max({max_ratio, r1, r2});
        if (r1 > bound || r2 > bound) ++violations;
    }
    out.write_line("max ratio |f*g|_q / (|f|_p |g|_q) = " + format_17g(max_ratio) +
                   "\nbound B_{q-p}                     = " + format_17g(bound) +
                   "\nviolations                        = " + std::to_string(violations) + "/" +
                   std::to_string(trials));
    return violations == 0 ? exit_ok : exit_violation;
}

int run_invert(const std::string& f_path, const Output& out) {
    const NcSeries f = series_from_json(load_json_file(f_path));
    out.write_json(series_to_json(wick_inverse(f)));
    return exit_ok;
}

int run_apply(const std::string& phi_path, const std::string& f_path, bool force,
              const Output& out) {
    const PowerSeriesSpec phi = power_series_from_json(load_json_file(phi_path));
    const NcSeries f = series_from_json(load_json_file(f_path));
    out.write_json(series_to_json(apply_series(phi, f, force)));
    return exit_ok;
}

int run_dm(const std::string& f_path, Word::Letter m, const Output& out) {
    const NcSeries f = series_from_json(load_json_file(f_path));
    out.write_json(series_to_json(derivation(m, f)));
    return exit_ok;
}

int run_simulate(const std::string& h_path, const std::string& u_path, std::size_t steps,
                 const Output& out) {
    const auto h = matrix_sequence_from_json(load_json_file(h_path));
    const auto u = matrix_sequence_from_json(load_json_file(u_path));
    out.write_json(matrix_sequence_to_json(simulate(h, u, steps)));
    return exit_ok;
}

int run_realize(const std::string& sys_path, std::size_t steps, const Output& out) {
    const SystemDef sys = system_from_json(load_json_file(sys_path));
    out.write_json(matrix_sequence_to_json(transfer_taylor(sys, steps)));
    return exit_ok;
}

int run_observable(const std::string& path, std::size_t steps, const Output& out) {
    // Accepts either a full realization file or a bare {"C":..., "A":...}.
    const nlohmann::json j = load_json_file(path);
    if (!j.is_object() || !j.contains("C") || !j.contains("A")) {
        throw schema_error("observable needs a file with \"C\" and \"A\" matrices");
    }
    const AlgebraMatrix c = matrix_from_json(j["C"]);
    const AlgebraMatrix a = matrix_from_json(j["A"]);
    const bool expectation_ok = is_observable_expectation(c, a, steps);
    std::string report = std::string("expectation pair observable: ") +
                         (expectation_ok ? "true" : "false");
    if (!expectation_ok) {
        out.write_line(report + "\nkernel recursion trivial:    skipped");
        std::cerr << "PreconditionFailed: the expectation pair is not observable\n";
        return exit_domain;
    }
    const bool kernel_ok = kernel_trivial_check(c, a, steps);
    out.write_line(report + "\nkernel recursion trivial:    " + (kernel_ok ? "true" : "false"));
    return kernel_ok ? exit_ok : exit_violation;
}

int run_blowup(int n, const Output& out) {
    std::string lines;
    for (double v : convolution_blowup_norms(n)) {
        if (!lines.empty()) lines += '\n';
        lines += format_17g(v);
    }
    out.write_line(lines);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"truncated arithmetic in the non-commutative distribution algebra"};
    app.require_subcommand(1);

    std::string f_path, g_path, phi_path, sys_path, h_path, u_path;
    Output out;
    int p = 0, q = 2, trials = 1000, demo_n = 20;
    std::size_t steps = 1, trunc_len = 6;
    Word::Letter m_letter = 1, max_letter = 8;
    std::uint64_t seed = 0;
    bool force = false;
    bool deterministic = false;

    app.add_flag("--deterministic", deterministic,
                 "fixed reduction order (this build always evaluates in the fixed order)");

    auto* mul = app.add_subcommand("mul", "Wick product of two series files");
    mul->add_option("f", f_path)->required();
    mul->add_option("g", g_path)->required();
    mul->add_option("--out", out.path);

    auto* norm = app.add_subcommand("norm", "graded norm |f|_p");
    norm->add_option("f", f_path)->required();
    norm->add_option("--p", p)->required();
    norm->add_option("--out", out.path);

    auto* vconst = app.add_subcommand("vage-const", "the constant B_{q-p}");
    vconst->add_option("--p", p);
    vconst->add_option("--q", q)->required();
    vconst->add_option("--out", out.path);

    auto* vcheck = app.add_subcommand("vage-check", "randomized audit of the product inequality");
    vcheck->add_option("--p", p);
    vcheck->add_option("--q", q)->required();
    vcheck->add_option("--trials", trials);
    vcheck->add_option("--seed", seed);
    vcheck->add_option("--trunc-len", trunc_len);
    vcheck->add_option("--max-letter", max_letter);
    vcheck->add_option("--out", out.path);

    auto* invert = app.add_subcommand("invert", "Wick inverse");
    invert->add_option("f", f_path)->required();
    invert->add_option("--out", out.path);

    auto* apply = app.add_subcommand("apply", "apply a power series to f");
    apply->add_option("phi", phi_path)->required();
    apply->add_option("f", f_path)->required();
    apply->add_flag("--force", force, "skip the |E[f]| < radius/B_2 convergence gate");
    apply->add_option("--out", out.path);

    auto* dm = app.add_subcommand("dm", "the derivation deleting letter m");
    dm->add_option("f", f_path)->required();
    dm->add_option("--m", m_letter)->required();
    dm->add_option("--out", out.path);

    auto* sim = app.add_subcommand("simulate", "convolution system response");
    sim->add_option("h_file", h_path)->required();
    sim->add_option("u_file", u_path)->required();
    sim->add_option("--steps", steps)->required();
    sim->add_option("--out", out.path);

    auto* realize = app.add_subcommand("realize", "Taylor coefficients of a realization");
    realize->add_option("sys", sys_path)->required();
    realize->add_option("--steps", steps)->required();
    realize->add_option("--out", out.path);

    auto* obs = app.add_subcommand("observable", "observability verdicts for a (C, A) pair");
    obs->add_option("sys", sys_path)->required();
    obs->add_option("--steps", steps)->required();
    obs->add_option("--out", out.path);

    auto* blowup = app.add_subcommand("blowup-demo",
                                      "norms of truncated products outside the plain l^2 space");
    blowup->add_option("--n", demo_n);
    blowup->add_option("--out", out.path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*mul) return run_mul(f_path, g_path, out);
        if (*norm) return run_norm(f_path, p, out);
        if (*vconst) {
            if (q - p < 2) {
                std::cerr << "usage: vage-const requires q >= p + 2\n";
                return exit_usage;
            }
            return run_vage_const(p, q, out);
        }
        if (*vcheck) {
            if (q - p < 2) {
                std::cerr << "usage: vage-check requires q >= p + 2\n";
                return exit_usage;
            }
            if (trials < 0) {
                std::cerr << "usage: trials must be >= 0\n";
                return exit_usage;
            }
            return run_vage_check(p, q, trials, seed, trunc_len, max_letter, out);
        }
        if (*invert) return run_invert(f_path, out);
        if (*apply) return run_apply(phi_path, f_path, force, out);
        if (*dm) return run_dm(f_path, m_letter, out);
        if (*sim) return run_simulate(h_path, u_path, steps, out);
        if (*realize) return run_realize(sys_path, steps, out);
        if (*obs) return run_observable(sys_path, steps, out);
        if (*blowup) return run_blowup(demo_n, out);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const schema_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const not_invertible& e) {
        std::cerr << "NotInvertible: " << e.what() << '\n';
        return exit_domain;
    } catch (const radius_violation& e) {
        std::cerr << "RadiusViolation: " << e.what() << '\n';
        return exit_domain;
    } catch (const precondition_failed& e) {
        std::cerr << "PreconditionFailed: " << e.what() << '\n';
        return exit_domain;
    } catch (const truncation_violation& e) {
        std::cerr << "TruncationViolation: " << e.what() << '\n';
        return exit_domain;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain;
    }
    return exit_usage;
}
