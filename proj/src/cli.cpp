#include "knomial/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace knomial::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

RenderSpec render_spec_from(const std::string& format_name) {
    const auto format = parse_format(format_name);
    if (!format) throw UsageError("unknown format '" + format_name + "' (expected text, csv or json)");
    return RenderSpec{*format, Alignment::center};
}

void print_counterexample(std::ostream& out, const Counterexample& c) {
    out << "    counterexample: k=" << c.query.k << " line " << c.query.n << " h=" << c.query.h
        << ": expected " << to_decimal(c.expected) << ", got " << to_decimal(c.actual) << " (" << c.detail
        << ")\n";
}

}  // namespace

int cmd_row(std::int64_t k, std::int64_t n, const RenderSpec& render, std::ostream& out) {
    const Row line = row(k, n);
    switch (render.format) {
        case Format::csv: out << render_csv(line) << '\n'; break;
        case Format::json: out << render_json(line) << '\n'; break;
        case Format::text: out << render_text(line, TextLayout::for_line(line)) << '\n'; break;
    }
    return exit_success;
}

int cmd_coeff(std::int64_t k, std::int64_t n, std::int64_t h, std::ostream& out) {
    out << to_decimal(coefficient({k, n, h})) << '\n';
    return exit_success;
}

int cmd_triangle(std::int64_t k, std::int64_t n_max, const RenderSpec& render, std::ostream& out) {
    const Triangle lines = triangle(k, n_max);
    // Text needs the widest line up front to center the others under it.
    std::optional<TextLayout> layout;
    if (render.format == Format::text) layout = TextLayout::for_triangle(k, n_max);

    for (const Row& line : lines) {
        switch (render.format) {
            case Format::csv: out << render_csv(line) << '\n'; break;
            case Format::json: out << render_json(line) << '\n'; break;
            case Format::text: out << render_text(line, *layout) << '\n'; break;
        }
    }
    return exit_success;
}

int cmd_verify(std::int64_t k, std::int64_t n_max, std::int64_t m_max, std::ostream& out,
               const VerifyOptions& options) {
    const VerificationReport report = verify_all(k, n_max, m_max, options);
    const bool odd = make_params(k).parity() == Parity::odd;

    out << "verify k=" << k << ", lines 0.." << n_max << ", convolution lines 0.." << m_max << '\n';
    for (const auto& [id, result] : report.results) {
        out << std::left << std::setw(12) << property_name(id) << std::setw(6)
            << (result.passed() ? "PASS" : "FAIL") << property_description(id);
        if (id == PropertyId::P7) out << (odd ? " (expect 1)" : " (expect 0 for n >= 1)");
        out << '\n';
        if (result.counterexample) print_counterexample(out, *result.counterexample);
    }
    const bool ok = report.all_passed();
    out << (ok ? "all properties passed" : "some properties FAILED") << '\n';
    return ok ? exit_success : exit_failure;
}

BenchStrategies BenchStrategies::standard() {
    return BenchStrategies{
        [](std::int64_t k, std::int64_t n) {
            const Row line = row(k, n);
            return std::vector<BigInt>(line.coefficients().begin(), line.coefficients().end());
        },
        [](std::int64_t k, std::int64_t n) { return expand_power_oracle(k, n).coefficients(); },
    };
}

int cmd_bench(std::int64_t k, std::int64_t n, std::int64_t repetitions, std::ostream& out,
              const BenchStrategies& strategies) {
    const KNomialParams params = make_params(k);
    const std::int64_t width = row_width(params, n);
    if (repetitions < 1) throw std::domain_error("repetitions must be at least 1");

    using clock = std::chrono::steady_clock;
    const auto timed = [](const LineStrategy& strategy, std::int64_t order, std::int64_t line,
                          std::vector<BigInt>& result) {
        const auto start = clock::now();
        result = strategy(order, line);
        return std::chrono::duration<double>(clock::now() - start).count();
    };

    out << "bench k=" << k << ", line " << n << " (" << width << " entries), " << repetitions << " run(s)\n";
    out << "strategy  run       seconds\n";
    double best_window = std::numeric_limits<double>::infinity();
    double best_oracle = std::numeric_limits<double>::infinity();
    for (std::int64_t rep = 1; rep <= repetitions; ++rep) {
        std::vector<BigInt> window_line;
        std::vector<BigInt> oracle_line;
        const double window_seconds = timed(strategies.window, k, n, window_line);
        const double oracle_seconds = timed(strategies.oracle, k, n, oracle_line);
        if (window_line != oracle_line) {
            out << "strategies disagree on line " << n << " (run " << rep << ")\n";
            return exit_failure;
        }
        best_window = std::min(best_window, window_seconds);
        best_oracle = std::min(best_oracle, oracle_seconds);
        out << std::fixed << std::setprecision(6);
        out << "window  " << std::setw(5) << rep << std::setw(14) << window_seconds << '\n';
        out << "oracle  " << std::setw(5) << rep << std::setw(14) << oracle_seconds << '\n';
    }
    out << "best    window " << best_window << " s, oracle " << best_oracle << " s";
    if (best_window > 0) out << std::setprecision(2) << ", speedup " << best_oracle / best_window << "x";
    out << "\nresults equal\n";
    out.unsetf(std::ios::floatfield);
    return exit_success;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact k-nomial coefficients and the triangle of numbers of order k", "knomial"};
    app.require_subcommand(1);

    std::int64_t k = 0;
    std::int64_t n = 0;
    std::int64_t h = 0;
    std::int64_t n_max = 0;
    std::int64_t m_max = 5;
    std::int64_t repetitions = 1;
    std::string format = "text";

    auto* row_cmd = app.add_subcommand("row", "print line n");
    row_cmd->add_option("--k", k, "order k (>= 2)")->required();
    row_cmd->add_option("--n", n, "line index")->required();
    row_cmd->add_option("--format", format, "text, csv or json");

    auto* coeff_cmd = app.add_subcommand("coeff", "print Ck_n^h (0 outside the line)");
    coeff_cmd->add_option("--k", k, "order k (>= 2)")->required();
    coeff_cmd->add_option("--n", n, "line index")->required();
    // -h would shadow --h.
    coeff_cmd->set_help_flag("--help", "Print this help message and exit");
    coeff_cmd->add_option("--h", h, "position, any integer")->required();

    auto* triangle_cmd = app.add_subcommand("triangle", "print lines 0..n-max");
    triangle_cmd->add_option("--k", k, "order k (>= 2)")->required();
    triangle_cmd->add_option("--n-max", n_max, "last line")->required();
    triangle_cmd->add_option("--format", format, "text, csv or json (json is one object per line)");

    auto* verify_cmd = app.add_subcommand("verify", "check every identity of the triangle");
    n_max = 10;
    verify_cmd->add_option("--k", k, "order k (>= 2)")->required();
    verify_cmd->add_option("--n-max", n_max, "last line checked")->capture_default_str();
    verify_cmd->add_option("--m-max", m_max, "last line pair for the convolution identity")->capture_default_str();

    auto* bench_cmd = app.add_subcommand("bench", "time window sums against polynomial expansion");
    bench_cmd->add_option("--k", k, "order k (>= 2)")->required();
    bench_cmd->add_option("--n", n, "line index")->required();
    bench_cmd->add_option("--repetitions", repetitions, "runs per strategy")->capture_default_str();

    // CLI11 consumes arguments from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "knomial: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (row_cmd->parsed()) return cmd_row(k, n, render_spec_from(format), out);
        if (coeff_cmd->parsed()) return cmd_coeff(k, n, h, out);
        if (triangle_cmd->parsed()) return cmd_triangle(k, n_max, render_spec_from(format), out);
        if (verify_cmd->parsed()) return cmd_verify(k, n_max, m_max, out);
        if (bench_cmd->parsed()) return cmd_bench(k, n, repetitions, out);
    } catch (const UsageError& e) {
        err << "knomial: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "knomial: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "knomial: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}

}  // namespace knomial::cli
