// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.
//
// usage: acceptance <path-to-knomial-binary>

#include "knomial/cli.hpp"
#include "knomial/identities.hpp"
#include "knomial/triangle.hpp"

#include "support/row_helpers.hpp"

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace knomial;
using knomial::testing::decimals;
using Strings = std::vector<std::string>;
using Clock = std::chrono::steady_clock;

namespace {

std::string knomial_binary;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Accumulates failures for one criterion.
class Criterion {
public:
    void expect(bool condition, const std::string& what) {
        if (!condition) failures_.push_back(what);
    }
    [[nodiscard]] bool ok() const { return failures_.empty(); }
    [[nodiscard]] const Strings& failures() const { return failures_; }
    std::string note;

private:
    Strings failures_;
};

struct Shell {
    int code;
    std::string out;
};

Shell run_binary(const std::string& args) {
    const std::string command = knomial_binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return {-1, ""};
    std::string out;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// 1. Lines 0..4 of order 5, exact, under a second.
void golden_triangle(Criterion& c) {
    const std::vector<Strings> expected = {
        {"1"},
        {"1", "1", "1", "1", "1"},
        {"1", "2", "3", "4", "5", "4", "3", "2", "1"},
        {"1", "3", "6", "10", "15", "18", "19", "18", "15", "10", "6", "3", "1"},
        {"1", "4", "10", "20", "35", "52", "68", "80", "85", "80", "68", "52", "35", "20", "10", "4", "1"},
    };
    const auto start = Clock::now();
    for (std::int64_t n = 0; n <= 4; ++n) {
        c.expect(decimals(row(5, n)) == expected[static_cast<std::size_t>(n)], "line " + std::to_string(n));
    }
    const Row four = row(5, 4);
    c.expect(four.size() == 17 && four.at(8) == 85, "line 4 has 17 entries with center 85");
    c.expect(row(5, 3).size() == 13, "line 3 has 13 entries");
    const double elapsed = seconds_since(start);
    c.expect(elapsed < 1.0, "runtime under 1 s");
    c.note = std::to_string(elapsed) + " s";
}

// 2. C5_3^7 = 18 = 4 + 5 + 4 + 3 + 2 over line 2.
void worked_example(Criterion& c) {
    c.expect(coefficient({5, 3, 7}) == 18, "coefficient(5,3,7) = 18");
    const Row two = row(5, 2);
    const std::vector<int> terms{4, 5, 4, 3, 2};
    BigInt sum{0};
    for (std::int64_t i = 0; i < 5; ++i) {
        const BigInt term = two.at(3 + i);
        c.expect(term == terms[static_cast<std::size_t>(i)], "line 2 entry h=" + std::to_string(3 + i));
        sum += term;
    }
    c.expect(sum == 18, "window over line 2 sums to 18");
    c.expect(check_recurrence(5, 3).passed(), "recurrence holds on line 3");
}

// 3. Recurrence = oracle = closed form for k in 2..6, n in 0..12, every h.
void triple_agreement(Criterion& c) {
    const auto start = Clock::now();
    std::size_t compared = 0;
    for (std::int64_t k = 2; k <= 6; ++k) {
        for (std::int64_t n = 0; n <= 12; ++n) {
            const Row line = row(k, n);
            const DensePolynomial oracle = expand_power_oracle(k, n);
            c.expect(oracle.degree() + 1 == static_cast<std::int64_t>(line.size()),
                     "width k=" + std::to_string(k) + " n=" + std::to_string(n));
            for (std::int64_t h = 0; h <= (k - 1) * n; ++h) {
                const BigInt window = line.at(h);
                if (window != oracle.coefficient(h) || window != closed_form_coefficient(k, n, h)) {
                    c.expect(false, "k=" + std::to_string(k) + " n=" + std::to_string(n) + " h=" + std::to_string(h));
                }
                ++compared;
            }
        }
    }
    const double elapsed = seconds_since(start);
    c.expect(elapsed < 30.0, "runtime under 30 s");
    c.note = std::to_string(compared) + " coefficients, " + std::to_string(elapsed) + " s";
}

// 4. Property suite for k in 2..8, lines <= 25, convolution lines <= 12.
void property_suite(Criterion& c) {
    const auto start = Clock::now();
    constexpr std::array required{PropertyId::P1, PropertyId::P2, PropertyId::P3, PropertyId::P4,
                                  PropertyId::P6, PropertyId::P7, PropertyId::P8, PropertyId::P9};
    for (std::int64_t k = 2; k <= 8; ++k) {
        const VerificationReport report = verify_all(k, 25, 12);
        for (PropertyId id : required) {
            const auto it = report.results.find(id);
            c.expect(it != report.results.end() && it->second.passed(),
                     std::string(property_name(id)) + " at k=" + std::to_string(k));
        }
        // P7 value pinned directly: 1 for odd k, 0 for even k once n >= 1.
        for (std::int64_t n = 0; n <= 25; ++n) {
            const Row line = row(k, n);
            BigInt alternating{0};
            for (std::int64_t h = 0; h < static_cast<std::int64_t>(line.size()); ++h) {
                alternating += (h % 2 == 0 ? 1 : -1) * line.at(h);
            }
            const int expected = (k % 2 == 1 || n == 0) ? 1 : 0;
            c.expect(alternating == expected, "alternating sum k=" + std::to_string(k) + " n=" + std::to_string(n));
        }
    }
    const double elapsed = seconds_since(start);
    c.expect(elapsed < 120.0, "runtime under 2 min");
    c.note = std::to_string(elapsed) + " s";
}

// 5. Row sum of line 4 at k=5 is 625; squares of line 2 sum to 85, the center of line 4.
void spot_values(Criterion& c) {
    const Row four = row(5, 4);
    BigInt sum{0};
    for (const BigInt& v : four.coefficients()) sum += v;
    c.expect(sum == 625 && sum == big_pow(5, 4), "row sum 625");
    const Row two = row(5, 2);
    BigInt squares{0};
    for (const BigInt& v : two.coefficients()) squares += v * v;
    c.expect(squares == 85, "sum of squares 85");
    c.expect(coefficient({5, 4, 8}) == 85, "center of line 4 is 85");
    c.expect(check_row_sum(5, 4).passed() && check_sum_of_squares(5, 2).passed(), "checks pass");
}

// 6. Line 5000 of order 3 under 10 s; window beats oracle at n = 500 with equal results.
void performance(Criterion& c) {
    auto start = Clock::now();
    const Row big = row(3, 5000);
    const double big_seconds = seconds_since(start);
    c.expect(big_seconds < 10.0, "line 5000 under 10 s");
    c.expect(big.size() == 10001 && big.at(1) == 5000, "line 5000 shape");
    BigInt big_sum{0};
    for (const BigInt& v : big.coefficients()) big_sum += v;
    c.expect(big_sum == big_pow(3, 5000), "line 5000 sums to 3^5000");

    double window_best = 1e9;
    double oracle_best = 1e9;
    for (int rep = 0; rep < 3; ++rep) {
        start = Clock::now();
        const Row window = row(3, 500);
        window_best = std::min(window_best, seconds_since(start));
        start = Clock::now();
        const DensePolynomial oracle = expand_power_oracle(3, 500);
        oracle_best = std::min(oracle_best, seconds_since(start));
        c.expect(std::vector<BigInt>(window.coefficients().begin(), window.coefficients().end()) ==
                     oracle.coefficients(),
                 "window and oracle agree at n=500");
    }
    c.expect(window_best < oracle_best, "window faster than oracle at n=500");
    c.note = "n=5000 " + std::to_string(big_seconds) + " s; n=500 window " + std::to_string(window_best) +
             " s vs oracle " + std::to_string(oracle_best) + " s";
}

// 7. CLI schemas and exit codes.
void cli_contract(Criterion& c) {
    const Shell csv = run_binary("row --k 5 --n 2 --format csv");
    c.expect(csv.code == 0 && csv.out == "1,2,3,4,5,4,3,2,1\n", "csv row");

    const Shell json = run_binary("row --k 3 --n 2 --format json");
    c.expect(json.code == 0 && json.out == "{\"k\":3,\"n\":2,\"coefficients\":[\"1\",\"2\",\"3\",\"2\",\"1\"]}\n",
             "json row bytes");

    const Shell big_json = run_binary("row --k 4 --n 60 --format json");
    if (big_json.code == 0 && !big_json.out.empty()) {
        const std::string body = big_json.out.substr(0, big_json.out.size() - 1);
        c.expect(nlohmann::ordered_json::parse(body).dump() == body, "json round-trip");
    } else {
        c.expect(false, "json row k=4 n=60");
    }

    const Shell coeff = run_binary("coeff --k 5 --n 3 --h 99");
    c.expect(coeff.code == 0 && coeff.out == "0\n", "out-of-range coefficient");

    const Shell triangle_csv = run_binary("triangle --k 4 --n-max 2 --format csv");
    c.expect(triangle_csv.code == 0 && triangle_csv.out == "1\n1,1,1,1\n1,2,3,4,3,2,1\n", "csv triangle");

    c.expect(run_binary("verify --k 5 --n-max 10 --m-max 5").code == 0, "all-pass verify exits 0");
    c.expect(run_binary("verify --k 6 --n-max 8 --m-max 4").code == 0, "even-k verify exits 0");

    std::ostringstream sink;
    c.expect(cli::cmd_verify(5, 10, 5, sink, VerifyOptions{PropertyId::P6, true}) == cli::exit_failure,
             "corrupted-expectation verify exits 1");
    c.expect(sink.str().find("counterexample") != std::string::npos, "counterexample printed");

    c.expect(run_binary("verify --k 1").code == 2, "invalid k exits 2");
    c.expect(run_binary("row --k 5 --n 2 --no-such-flag").code == 2, "unknown flag exits 2");
    c.expect(run_binary("row --k 5 --n 2 --format yaml").code == 2, "unknown format exits 2");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-knomial>\n";
        return 2;
    }
    knomial_binary = argv[1];

    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
        {"AC1 golden order-5 triangle", golden_triangle},
        {"AC2 worked example C5_3^7 = 18", worked_example},
        {"AC3 triple agreement k=2..6 n=0..12", triple_agreement},
        {"AC4 property suite k=2..8 n<=25", property_suite},
        {"AC5 spot values 625 and 85", spot_values},
        {"AC6 performance sanity", performance},
        {"AC7 CLI contract", cli_contract},
    };

    bool all = true;
    for (const auto& [name, body] : criteria) {
        Criterion c;
        try {
            body(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        all = all && c.ok();
        std::cout << (c.ok() ? "PASS " : "FAIL ") << name;
        if (!c.note.empty()) std::cout << "  (" << c.note << ")";
        std::cout << '\n';
        for (const auto& failure : c.failures()) std::cout << "     - " << failure << '\n';
    }
    std::cout << (all ? "all acceptance criteria passed" : "acceptance FAILED") << '\n';
    return all ? 0 : 1;
}
