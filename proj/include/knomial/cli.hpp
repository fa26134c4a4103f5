#pragma once

// Command-line front end:
//   knomial <row|coeff|triangle|verify|bench> [--k INT] [--n INT] [--h INT]
//           [--n-max INT] [--m-max INT] [--format text|csv|json] [--repetitions INT]
//
// Exit codes: 0 success, 1 verification or equality failure, 2 usage error.

#include "knomial/bigint.hpp"
#include "knomial/identities.hpp"
#include "knomial/render.hpp"

#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace knomial::cli {

enum ExitCode : int { exit_success = 0, exit_failure = 1, exit_usage = 2 };

/// Parses `args` (without the program name) and dispatches.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

int cmd_row(std::int64_t k, std::int64_t n, const RenderSpec& render, std::ostream& out);
int cmd_coeff(std::int64_t k, std::int64_t n, std::int64_t h, std::ostream& out);
int cmd_triangle(std::int64_t k, std::int64_t n_max, const RenderSpec& render, std::ostream& out);
int cmd_verify(std::int64_t k, std::int64_t n_max, std::int64_t m_max, std::ostream& out,
               const VerifyOptions& options = {});

/// Produces the coefficients of line n for order k.
using LineStrategy = std::function<std::vector<BigInt>(std::int64_t k, std::int64_t n)>;

struct BenchStrategies {
    LineStrategy window;
    LineStrategy oracle;

    /// Window-sum generation against repeated schoolbook multiplication.
    static BenchStrategies standard();
};

int cmd_bench(std::int64_t k, std::int64_t n, std::int64_t repetitions, std::ostream& out,
              const BenchStrategies& strategies = BenchStrategies::standard());

}  // namespace knomial::cli
