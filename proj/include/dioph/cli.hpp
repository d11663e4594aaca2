#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace dioph::cli {

/// Exit codes. Finding (1) is reserved for results that would contradict
/// non-solvability: a solution found at c = -5, an integral point on E_k,
/// or a certificate that fails verification. Automation can therefore trap
/// it separately from usage mistakes.
enum class ExitStatus : int {
  Ok = 0,
  Finding = 1,
  UsageError = 2,
};

/// Write one self-checked JSONL certificate per k in [from, to] (ascending)
/// to out_path; print per-label summary counts to out.
ExitStatus cmd_certify(const mpz_class& from, const mpz_class& to,
                       const std::string& out_path, std::ostream& out, std::ostream& err);

/// Re-verify a JSONL certificate file; reports the first failing line.
ExitStatus cmd_check(const std::string& in_path, std::ostream& out, std::ostream& err);

/// Exhaustive search of the symmetric box |x|,|y|,|z| <= bound for
/// y^2 - xyz + z^2 = x^3 + constant; prints solutions one per line.
ExitStatus cmd_search(const mpz_class& bound, const mpz_class& constant, std::ostream& out,
                      std::ostream& err);

/// Integral-point sweep of E_k for |X| <= x_bound; prints any points found.
ExitStatus cmd_curve(const mpz_class& k, const mpz_class& x_bound, std::ostream& out,
                     std::ostream& err);

/// Parse the expression and print its size h (coefficients made absolute,
/// every variable set to 2).
ExitStatus cmd_polysize(const std::string& expression, std::ostream& out, std::ostream& err);

/// Argument parsing and dispatch for the command-line binary.
int run(int argc, const char* const* argv);

}  // namespace dioph::cli
