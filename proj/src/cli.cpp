#include "dioph/cli.hpp"

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "dioph/curves.hpp"
#include "dioph/obstruction.hpp"
#include "dioph/poly.hpp"
#include "dioph/search.hpp"

namespace dioph::cli {

namespace {

using obstruction::CaseLabel;

constexpr std::array<CaseLabel, 7> kAllLabels = {
    CaseLabel::EvenHalfOdd,    CaseLabel::EvenHalfEven,
    CaseLabel::OddThreeMod4,   CaseLabel::OneMod12,
    CaseLabel::NineMod12,      CaseLabel::FiveMod12_Mod36Kill,
    CaseLabel::SeventeenMod36,
};

std::optional<mpz_class> parse_integer(const std::string& text) {
  size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start >= text.size()) return std::nullopt;
  for (size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
  return mpz_class(text);
}

}  // namespace

ExitStatus cmd_certify(const mpz_class& from, const mpz_class& to,
                       const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (from > to) {
    err << "certify: --from must not exceed --to\n";
    return ExitStatus::UsageError;
  }
  std::ofstream file(out_path);
  if (!file) {
    err << "certify: cannot open " << out_path << " for writing\n";
    return ExitStatus::UsageError;
  }

  std::array<unsigned long, kAllLabels.size()> counts{};
  for (mpz_class k = from; k <= to; ++k) {
    obstruction::Certificate cert;
    try {
      cert = obstruction::certify(k);
    } catch (const obstruction::witness_not_found& e) {
      err << "certify: " << e.what() << "\n";
      return ExitStatus::Finding;
    }
    auto result = obstruction::check_certificate(cert);
    if (!result.ok) {
      err << "certify: self-check failed for k = " << k.get_str() << ": "
          << obstruction::to_string(result.reason) << "\n";
      return ExitStatus::Finding;
    }
    file << obstruction::to_jsonl(cert) << '\n';
    counts[static_cast<size_t>(cert.label)] += 1;
  }
  if (!file.flush()) {
    err << "certify: write to " << out_path << " failed\n";
    return ExitStatus::UsageError;
  }

  mpz_class total = to - from + 1;
  for (size_t i = 0; i < kAllLabels.size(); ++i)
    out << obstruction::to_string(kAllLabels[i]) << " " << counts[i] << "\n";
  out << "certified " << total.get_str() << " values of k; all self-checks passed\n";
  return ExitStatus::Ok;
}

ExitStatus cmd_check(const std::string& in_path, std::ostream& out, std::ostream& err) {
  std::ifstream file(in_path);
  if (!file) {
    err << "check: cannot open " << in_path << "\n";
    return ExitStatus::UsageError;
  }
  unsigned long line_number = 0, checked = 0;
  std::string line;
  while (std::getline(file, line)) {
    ++line_number;
    if (line.empty()) continue;
    obstruction::Certificate cert;
    try {
      cert = obstruction::certificate_from_jsonl(line);
    } catch (const std::exception& e) {
      err << "check: line " << line_number << ": " << e.what() << "\n";
      return ExitStatus::UsageError;
    }
    auto result = obstruction::check_certificate(cert);
    if (!result.ok) {
      err << "check: line " << line_number
          << ": verification failed: " << obstruction::to_string(result.reason) << "\n";
      return ExitStatus::Finding;
    }
    ++checked;
  }
  out << "checked " << checked << " certificates: all valid\n";
  return ExitStatus::Ok;
}

ExitStatus cmd_search(const mpz_class& bound, const mpz_class& constant, std::ostream& out,
                      std::ostream& err) {
  if (bound < 0) {
    err << "search: --bound must be >= 0\n";
    return ExitStatus::UsageError;
  }
  search::Interval range{-bound, bound};
  std::vector<search::Solution> solutions;
  try {
    solutions = search::search_general(constant, {range, range, range});
  } catch (const std::domain_error& e) {
    err << "search: " << e.what() << "\n";
    return ExitStatus::UsageError;
  }
  for (const auto& s : solutions)
    out << "(" << s.x.get_str() << ", " << s.y.get_str() << ", " << s.z.get_str() << ")\n";
  if (constant == -5) {
    if (!solutions.empty()) {
      err << "search: found " << solutions.size()
          << " solution(s) of y^2 - xyz + z^2 = x^3 - 5\n";
      return ExitStatus::Finding;
    }
    err << "search: no solutions with |x|,|y|,|z| <= " << bound.get_str() << "\n";
  }
  return ExitStatus::Ok;
}

ExitStatus cmd_curve(const mpz_class& k, const mpz_class& x_bound, std::ostream& out,
                     std::ostream& err) {
  if (x_bound < 0) {
    err << "curve: --xbound must be >= 0\n";
    return ExitStatus::UsageError;
  }
  auto points = curves::integral_points_Ek(k, x_bound);
  for (const auto& [x, y] : points)
    out << "(" << x.get_str() << ", " << y.get_str() << ")\n";
  if (!points.empty()) {
    err << "curve: E_" << k.get_str() << " has " << points.size()
        << " integral point(s) with |X| <= " << x_bound.get_str() << "\n";
    return ExitStatus::Finding;
  }
  err << "curve: no integral points on E_" << k.get_str() << " with |X| <= "
      << x_bound.get_str() << "\n";
  return ExitStatus::Ok;
}

ExitStatus cmd_polysize(const std::string& expression, std::ostream& out, std::ostream& err) {
  try {
    poly::Polynomial p = poly::parse_polynomial(expression);
    out << poly::size_h(p).get_str() << "\n";
    return ExitStatus::Ok;
  } catch (const poly::parse_error& e) {
    err << "polysize: " << e.what() << "\n";
    return ExitStatus::UsageError;
  } catch (const std::domain_error& e) {
    err << "polysize: " << e.what() << "\n";
    return ExitStatus::UsageError;
  }
}

int run(int argc, const char* const* argv) {
  CLI::App app{"local-obstruction certificates and desk-scale checks for "
               "y^2 - xyz + z^2 = x^3 - 5"};
  app.require_subcommand(1);

  std::string from_text, to_text, out_path;
  auto* certify = app.add_subcommand("certify", "emit certificates for a range of k");
  certify->add_option("--from", from_text, "first k (decimal)")->required();
  certify->add_option("--to", to_text, "last k (decimal)")->required();
  certify->add_option("--out", out_path, "output JSONL path")->required();

  std::string check_path;
  auto* check = app.add_subcommand("check", "verify a certificate file");
  check->add_option("file", check_path, "JSONL certificate file")->required();

  std::string bound_text, constant_text = "-5";
  auto* search_cmd = app.add_subcommand("search", "exhaustive box search");
  search_cmd->add_option("--bound", bound_text, "box half-width")->required();
  search_cmd->add_option("--constant", constant_text, "constant c (default -5)");

  std::string k_text, xbound_text;
  auto* curve = app.add_subcommand("curve", "integral-point sweep of E_k");
  curve->add_option("--k", k_text, "curve parameter k")->required();
  curve->add_option("--xbound", xbound_text, "sweep |X| <= xbound")->required();

  std::string expression;
  auto* polysize = app.add_subcommand("polysize", "size h of a polynomial expression");
  polysize->add_option("expr", expression, "polynomial expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitStatus::UsageError);
  }

  auto integer_or_fail = [&](const std::string& text,
                             const char* what) -> std::optional<mpz_class> {
    auto value = parse_integer(text);
    if (!value) std::cerr << "invalid " << what << ": \"" << text << "\"\n";
    return value;
  };

  ExitStatus status = ExitStatus::UsageError;
  if (*certify) {
    auto from = integer_or_fail(from_text, "--from");
    auto to = integer_or_fail(to_text, "--to");
    if (!from || !to) return static_cast<int>(ExitStatus::UsageError);
    status = cmd_certify(*from, *to, out_path, std::cout, std::cerr);
  } else if (*check) {
    status = cmd_check(check_path, std::cout, std::cerr);
  } else if (*search_cmd) {
    auto bound = integer_or_fail(bound_text, "--bound");
    auto constant = integer_or_fail(constant_text, "--constant");
    if (!bound || !constant) return static_cast<int>(ExitStatus::UsageError);
    status = cmd_search(*bound, *constant, std::cout, std::cerr);
  } else if (*curve) {
    auto k = integer_or_fail(k_text, "--k");
    auto xbound = integer_or_fail(xbound_text, "--xbound");
    if (!k || !xbound) return static_cast<int>(ExitStatus::UsageError);
    status = cmd_curve(*k, *xbound, std::cout, std::cerr);
  } else if (*polysize) {
    status = cmd_polysize(expression, std::cout, std::cerr);
  }
  return static_cast<int>(status);
}

}  // namespace dioph::cli
