#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dioph::poly {

/// Syntax error with the byte offset into the input where it was detected.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

/// Sparse multivariate polynomial over the integers. Variables are declared
/// in sorted order; terms are kept in graded-lexicographic order (total
/// degree first, ties broken by the declared variable order). Zero
/// coefficients and unused variables are never stored, so equal polynomials
/// have identical representations and renderings.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned long>;

  struct GradedLexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, mpz_class, GradedLexDesc>;

  Polynomial() = default;  // the zero polynomial
  static Polynomial constant(const mpz_class& c);
  static Polynomial variable(const std::string& name);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial pow(unsigned long e) const;

  /// Mathematical equality (insensitive to variable declaration order).
  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  /// Exact value at the point; every variable of the polynomial must be
  /// assigned (std::invalid_argument otherwise). Extra assignments are fine.
  mpz_class eval(const std::map<std::string, mpz_class>& point) const;

  /// Canonical rendering in the input grammar; parsing it back is the
  /// identity.
  std::string render() const;

 private:
  std::vector<std::string> vars_;  // sorted, no duplicates
  TermMap terms_;                  // exponent vectors aligned with vars_

  void normalize();
  Polynomial aligned_to(const std::vector<std::string>& vars) const;
  static std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                             const std::vector<std::string>& b);

  friend mpz_class size_h(const Polynomial& p);
};

/// Parse the explicit-operator grammar: integer literals, identifiers,
/// `+ - * ^` and parentheses; `^` takes a non-negative integer literal;
/// whitespace is insignificant; implicit multiplication is a syntax error.
Polynomial parse_polynomial(const std::string& text);

mpz_class eval(const Polynomial& p, const std::map<std::string, mpz_class>& point);

/// The size measure: all coefficients replaced by their absolute values,
/// then evaluated at 2 for every variable. Undefined for the zero
/// polynomial (std::domain_error).
mpz_class size_h(const Polynomial& p);

}  // namespace dioph::poly
