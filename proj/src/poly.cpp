#include "dioph/poly.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <numeric>
#include <utility>

namespace dioph::poly {

bool Polynomial::GradedLexDesc::operator()(const Exponents& a, const Exponents& b) const {
  unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
  unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
  if (da != db) return da > db;
  return a > b;
}

Polynomial Polynomial::constant(const mpz_class& c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(Exponents{}, c);
  return p;
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, 1);
  return p;
}

void Polynomial::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
  // drop variables that no longer occur in any term
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [exps, coeff] : terms_)
    for (size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > 0) used[i] = true;
  if (std::find(used.begin(), used.end(), false) == used.end()) return;

  std::vector<std::string> kept;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) kept.push_back(vars_[i]);
  TermMap compacted;
  for (const auto& [exps, coeff] : terms_) {
    Exponents e;
    for (size_t i = 0; i < exps.size(); ++i)
      if (used[i]) e.push_back(exps[i]);
    compacted.emplace(std::move(e), coeff);
  }
  vars_ = std::move(kept);
  terms_ = std::move(compacted);
}

std::vector<std::string> Polynomial::merge_vars(const std::vector<std::string>& a,
                                                const std::vector<std::string>& b) {
  std::vector<std::string> merged;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
  return merged;
}

Polynomial Polynomial::aligned_to(const std::vector<std::string>& vars) const {
  std::vector<size_t> index(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    index[i] = static_cast<size_t>(it - vars.begin());
  }
  Polynomial out;
  out.vars_ = vars;
  for (const auto& [exps, coeff] : terms_) {
    Exponents e(vars.size(), 0);
    for (size_t i = 0; i < exps.size(); ++i) e[index[i]] = exps[i];
    out.terms_.emplace(std::move(e), coeff);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [exps, coeff] : out.terms_) coeff = -coeff;
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  auto vars = merge_vars(vars_, rhs.vars_);
  Polynomial a = aligned_to(vars);
  Polynomial b = rhs.aligned_to(vars);
  for (const auto& [exps, coeff] : b.terms_) {
    auto [it, inserted] = a.terms_.emplace(exps, coeff);
    if (!inserted) it->second += coeff;
  }
  a.normalize();
  return a;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  auto vars = merge_vars(vars_, rhs.vars_);
  Polynomial a = aligned_to(vars);
  Polynomial b = rhs.aligned_to(vars);
  Polynomial out;
  out.vars_ = vars;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(vars.size());
      for (size_t i = 0; i < vars.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.terms_.emplace(std::move(e), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  out.normalize();
  return out;
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    if (e >>= 1) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  // the normalized representation is canonical
  return vars_ == rhs.vars_ && terms_ == rhs.terms_;
}

mpz_class Polynomial::eval(const std::map<std::string, mpz_class>& point) const {
  for (const auto& v : vars_)
    if (!point.count(v)) throw std::invalid_argument("eval: no assignment for variable " + v);
  mpz_class total = 0;
  for (const auto& [exps, coeff] : terms_) {
    mpz_class term = coeff;
    for (size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      mpz_class power;
      mpz_pow_ui(power.get_mpz_t(), point.at(vars_[i]).get_mpz_t(), exps[i]);
      term *= power;
    }
    total += term;
  }
  return total;
}

std::string Polynomial::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exps, coeff] : terms_) {
    mpz_class mag = abs(coeff);
    if (first) {
      if (coeff < 0) out += "-";
      first = false;
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    std::vector<std::string> parts;
    bool has_var = false;
    for (size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      has_var = true;
      parts.push_back(exps[i] == 1 ? vars_[i] : vars_[i] + "^" + std::to_string(exps[i]));
    }
    if (!has_var || mag != 1) parts.insert(parts.begin(), mag.get_str());
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out += "*";
      out += parts[i];
    }
  }
  return out;
}

mpz_class eval(const Polynomial& p, const std::map<std::string, mpz_class>& point) {
  return p.eval(point);
}

mpz_class size_h(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("size_h: undefined for the zero polynomial");
  mpz_class total = 0;
  for (const auto& [exps, coeff] : p.terms_) {
    unsigned long degree = std::accumulate(exps.begin(), exps.end(), 0ul);
    total += abs(coeff) << degree;
  }
  return total;
}

namespace {

enum class TokenType { Integer, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  TokenType type;
  std::string text;
  size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& input) : input_(input) {}

  Token next() {
    while (i_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[i_]))) ++i_;
    size_t start = i_;
    if (i_ >= input_.size()) return {TokenType::End, "", start};
    char c = input_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[i_]))) ++i_;
      return {TokenType::Integer, input_.substr(start, i_ - start), start};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i_ < input_.size() &&
             (std::isalnum(static_cast<unsigned char>(input_[i_])) || input_[i_] == '_'))
        ++i_;
      return {TokenType::Ident, input_.substr(start, i_ - start), start};
    }
    ++i_;
    switch (c) {
      case '+': return {TokenType::Plus, "+", start};
      case '-': return {TokenType::Minus, "-", start};
      case '*': return {TokenType::Star, "*", start};
      case '^': return {TokenType::Caret, "^", start};
      case '(': return {TokenType::LParen, "(", start};
      case ')': return {TokenType::RParen, ")", start};
      default: throw parse_error(std::string("unexpected character '") + c + "'", start);
    }
  }

 private:
  const std::string& input_;
  size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& input) : lexer_(input) { advance(); }

  Polynomial parse() {
    Polynomial p = expr();
    if (tok_.type != TokenType::End) throw parse_error("trailing input", tok_.pos);
    return p;
  }

 private:
  Lexer lexer_;
  Token tok_;

  void advance() { tok_ = lexer_.next(); }

  Polynomial expr() {
    bool negate = false;
    if (tok_.type == TokenType::Plus || tok_.type == TokenType::Minus) {
      negate = tok_.type == TokenType::Minus;
      advance();
    }
    Polynomial p = term();
    if (negate) p = -p;
    while (tok_.type == TokenType::Plus || tok_.type == TokenType::Minus) {
      bool sub = tok_.type == TokenType::Minus;
      advance();
      Polynomial t = term();
      p = sub ? p - t : p + t;
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (tok_.type == TokenType::Star) {
      advance();
      p = p * factor();
    }
    return p;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (tok_.type == TokenType::Caret) {
      size_t caret_pos = tok_.pos;
      advance();
      if (tok_.type != TokenType::Integer)
        throw parse_error("exponent must be a non-negative integer literal",
                          tok_.type == TokenType::End ? caret_pos + 1 : tok_.pos);
      mpz_class e(tok_.text);
      if (!e.fits_ulong_p()) throw parse_error("exponent too large", tok_.pos);
      advance();
      return base.pow(e.get_ui());
    }
    return base;
  }

  Polynomial atom() {
    switch (tok_.type) {
      case TokenType::Integer: {
        Polynomial p = Polynomial::constant(mpz_class(tok_.text));
        advance();
        return p;
      }
      case TokenType::Ident: {
        Polynomial p = Polynomial::variable(tok_.text);
        advance();
        return p;
      }
      case TokenType::LParen: {
        advance();
        Polynomial p = expr();
        if (tok_.type != TokenType::RParen) throw parse_error("expected ')'", tok_.pos);
        advance();
        return p;
      }
      default:
        throw parse_error("expected an integer, identifier or '('", tok_.pos);
    }
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) { return Parser(text).parse(); }

}  // namespace dioph::poly
