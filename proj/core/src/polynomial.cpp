#include "nspair/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace nspair {

namespace {

unsigned degree_of(const ExpVec& e) {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

// Graded order used by the canonical printer: lower total degree first,
// then descending lexicographic on exponent vectors.
bool print_before(const ExpVec& a, const ExpVec& b) {
  const unsigned da = degree_of(a);
  const unsigned db = degree_of(b);
  if (da != db) return da < db;
  return a > b;
}

}  // namespace

Polynomial Polynomial::constant(std::vector<std::string> variables, const Rat& value) {
  Polynomial p(std::move(variables));
  p.add_term(ExpVec(p.nvars(), 0), value);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::size_t index) {
  Polynomial p(std::move(variables));
  if (index >= p.nvars()) throw DimensionError("variable index out of range");
  ExpVec e(p.nvars(), 0);
  e[index] = 1;
  p.add_term(e, Rat(1));
  return p;
}

Rat Polynomial::constant_term() const {
  auto it = terms_.find(ExpVec(nvars(), 0));
  return it == terms_.end() ? Rat(0) : it->second;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
  return d;
}

void Polynomial::add_term(const ExpVec& exponents, const Rat& coefficient) {
  if (exponents.size() != nvars()) throw DimensionError("exponent vector length mismatch");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_same_context(const Polynomial& other) const {
  if (vars_ != other.vars_)
    throw DimensionError("polynomial operands use different variable lists");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_context(other);
  Polynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_context(other);
  Polynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_context(other);
  Polynomial out(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      ExpVec e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const { return scaled(Rat(-1)); }

Polynomial Polynomial::scaled(const Rat& factor) const {
  Polynomial out(vars_);
  if (factor == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * factor);
  return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars()) throw DimensionError("derivative variable index out of range");
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    ExpVec d = e;
    --d[var];
    out.add_term(d, c * Rat(e[var]));
  }
  return out;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
  if (point.size() != nvars()) throw DimensionError("evaluation point has wrong length");
  Rat total(0);
  for (const auto& [e, c] : terms_) {
    Rat v = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned j = 0; j < e[i]; ++j) v *= point[i];
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars()) throw DimensionError("substitution needs one image per variable");
  std::vector<std::string> target_vars = images.empty() ? vars_ : images[0].variables();
  for (const Polynomial& g : images) {
    if (g.variables() != target_vars)
      throw DimensionError("substitution images use different variable lists");
  }
  Polynomial out(target_vars);
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned j = 0; j < e[i]; ++j) term = term * images[i];
    }
    out = out + term;
  }
  return out;
}

std::string Polynomial::to_text() const {
  if (terms_.empty()) return "0";

  std::vector<const std::pair<const ExpVec, Rat>*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](const auto* a, const auto* b) { return print_before(a->first, b->first); });

  std::ostringstream out;
  bool first = true;
  for (const auto* t : order) {
    const ExpVec& e = t->first;
    Rat c = t->second;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
      first = false;
    } else {
      if (c < 0) {
        out << " - ";
        c = -c;
      } else {
        out << " + ";
      }
    }

    // Factors of a monomial appear in ascending exponent order (declaration
    // order on ties), so x^2+x^2*y prints as "x^2 + y*x^2".
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) support.push_back(i);
    std::stable_sort(support.begin(), support.end(),
                     [&e](std::size_t a, std::size_t b) { return e[a] < e[b]; });
    std::vector<std::string> factors;
    for (std::size_t i : support) {
      if (e[i] == 1)
        factors.push_back(vars_[i]);
      else
        factors.push_back(vars_[i] + "^" + std::to_string(e[i]));
    }

    if (factors.empty()) {
      out << to_string(c);
      continue;
    }
    if (c != 1) out << to_string(c) << "*";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out << "*";
      out << factors[i];
    }
  }
  return out.str();
}

GradientGerm gradient(const Polynomial& germ) {
  GradientGerm g;
  g.components.reserve(germ.nvars());
  for (std::size_t i = 0; i < germ.nvars(); ++i) g.components.push_back(germ.derivative(i));
  return g;
}

namespace {

class Parser {
public:
  Parser(const std::string& text, const std::vector<std::string>& variables)
      : text_(text), vars_(variables) {}

  Polynomial run() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip_space();
    if (!at_end()) throw ParseError("unexpected trailing input", pos_);
    return p;
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool negate = false;
    skip_space();
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial p = term();
    if (negate) p = -p;
    for (;;) {
      skip_space();
      if (accept('+'))
        p = p + term();
      else if (accept('-'))
        p = p - term();
      else
        return p;
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }

  Polynomial factor() {
    skip_space();
    if (at_end()) throw ParseError("expected a factor", pos_);
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      skip_space();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable_power();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Polynomial rational() {
    bool negate = false;
    if (accept('-')) {
      skip_space();
      negate = true;
    }
    Int num = digits("expected digits");
    Rat value(num);
    skip_space();
    if (accept('/')) {
      skip_space();
      std::size_t den_pos = pos_;
      Int den = digits("expected denominator digits");
      if (den == 0) throw ParseError("zero denominator", den_pos);
      value = Rat(num, den);
    }
    if (negate) value = -value;
    return Polynomial::constant(vars_, value);
  }

  Int digits(const char* message) {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(message, pos_);
    Int v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return v;
  }

  Polynomial variable_power() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", start);
    std::size_t index = static_cast<std::size_t>(it - vars_.begin());

    unsigned power = 1;
    skip_space();
    if (accept('^')) {
      skip_space();
      std::size_t exp_pos = pos_;
      Int e = digits("expected exponent digits");
      if (e > 4096) throw ParseError("exponent too large", exp_pos);
      power = static_cast<unsigned>(e);
    }

    Polynomial p(vars_);
    ExpVec e(vars_.size(), 0);
    e[index] = power;
    p.add_term(e, Rat(1));
    return p;
  }

  const std::string& text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables) {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].empty()) throw ParseError("empty variable name", 0);
    for (std::size_t j = i + 1; j < variables.size(); ++j) {
      if (variables[i] == variables[j])
        throw ParseError("duplicate variable name '" + variables[i] + "'", 0);
    }
  }
  return Parser(text, variables).run();
}

Polynomial parse_germ(const std::string& text, const std::vector<std::string>& variables) {
  Polynomial p = parse_polynomial(text, variables);
  Rat c0 = p.constant_term();
  if (c0 != 0)
    throw NotAGermError("expression has nonzero constant term " + to_string(c0) +
                        "; it does not vanish at the origin");
  return p;
}

}  // namespace nspair
