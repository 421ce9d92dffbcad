#pragma once

#include <map>
#include <string>
#include <vector>

#include "nspair/errors.hpp"
#include "nspair/numeric.hpp"

namespace nspair {

// Exponent vector; one entry per variable of the owning polynomial.
using ExpVec = std::vector<unsigned>;

// Multivariate polynomial with exact rational coefficients over a fixed,
// ordered list of variable names. Values are immutable from the caller's
// point of view: all arithmetic returns new objects.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

  static Polynomial constant(std::vector<std::string> variables, const Rat& value);
  static Polynomial variable(std::vector<std::string> variables, std::size_t index);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::map<ExpVec, Rat>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Rat constant_term() const;
  bool is_germ() const { return constant_term() == 0; }
  unsigned total_degree() const;  // 0 for the zero polynomial

  void add_term(const ExpVec& exponents, const Rat& coefficient);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rat& factor) const;

  Polynomial derivative(std::size_t var) const;
  Rat evaluate(const std::vector<Rat>& point) const;

  // g(images[0], ..., images[n-1]); the images must share one variable
  // context, which becomes the context of the result.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  // Canonical text form: terms by ascending total degree, ties in
  // descending lexicographic order of exponent vectors. Parsing the output
  // reproduces the polynomial exactly.
  std::string to_text() const;

  bool operator==(const Polynomial& other) const = default;

private:
  void require_same_context(const Polynomial& other) const;

  std::vector<std::string> vars_;
  std::map<ExpVec, Rat> terms_;
};

// Formal partial derivatives of a source germ, in variable order.
struct GradientGerm {
  std::vector<Polynomial> components;

  bool operator==(const GradientGerm&) const = default;
};

GradientGerm gradient(const Polynomial& germ);

// Recursive-descent parser for
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := rational | var ('^' nat)? | '(' expr ')'
//   rational := int ('/' nat)?
// with insignificant whitespace. Unknown identifiers, malformed syntax and
// zero denominators raise ParseError with a byte position.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables);

// parse_polynomial plus the germ requirement: a nonzero constant term
// raises NotAGermError.
Polynomial parse_germ(const std::string& text, const std::vector<std::string>& variables);

}  // namespace nspair
