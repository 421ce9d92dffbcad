#pragma once

#include <string>
#include <vector>

#include "nspair/errors.hpp"
#include "nspair/polynomial.hpp"

namespace nspair {

// Local monomial order used throughout: smaller total degree is LARGER
// (so 1 is the largest monomial), ties broken lexicographically with the
// last declared variable most significant. Returns +1 if a > b, -1 if
// a < b, 0 if equal.
int local_compare(const ExpVec& a, const ExpVec& b);

struct LeadingTerm {
  ExpVec monomial;
  Rat coefficient;
};

// Leading term with respect to local_compare; the argument must be nonzero.
LeadingTerm leading_term(const Polynomial& p);

unsigned ecart(const Polynomial& p);

// Mora standard basis of the ideal generated by the (nonzero) generators in
// the localized ring at the origin. Weak normal forms are computed with the
// ecart-guided reducer set, so the loop terminates for local orders.
std::vector<Polynomial> standard_basis(const std::vector<Polynomial>& generators);

// Finite-dimensional local algebra data for a zero-dimensional ideal.
struct LocalAlgebra {
  std::vector<std::string> variables;
  std::vector<Polynomial> basis_polys;   // standard basis of the ideal
  std::vector<ExpVec> monomial_basis;    // staircase complement, ascending degree
  unsigned max_basis_degree = 0;         // largest total degree in monomial_basis

  std::size_t dimension() const { return monomial_basis.size(); }
};

// Builds the quotient data. Throws NonIsolatedError when the leading terms
// contain no pure power of some variable (infinite-dimensional quotient).
LocalAlgebra local_algebra(const std::vector<Polynomial>& generators);

// Canonical representative of p in the span of the monomial basis. Every
// monomial of degree exceeding max_basis_degree lies in the ideal (the
// quotient's maximal ideal is nilpotent of that index), so such terms are
// dropped outright and the rest reduced against the standard basis.
Polynomial normal_form(const LocalAlgebra& algebra, const Polynomial& p);

}  // namespace nspair
