#include "nspair/germ_degree.hpp"

#include <algorithm>
#include <sstream>

#include "nspair/exact_linalg.hpp"
#include "nspair/int_matrix.hpp"
#include "nspair/local_algebra.hpp"

namespace nspair {

namespace {

unsigned degree_of(const ExpVec& e) {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

std::string monomial_text(const std::vector<std::string>& vars, const ExpVec& e) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) support.push_back(i);
  if (support.empty()) return "1";
  std::stable_sort(support.begin(), support.end(),
                   [&e](std::size_t a, std::size_t b) { return e[a] < e[b]; });
  std::string out;
  for (std::size_t i : support) {
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& m,
                            const std::vector<std::string>& vars) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(vars, Rat(1));
  if (n == 1) return m[0][0];
  Polynomial det(vars);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1].push_back(m[r][c]);
      }
    }
    Polynomial term = m[0][j] * poly_determinant(minor, vars);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace

std::string to_string(DegreeMethod m) {
  return m == DegreeMethod::Elk ? "ELK" : "winding";
}

DegreeResult elk_degree(const Polynomial& g) {
  if (g.nvars() == 0) throw DimensionError("germ needs at least one variable");
  if (!g.is_germ())
    throw NotAGermError("expression has nonzero constant term " + to_string(g.constant_term()) +
                        "; it does not vanish at the origin");

  GradientGerm grad = gradient(g);
  bool all_zero = true;
  for (const Polynomial& c : grad.components) {
    if (!c.is_zero()) all_zero = false;
  }
  if (all_zero) throw DegenerateInputError("the gradient vanishes identically");

  LocalAlgebra algebra = local_algebra(grad.components);
  const std::size_t dim = algebra.dimension();
  if (dim == 0) {
    return DegreeResult{0, 0, DegreeMethod::Elk,
                        "gradient ideal contains a unit; trivial local algebra; degree 0"};
  }

  const std::size_t n = g.nvars();
  std::vector<std::vector<Polynomial>> hess(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) hess[i].push_back(grad.components[i].derivative(j));
  }
  Polynomial j_residue = normal_form(algebra, poly_determinant(hess, g.variables()));
  if (j_residue.is_zero())
    throw ContradictionError(
        "the Hessian determinant reduces to zero in the local algebra, which cannot happen at "
        "an algebraically isolated critical point");

  // Functional: dual of the highest-order basis monomial carrying a nonzero
  // coefficient of the Hessian residue, signed to make the pairing positive
  // on that residue.
  const ExpVec* pivot = nullptr;
  Rat pivot_coeff;
  for (const auto& [e, c] : j_residue.terms()) {
    if (pivot == nullptr || degree_of(e) > degree_of(*pivot) ||
        (degree_of(e) == degree_of(*pivot) && local_compare(e, *pivot) > 0)) {
      pivot = &e;
      pivot_coeff = c;
    }
  }
  const int sign = pivot_coeff > 0 ? 1 : -1;
  auto phi = [&](const Polynomial& q) -> Rat {
    auto it = q.terms().find(*pivot);
    if (it == q.terms().end()) return Rat(0);
    return sign > 0 ? it->second : -it->second;
  };

  std::vector<Polynomial> basis_polys;
  basis_polys.reserve(dim);
  for (const ExpVec& e : algebra.monomial_basis) {
    Polynomial b(g.variables());
    b.add_term(e, Rat(1));
    basis_polys.push_back(b);
  }

  RatMatrix form(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      Rat v = phi(normal_form(algebra, basis_polys[i] * basis_polys[j]));
      form.at(i, j) = v;
      form.at(j, i) = v;
    }
  }

  ExactSignature sig = exact_signature(form);
  if (sig.zero != 0)
    throw ContradictionError("the residue pairing is degenerate, which contradicts isolation");

  std::ostringstream cert;
  cert << "monomial basis {";
  for (std::size_t i = 0; i < algebra.monomial_basis.size(); ++i) {
    if (i) cert << ", ";
    cert << monomial_text(algebra.variables, algebra.monomial_basis[i]);
  }
  cert << "} (dimension " << dim << "); Hessian residue " << j_residue.to_text()
       << "; functional = " << (sign > 0 ? "" : "-") << "(coefficient of "
       << monomial_text(algebra.variables, *pivot) << "); signature (" << sig.positive << ", "
       << sig.negative << ", " << sig.zero << ")";

  DegreeResult out;
  out.degree = static_cast<long long>(sig.positive) - static_cast<long long>(sig.negative);
  out.local_algebra_dim = dim;
  out.method = DegreeMethod::Elk;
  out.certificate = cert.str();
  return out;
}

}  // namespace nspair
