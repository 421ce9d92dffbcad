#include "nspair/local_algebra.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace nspair {

namespace {

unsigned degree_of(const ExpVec& e) {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

bool divides(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

ExpVec exp_quotient(const ExpVec& m, const ExpVec& d) {
  ExpVec q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) q[i] = m[i] - d[i];
  return q;
}

ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
  ExpVec m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

bool coprime(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

Polynomial monomial_multiple(const Polynomial& g, const ExpVec& shift, const Rat& scale) {
  Polynomial out(g.variables());
  for (const auto& [e, c] : g.terms()) {
    ExpVec m(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = e[i] + shift[i];
    out.add_term(m, c * scale);
  }
  return out;
}

constexpr std::size_t kReductionCap = 1u << 17;
constexpr std::size_t kPairCap = 1u << 12;

// Mora weak normal form: reducers of smaller ecart are preferred and the
// intermediate remainder joins the reducer set whenever every usable
// reducer has larger ecart, which is what makes the loop terminate under a
// local order.
Polynomial mora_reduce(Polynomial h, std::vector<Polynomial> reducers) {
  std::size_t steps = 0;
  while (!h.is_zero()) {
    LeadingTerm lt = leading_term(h);
    std::size_t best = reducers.size();
    unsigned best_ecart = 0;
    for (std::size_t i = 0; i < reducers.size(); ++i) {
      if (!divides(leading_term(reducers[i]).monomial, lt.monomial)) continue;
      unsigned e = ecart(reducers[i]);
      if (best == reducers.size() || e < best_ecart) {
        best = i;
        best_ecart = e;
      }
    }
    if (best == reducers.size()) return h;
    // When even the best reducer has larger ecart, the current remainder is
    // recorded for later use; the reduction still happens with the reducer
    // picked above.
    if (best_ecart > ecart(h)) reducers.push_back(h);
    LeadingTerm lt_g = leading_term(reducers[best]);
    h = h - monomial_multiple(reducers[best], exp_quotient(lt.monomial, lt_g.monomial),
                              lt.coefficient / lt_g.coefficient);
    if (++steps > kReductionCap)
      throw InconclusiveError("local reduction exceeded the step limit");
  }
  return h;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  LeadingTerm lf = leading_term(f);
  LeadingTerm lg = leading_term(g);
  ExpVec m = exp_lcm(lf.monomial, lg.monomial);
  Polynomial a = monomial_multiple(f, exp_quotient(m, lf.monomial), Rat(1) / lf.coefficient);
  Polynomial b = monomial_multiple(g, exp_quotient(m, lg.monomial), Rat(1) / lg.coefficient);
  return a - b;
}

}  // namespace

int local_compare(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw DimensionError("comparing exponents of different lengths");
  unsigned da = degree_of(a);
  unsigned db = degree_of(b);
  if (da != db) return da < db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

LeadingTerm leading_term(const Polynomial& p) {
  if (p.is_zero()) throw std::logic_error("leading term of the zero polynomial");
  const ExpVec* best = nullptr;
  const Rat* coeff = nullptr;
  for (const auto& [e, c] : p.terms()) {
    if (best == nullptr || local_compare(e, *best) > 0) {
      best = &e;
      coeff = &c;
    }
  }
  return {*best, *coeff};
}

unsigned ecart(const Polynomial& p) {
  return p.total_degree() - degree_of(leading_term(p).monomial);
}

std::vector<Polynomial> standard_basis(const std::vector<Polynomial>& generators) {
  std::vector<Polynomial> basis;
  for (const Polynomial& g : generators) {
    if (!g.is_zero()) basis.push_back(g);
  }
  if (basis.empty()) throw DimensionError("standard basis of an empty generating set");
  for (std::size_t i = 1; i < basis.size(); ++i) {
    if (basis[i].variables() != basis[0].variables())
      throw DimensionError("generators use different variable lists");
  }

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  std::size_t processed = 0;
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (++processed > kPairCap)
      throw InconclusiveError("standard basis computation exceeded the pair limit");

    const ExpVec lm_i = leading_term(basis[i]).monomial;
    const ExpVec lm_j = leading_term(basis[j]).monomial;
    if (coprime(lm_i, lm_j)) continue;

    Polynomial h = mora_reduce(spoly(basis[i], basis[j]), basis);
    if (h.is_zero()) continue;
    basis.push_back(h);
    for (std::size_t t = 0; t + 1 < basis.size(); ++t) pairs.emplace_back(t, basis.size() - 1);
  }
  return basis;
}

LocalAlgebra local_algebra(const std::vector<Polynomial>& generators) {
  LocalAlgebra out;
  out.basis_polys = standard_basis(generators);
  out.variables = out.basis_polys[0].variables();
  const std::size_t n = out.variables.size();

  std::vector<ExpVec> lead;
  lead.reserve(out.basis_polys.size());
  for (const Polynomial& g : out.basis_polys) lead.push_back(leading_term(g).monomial);

  // A unit in the ideal collapses the quotient to zero.
  for (const ExpVec& m : lead) {
    if (degree_of(m) == 0) {
      out.max_basis_degree = 0;
      return out;
    }
  }

  // Zero-dimensionality: each variable axis must be blocked by a leading
  // pure power.
  std::vector<unsigned> bound(n, 0);
  for (const ExpVec& m : lead) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] > 0) {
        ++support;
        var = i;
      }
    }
    if (support == 1 && (bound[var] == 0 || m[var] < bound[var])) bound[var] = m[var];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (bound[i] == 0)
      throw NonIsolatedError("critical point is not algebraically isolated: no leading pure power in variable '" +
                             out.variables[i] + "'");
  }

  std::size_t cells = 1;
  for (std::size_t i = 0; i < n; ++i) {
    cells *= bound[i];
    if (cells > (1u << 20))
      throw InconclusiveError("local algebra staircase enumeration exceeded the size limit");
  }

  ExpVec e(n, 0);
  for (std::size_t cell = 0; cell < cells; ++cell) {
    bool in_basis = true;
    for (const ExpVec& m : lead) {
      if (divides(m, e)) {
        in_basis = false;
        break;
      }
    }
    if (in_basis) out.monomial_basis.push_back(e);
    for (std::size_t i = 0; i < n; ++i) {
      if (++e[i] < bound[i]) break;
      e[i] = 0;
    }
  }

  std::sort(out.monomial_basis.begin(), out.monomial_basis.end(),
            [](const ExpVec& a, const ExpVec& b) {
              unsigned da = degree_of(a), db = degree_of(b);
              if (da != db) return da < db;
              return a > b;
            });
  for (const ExpVec& m : out.monomial_basis)
    out.max_basis_degree = std::max(out.max_basis_degree, degree_of(m));
  return out;
}

Polynomial normal_form(const LocalAlgebra& algebra, const Polynomial& p) {
  if (!p.is_zero() && p.variables() != algebra.variables)
    throw DimensionError("polynomial does not match the algebra's variables");

  auto truncate = [&algebra](const Polynomial& q) {
    Polynomial out(algebra.variables);
    for (const auto& [e, c] : q.terms()) {
      if (degree_of(e) <= algebra.max_basis_degree) out.add_term(e, c);
    }
    return out;
  };
  auto in_basis = [&algebra](const ExpVec& e) {
    return std::find(algebra.monomial_basis.begin(), algebra.monomial_basis.end(), e) !=
           algebra.monomial_basis.end();
  };

  Polynomial h = truncate(p);
  std::size_t steps = 0;
  for (;;) {
    const ExpVec* worst = nullptr;
    const Rat* coeff = nullptr;
    for (const auto& [e, c] : h.terms()) {
      if (in_basis(e)) continue;
      if (worst == nullptr || local_compare(e, *worst) > 0) {
        worst = &e;
        coeff = &c;
      }
    }
    if (worst == nullptr) return h;

    const Polynomial* reducer = nullptr;
    for (const Polynomial& g : algebra.basis_polys) {
      if (divides(leading_term(g).monomial, *worst)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr)
      throw std::logic_error("staircase monomial without a reducer");
    LeadingTerm lt = leading_term(*reducer);
    h = truncate(h - monomial_multiple(*reducer, exp_quotient(*worst, lt.monomial),
                                       *coeff / lt.coefficient));
    if (++steps > kReductionCap)
      throw InconclusiveError("normal form exceeded the step limit");
  }
}

}  // namespace nspair
