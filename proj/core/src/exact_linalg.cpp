#include "nspair/exact_linalg.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace nspair {

namespace {

void require_square(const IntMatrix& m, const char* op) {
  if (!m.square()) throw DimensionError(std::string(op) + ": matrix is not square");
}

bool is_skew_with_zero_diagonal(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.at(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m.at(i, j) != -m.at(j, i)) return false;
  }
  return true;
}

Int exact_div(const Int& num, const Int& den) {
  Int q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("exact_div: division left a remainder");
  return q;
}

}  // namespace

Int determinant(const IntMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t pivot_row = k;
      while (pivot_row < n && a.at(pivot_row, k) == 0) ++pivot_row;
      if (pivot_row == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a.at(k, j), a.at(pivot_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = exact_div(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

Rat determinant(const RatMatrix& m) {
  if (!m.square()) throw DimensionError("determinant: matrix is not square");
  const std::size_t n = m.rows();
  IntMatrix a(n, n);
  Rat scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j)
      row_lcm = boost::multiprecision::lcm(row_lcm, denominator(m.at(i, j)));
    for (std::size_t j = 0; j < n; ++j) {
      const Rat v = m.at(i, j) * Rat(row_lcm);
      a.at(i, j) = numerator(v);
    }
    scale *= Rat(1, row_lcm);
  }
  return Rat(determinant(a)) * scale;
}

Int pfaffian(const IntMatrix& m) {
  require_square(m, "pfaffian");
  if (m.rows() % 2 != 0) throw StructureError("pfaffian: matrix size must be even");
  if (!is_skew_with_zero_diagonal(m))
    throw StructureError("pfaffian: matrix is not skew-symmetric with zero diagonal");

  const std::size_t n = m.rows();
  if (n == 0) return 1;

  // Pair elimination. After the step anchored at rows (p, p+1) every entry
  // b[i][j] of the trailing block equals the Pfaffian of the submatrix on
  // indices {0..p+1, i, j}; the overlapping-Pfaffian identity makes each
  // division by the previous pivot exact.
  IntMatrix b = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t p = 0; p + 2 < n; p += 2) {
    if (b.at(p, p + 1) == 0) {
      std::size_t q = p + 2;
      while (q < n && b.at(p, q) == 0) ++q;
      if (q == n) return 0;
      for (std::size_t t = 0; t < n; ++t) std::swap(b.at(t, p + 1), b.at(t, q));
      for (std::size_t t = 0; t < n; ++t) std::swap(b.at(p + 1, t), b.at(q, t));
      sign = -sign;
    }
    const Int pivot = b.at(p, p + 1);
    for (std::size_t i = p + 2; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Int v = exact_div(
            pivot * b.at(i, j) - b.at(p, i) * b.at(p + 1, j) + b.at(p, j) * b.at(p + 1, i), prev);
        b.at(i, j) = v;
        b.at(j, i) = -v;
      }
    prev = pivot;
  }
  return sign > 0 ? b.at(n - 2, n - 1) : Int(-b.at(n - 2, n - 1));
}

namespace {

struct PivotPos {
  std::size_t i = 0, j = 0;
  bool found = false;
};

// Smallest nonzero absolute value in the block starting at (t, t); ties go
// to the leftmost column, then the uppermost row.
PivotPos find_pivot(const IntMatrix& a, std::size_t t) {
  PivotPos best;
  Int best_abs = 0;
  for (std::size_t j = t; j < a.cols(); ++j)
    for (std::size_t i = t; i < a.rows(); ++i) {
      const Int v = abs_of(a.at(i, j));
      if (v == 0) continue;
      if (!best.found || v < best_abs) {
        best = {i, j, true};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  const std::size_t bound = rows < cols ? rows : cols;

  SmithNormalForm result;
  std::size_t t = 0;
  while (t < bound) {
    PivotPos p = find_pivot(a, t);
    if (!p.found) break;

    for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(t, j), a.at(p.i, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(a.at(i, t), a.at(i, p.j));

    bool settled = false;
    while (!settled) {
      settled = true;

      // Clear column t. Remainders smaller than the pivot may appear; in
      // that case re-select the pivot, so the absolute value at (t, t)
      // strictly decreases and the loop terminates.
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a.at(i, t) == 0) continue;
        const Int q = a.at(i, t) / a.at(t, t);
        for (std::size_t j = t; j < cols; ++j) a.at(i, j) -= q * a.at(t, j);
        if (a.at(i, t) != 0) {
          for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(t, j), a.at(i, j));
          settled = false;
        }
      }
      if (!settled) continue;

      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a.at(t, j) == 0) continue;
        const Int q = a.at(t, j) / a.at(t, t);
        for (std::size_t i = t; i < rows; ++i) a.at(i, j) -= q * a.at(i, t);
        if (a.at(t, j) != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(a.at(i, t), a.at(i, j));
          settled = false;
        }
      }
      if (!settled) continue;

      // The pivot must divide the whole trailing block for the invariant
      // factor chain; if it does not, fold the offending row in and redo.
      for (std::size_t i = t + 1; i < rows && settled; ++i)
        for (std::size_t j = t + 1; j < cols && settled; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            for (std::size_t jj = 0; jj < cols; ++jj) a.at(t, jj) += a.at(i, jj);
            settled = false;
          }
    }

    if (a.at(t, t) < 0) a.at(t, t) = -a.at(t, t);
    result.invariant_factors.push_back(a.at(t, t));
    ++t;
  }

  result.rank = result.invariant_factors.size();
  while (result.invariant_factors.size() < bound) result.invariant_factors.push_back(0);
  return result;
}

std::vector<Int> characteristic_polynomial(const IntMatrix& m) {
  require_square(m, "characteristic_polynomial");
  const std::size_t n = m.rows();
  std::vector<Int> coef(n + 1, Int(0));
  coef[n] = 1;
  if (n == 0) return coef;

  IntMatrix acc = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    acc = m.multiply(acc);
    Int trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += acc.at(i, i);
    const Int c = exact_div(-trace, Int(k));
    coef[n - k] = c;
    for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += c;
  }
  return coef;
}

namespace {

std::size_t descartes_sign_changes(const std::vector<Int>& coef) {
  std::size_t changes = 0;
  int last = 0;
  for (const Int& c : coef) {
    const int s = sign_of(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

ExactSignature exact_signature(const RatMatrix& m) {
  if (!m.square()) throw DimensionError("exact_signature: matrix is not square");
  if (!m.is_symmetric()) throw StructureError("exact_signature: matrix is not symmetric");
  const std::size_t n = m.rows();
  if (n == 0) return {};

  // Scaling by a positive integer preserves eigenvalue signs.
  Int scale = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      scale = boost::multiprecision::lcm(scale, denominator(m.at(i, j)));
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat v = m.at(i, j) * Rat(scale);
      a.at(i, j) = numerator(v);
    }

  const std::vector<Int> coef = characteristic_polynomial(a);
  std::size_t zero_mult = 0;
  while (zero_mult <= n && coef[zero_mult] == 0) ++zero_mult;

  // All roots are real, so Descartes' bound is attained with multiplicity.
  std::vector<Int> reduced(coef.begin() + static_cast<std::ptrdiff_t>(zero_mult), coef.end());
  const std::size_t positive = descartes_sign_changes(reduced);
  std::vector<Int> reflected = reduced;
  for (std::size_t i = 0; i < reflected.size(); ++i)
    if (i % 2 == 1) reflected[i] = -reflected[i];
  const std::size_t negative = descartes_sign_changes(reflected);

  if (positive + negative + zero_mult != n)
    throw std::logic_error("exact_signature: root count mismatch");
  return {positive, negative, zero_mult};
}

ExactSignature exact_signature(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
  return exact_signature(r);
}

}  // namespace nspair
