#include <algorithm>
#include <utility>
#include <vector>

#include "nspair/germ_degree.hpp"

namespace nspair {

namespace {

// Dense univariate polynomial in the chart parameter, index = power.
using UniPoly = std::vector<Rat>;

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

UniPoly uni_pow(const UniPoly& a, unsigned e) {
  UniPoly out{Rat(1)};
  for (unsigned i = 0; i < e; ++i) out = uni_mul(out, a);
  return out;
}

void uni_add_scaled(UniPoly& acc, const UniPoly& a, const Rat& s) {
  if (acc.size() < a.size()) acc.resize(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) acc[i] += a[i] * s;
}

Rat uni_eval(const UniPoly& p, const Rat& t) {
  Rat acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
  return acc;
}

struct Interval {
  Rat lo, hi;
};

Interval interval_mul(const Interval& a, const Interval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

Interval uni_eval_interval(const UniPoly& p, const Rat& a, const Rat& b) {
  Interval acc{Rat(0), Rat(0)};
  Interval t{a, b};
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = interval_mul(acc, t);
    acc.lo += p[i];
    acc.hi += p[i];
  }
  return acc;
}

// Rational circle parametrization: with s = chart sign, the point is
//   x(t) = s*r*(1-t^2)/(1+t^2),  y(t) = s*2*r*t/(1+t^2),  t in [-1,1].
// The chart s=+1 runs the right half counterclockwise from (0,-r) to (0,r),
// s=-1 continues over the left half from (0,r) back to (0,-r). Denominators
// are cleared with (1+t^2)^deg, which is positive and so preserves signs.
UniPoly chart_component(const Polynomial& p, const Rat& radius, int chart_sign) {
  const unsigned deg = p.total_degree();
  const UniPoly one_minus{Rat(1), Rat(0), Rat(-1)};
  const UniPoly two_t{Rat(0), Rat(2)};
  const UniPoly one_plus{Rat(1), Rat(0), Rat(1)};

  UniPoly out{Rat(0)};
  for (const auto& [e, c] : p.terms()) {
    const unsigned a = e[0], b = e[1];
    UniPoly term = uni_mul(uni_pow(one_minus, a), uni_pow(two_t, b));
    term = uni_mul(term, uni_pow(one_plus, deg - a - b));
    Rat scale = c;
    for (unsigned i = 0; i < a + b; ++i) scale *= radius;
    if (chart_sign < 0 && (a + b) % 2 == 1) scale = -scale;
    uni_add_scaled(out, term, scale);
  }
  return out;
}

int sector_of(const Rat& p, const Rat& q) {
  const int sp = p > 0 ? 1 : (p < 0 ? -1 : 0);
  const int sq = q > 0 ? 1 : (q < 0 ? -1 : 0);
  if (sp == 0 && sq == 0)
    throw RadiusTooLargeError("the map vanishes at a point of the chosen circle");
  if (sp > 0 && sq == 0) return 0;
  if (sp > 0 && sq > 0) return 1;
  if (sp == 0 && sq > 0) return 2;
  if (sp < 0 && sq > 0) return 3;
  if (sp < 0 && sq == 0) return 4;
  if (sp < 0 && sq < 0) return 5;
  if (sp == 0 && sq < 0) return 6;
  return 7;
}

struct Arc {
  int chart;  // 0 = right, 1 = left
  Rat a, b;
};

}  // namespace

long long winding_degree(const GradientGerm& map, const Rat& radius) {
  if (map.components.size() != 2)
    throw DimensionError("winding oracle needs a planar map with two components");
  const Polynomial& p = map.components[0];
  const Polynomial& q = map.components[1];
  if (p.nvars() != 2 || q.nvars() != 2 || p.variables() != q.variables())
    throw DimensionError("winding oracle needs two components over one pair of variables");
  if (radius <= 0) throw StructureError("circle radius must be positive");

  const UniPoly charts[2][2] = {
      {chart_component(p, radius, +1), chart_component(q, radius, +1)},
      {chart_component(p, radius, -1), chart_component(q, radius, -1)},
  };

  std::vector<Arc> pending{{0, Rat(-1), Rat(1)}, {1, Rat(-1), Rat(1)}};
  long long sector_steps = 0;
  std::size_t processed = 0;
  constexpr std::size_t kArcCap = 1u << 20;

  while (!pending.empty()) {
    Arc arc = std::move(pending.back());
    pending.pop_back();
    if (++processed > kArcCap)
      throw InconclusiveError(
          "subdivision limit reached without certifying the circle; the map may vanish on or "
          "near it");

    const UniPoly& cp = charts[arc.chart][0];
    const UniPoly& cq = charts[arc.chart][1];

    Interval ip = uni_eval_interval(cp, arc.a, arc.b);
    Interval iq = uni_eval_interval(cq, arc.a, arc.b);
    const bool confined = ip.lo > 0 || ip.hi < 0 || iq.lo > 0 || iq.hi < 0;
    if (!confined) {
      // A width floor keeps coefficient sizes bounded: an arc this narrow
      // that still cannot be confined hugs a zero at an irrational
      // parameter, which more subdivision can never separate.
      if ((arc.b - arc.a) * (Int(1) << 60) < 2)
        throw InconclusiveError(
            "subdivision limit reached without certifying the circle; the map may vanish on or "
            "near it");
      Rat mid = (arc.a + arc.b) / 2;
      sector_of(uni_eval(cp, mid), uni_eval(cq, mid));  // both-zero check
      pending.push_back({arc.chart, arc.a, mid});
      pending.push_back({arc.chart, mid, arc.b});
      continue;
    }

    const int s0 = sector_of(uni_eval(cp, arc.a), uni_eval(cq, arc.a));
    const int s1 = sector_of(uni_eval(cp, arc.b), uni_eval(cq, arc.b));
    int d = ((s1 - s0) % 8 + 8) % 8;
    if (d >= 6)
      d -= 8;
    else if (d >= 3)
      throw ContradictionError("sector walk is incompatible with a half-plane certificate");
    sector_steps += d;
  }

  if (sector_steps % 8 != 0)
    throw ContradictionError("sector walk around the circle does not close up");
  return sector_steps / 8;
}

GradientGerm complex_power_pair(const std::vector<std::string>& variables, unsigned m) {
  if (variables.size() != 2) throw DimensionError("complex power pair needs two variables");
  Polynomial re = Polynomial::constant(variables, Rat(1));
  Polynomial im(variables);
  const Polynomial x = Polynomial::variable(variables, 0);
  const Polynomial y = Polynomial::variable(variables, 1);
  for (unsigned i = 0; i < m; ++i) {
    Polynomial nre = re * x - im * y;
    Polynomial nim = re * y + im * x;
    re = std::move(nre);
    im = std::move(nim);
  }
  GradientGerm out;
  out.components = {re, im};
  return out;
}

long long holomorphic_milnor_number(const Polynomial& re, const Polynomial& im,
                                    unsigned exponent_m) {
  if (exponent_m < 1) throw UnsupportedCaseError("the exponent must be at least 1");
  if (re.nvars() != 2 || re.variables() != im.variables())
    throw UnsupportedCaseError("expected the real pair of a one-complex-variable germ");

  GradientGerm expected = complex_power_pair(re.variables(), exponent_m + 1);
  if (!(re == expected.components[0]) || !(im == expected.components[1]))
    throw UnsupportedCaseError("only pure powers of the complex variable are supported");

  // Derivative (m+1) z^m as a real pair, whose circle winding realizes the
  // Milnor number.
  GradientGerm derivative = complex_power_pair(re.variables(), exponent_m);
  const Rat scale(exponent_m + 1);
  derivative.components[0] = derivative.components[0].scaled(scale);
  derivative.components[1] = derivative.components[1].scaled(scale);

  long long w = winding_degree(derivative, Rat(1, 2));
  if (w != static_cast<long long>(exponent_m))
    throw ContradictionError("winding check of the derivative disagrees with the exponent");
  return w;
}

}  // namespace nspair
