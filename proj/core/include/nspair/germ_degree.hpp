#pragma once

#include <cstddef>
#include <string>

#include "nspair/errors.hpp"
#include "nspair/polynomial.hpp"

namespace nspair {

enum class DegreeMethod { Elk, Winding };

std::string to_string(DegreeMethod m);

struct DegreeResult {
  long long degree = 0;
  std::size_t local_algebra_dim = 0;
  DegreeMethod method = DegreeMethod::Elk;
  std::string certificate;

  bool operator==(const DegreeResult&) const = default;
};

// Local topological degree of the gradient of g at the origin, by the
// signature formula: standard basis of the gradient ideal, monomial basis of
// the local algebra, residue class of the Hessian determinant, a linear
// functional positive on it, and the exact signature of the induced bilinear
// form.
//
// Throws DegenerateInputError when the gradient vanishes identically and
// NonIsolatedError when the critical point is not algebraically isolated.
DegreeResult elk_degree(const Polynomial& g);

// Winding number of a planar map around the circle of the given radius,
// certified by adaptive arc subdivision: each arc's image is confined to an
// open half-plane by exact interval evaluation, and the sector walk of the
// endpoints is summed. Throws RadiusTooLargeError when the map vanishes at a
// sampled circle point and InconclusiveError past 2^20 arcs.
long long winding_degree(const GradientGerm& map, const Rat& radius);

// Milnor number of the one-variable holomorphic germ z^(m+1), presented as
// the real pair (re, im) of its expansion. Validates the shape, then
// realizes the answer as the winding degree of the derivative's real pair on
// a small circle. Throws UnsupportedCaseError for anything else.
long long holomorphic_milnor_number(const Polynomial& re, const Polynomial& im,
                                    unsigned exponent_m);

// Real pair (Re (x+iy)^m, Im (x+iy)^m) over the given two variable names.
GradientGerm complex_power_pair(const std::vector<std::string>& variables, unsigned m);

}  // namespace nspair
