#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nspair/exact_linalg.hpp"
#include "nspair/int_matrix.hpp"
#include "nspair/invariants.hpp"

namespace nspair {

// Pairwise linking numbers of the k moving spheres of a spherical link with
// one distinguished base sphere. entries is k x k with zero diagonal and
// a_ij = symmetry_sign * a_ji; symmetry_sign is -1 when the moving spheres
// have odd dimension (the 2-sphere case) and +1 when even.
struct LinkingMatrix {
  int symmetry_sign = -1;
  IntMatrix entries;

  std::size_t k() const { return entries.rows(); }

  bool operator==(const LinkingMatrix&) const = default;
};

// Throws StructureError if entries is not square with zero diagonal and the
// declared symmetry, or if symmetry_sign is not +1 or -1.
void validate(const LinkingMatrix& l);

// Presentation matrix of H_2 of the total space glued from the link
// exterior and the trivialized tube, for the skew (2-sphere) case. Rows are
// indexed mu_0..mu_k, delta_0..delta_k; columns by the classes [K_0 x *] ..
// [K_k x *], [y_0 x dB^3] .. [y_k x dB^3]. Throws UnsupportedCaseError for
// symmetry_sign = +1.
IntMatrix build_R(const LinkingMatrix& l);

struct ClassificationReport {
  std::size_t k = 0;
  int symmetry_sign = -1;
  Int det_A;
  std::optional<Int> pfaffian_A;  // skew case, even k only
  std::optional<Int> det_R;       // skew case only
  std::vector<Int> h2_invariant_factors;
  bool is_ns_pair = false;
  std::size_t link_components = 0;  // k + 1
  std::optional<FiberDescriptor> fiber;

  bool operator==(const ClassificationReport&) const = default;
};

// Full classification. For the skew case the middle homology of the glued
// 5-manifold is the cokernel of build_R and the fiber is the (k+1)-holed
// 3-sphere of the open-book; fiber_dim is fixed at 3. For symmetry_sign =
// +1 the unimodularity criterion applies to the matrix itself; the fiber
// descriptor needs the ambient dimension, passed as fiber_dim (even, >= 4),
// and is omitted when fiber_dim is absent.
ClassificationReport classify(const LinkingMatrix& l,
                              std::optional<int> fiber_dim = std::nullopt);

// Direct sum of `half_blocks` copies of [[0,1],[-1,0]]; the canonical
// unimodular skew examples (k = 2 * half_blocks).
LinkingMatrix generate_unimodular_blocks(std::size_t half_blocks);

// Record view of a classified link: the pair lives on the 5-sphere, so the
// record carries n = 5 and p chosen so that the link dimension n - p - 1
// equals 2. Requires the skew case.
NSInvariantRecord to_record(const ClassificationReport& report);

}  // namespace nspair
