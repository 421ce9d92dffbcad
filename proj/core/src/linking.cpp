#include "nspair/linking.hpp"

#include <string>

namespace nspair {

void validate(const LinkingMatrix& l) {
  if (l.symmetry_sign != 1 && l.symmetry_sign != -1)
    throw StructureError("linking matrix: symmetry sign must be +1 or -1");
  if (!l.entries.square()) throw StructureError("linking matrix: entries must be square");
  for (std::size_t i = 0; i < l.k(); ++i) {
    if (l.entries.at(i, i) != 0)
      throw StructureError("linking matrix: diagonal entry (" + std::to_string(i) + "," +
                           std::to_string(i) + ") is nonzero");
    for (std::size_t j = i + 1; j < l.k(); ++j)
      if (l.entries.at(i, j) != l.symmetry_sign * l.entries.at(j, i))
        throw StructureError("linking matrix: entries (" + std::to_string(i) + "," +
                             std::to_string(j) + ") and transpose violate the symmetry sign");
  }
}

IntMatrix build_R(const LinkingMatrix& l) {
  validate(l);
  if (l.symmetry_sign != -1)
    throw UnsupportedCaseError(
        "build_R: the Mayer-Vietoris presentation is defined for the skew case only");

  const std::size_t k = l.k();
  const std::size_t n = 2 * k + 2;
  IntMatrix r(n, n);

  // Rows 0..k are mu_0..mu_k, rows k+1..2k+1 are delta_0..delta_k.
  // Columns 0..k are [K_0 x *]..[K_k x *], columns k+1..2k+1 are
  // [y_0 x dB^3]..[y_k x dB^3].
  for (std::size_t i = 1; i <= k; ++i) {
    r.at(i, 0) = 1;  // [K_0 x *] wraps once around every moving sphere
    r.at(i, i) = 1;
  }
  for (std::size_t j = 0; j <= k; ++j) r.at(0, k + 1 + j) = 1;  // base-sphere linking is +1
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; j <= k; ++j) r.at(i, k + 1 + j) = l.entries.at(i - 1, j - 1);
  for (std::size_t i = 0; i <= k; ++i) r.at(k + 1 + i, i) = -1;
  return r;
}

ClassificationReport classify(const LinkingMatrix& l, std::optional<int> fiber_dim) {
  validate(l);
  ClassificationReport report;
  report.k = l.k();
  report.symmetry_sign = l.symmetry_sign;
  report.det_A = determinant(l.entries);
  report.link_components = l.k() + 1;

  int dim = 0;
  if (l.symmetry_sign == -1) {
    if (fiber_dim && *fiber_dim != 3)
      throw UnsupportedCaseError("classify: the skew case fixes the fiber dimension at 3");
    dim = 3;
    if (l.k() % 2 == 0) report.pfaffian_A = pfaffian(l.entries);
    const IntMatrix r = build_R(l);
    report.det_R = determinant(r);
    report.h2_invariant_factors = smith_normal_form(r).invariant_factors;
  } else {
    // Even ambient dimension: the unimodularity criterion applies to the
    // linking matrix itself.
    if (fiber_dim) {
      if (*fiber_dim < 4 || *fiber_dim % 2 != 0)
        throw UnsupportedCaseError(
            "classify: symmetric linking data needs an even fiber dimension >= 4");
      dim = *fiber_dim;
    }
    report.h2_invariant_factors = smith_normal_form(l.entries).invariant_factors;
  }

  report.is_ns_pair = (report.det_A == 1 || report.det_A == -1);

  if (dim != 0 && report.is_ns_pair) {
    // The open book glued from the linking data has as page a sphere of
    // dimension `dim` with one hole per link component.
    FiberDescriptor f;
    f.dim = dim;
    std::vector<long long> betti(static_cast<std::size_t>(dim) + 1, 0);
    betti[0] = 1;
    betti[static_cast<std::size_t>(dim) - 1] = static_cast<long long>(report.k);
    f.betti = betti;
    f.boundary_components = static_cast<long long>(report.link_components);
    std::vector<BouquetTerm> wedge;
    if (report.k > 0) wedge.push_back({dim - 1, static_cast<long long>(report.k)});
    f.bouquet = wedge;
    f.torsion_free_middle = TriState::Yes;
    f.simply_connected = TriState::Yes;
    report.fiber = f;
  }
  return report;
}

LinkingMatrix generate_unimodular_blocks(std::size_t half_blocks) {
  LinkingMatrix l;
  l.symmetry_sign = -1;
  l.entries = IntMatrix(2 * half_blocks, 2 * half_blocks);
  for (std::size_t b = 0; b < half_blocks; ++b) {
    l.entries.at(2 * b, 2 * b + 1) = 1;
    l.entries.at(2 * b + 1, 2 * b) = -1;
  }
  return l;
}

NSInvariantRecord to_record(const ClassificationReport& report) {
  if (report.symmetry_sign != -1)
    throw UnsupportedCaseError("to_record: only the skew case yields the 5-sphere pair");
  if (!report.is_ns_pair)
    throw HypothesisError("to_record: the linking matrix is not unimodular, so the glued "
                          "5-manifold is not a sphere");

  NSInvariantRecord rec;
  rec.n = 5;
  rec.p = 2;  // link dimension n - p - 1 = 2
  rec.link_components = static_cast<long long>(report.link_components);
  rec.fiber = *report.fiber;
  rec.trivial = (report.k == 0) ? TriState::Yes : TriState::No;
  rec.provenance.push_back("classified fibered link of " +
                           std::to_string(report.link_components) +
                           " two-spheres in the five-sphere (k = " + std::to_string(report.k) +
                           ", det A = " + report.det_A.str() + ")");
  validate(rec);
  return rec;
}

}  // namespace nspair
