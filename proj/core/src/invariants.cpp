#include "nspair/invariants.hpp"

#include <algorithm>
#include <string>

#include "nspair/exact_linalg.hpp"
#include "nspair/linking.hpp"

namespace nspair {

std::string to_string(TriState t) {
  switch (t) {
    case TriState::Yes: return "true";
    case TriState::No: return "false";
    default: return "unknown";
  }
}

long long euler_characteristic(const std::vector<long long>& betti) {
  long long chi = 0;
  int sign = 1;
  for (long long b : betti) {
    chi += sign * b;
    sign = -sign;
  }
  return chi;
}

long long euler_from_degree(int n, long long degree) {
  if (n < 3) throw HypothesisError("euler_from_degree: source dimension must be at least 3");
  if (n % 2 == 0) return 1 - degree;
  if (degree != 0)
    throw ContradictionError(
        "euler_from_degree: odd source dimension forces degree 0, got " + std::to_string(degree));
  return 1;
}

namespace {

std::string dims(int n, int p) {
  return "(" + std::to_string(n) + "," + std::to_string(p) + ")";
}

// Sphere of dimension `dim` with `holes` disjoint open balls removed:
// Betti numbers, boundary count, and the wedge of (holes - 1) spheres of
// dimension dim - 1 it deformation-retracts to. Needs dim >= 2.
FiberDescriptor holed_sphere_fiber(int dim, long long holes) {
  FiberDescriptor f;
  f.dim = dim;
  std::vector<long long> betti(static_cast<std::size_t>(dim) + 1, 0);
  betti[0] = 1;
  if (holes >= 1) betti[static_cast<std::size_t>(dim) - 1] += holes - 1;
  f.betti = betti;
  f.boundary_components = holes;
  std::vector<BouquetTerm> wedge;
  if (holes >= 2) wedge.push_back({dim - 1, holes - 1});
  f.bouquet = wedge;
  f.torsion_free_middle = TriState::Yes;
  f.simply_connected = (dim - 1 >= 2 || holes <= 1) ? TriState::Yes : TriState::No;
  return f;
}

bool has_nonzero_reduced_homology(const FiberDescriptor& f) {
  if (!f.betti) return false;
  for (std::size_t i = 1; i < f.betti->size(); ++i)
    if ((*f.betti)[i] != 0) return true;
  return false;
}

TriState simply_connected_of_wedge(const std::vector<BouquetTerm>& wedge) {
  for (const BouquetTerm& t : wedge) {
    if (t.sphere_dim >= 2) continue;
    if (!t.count) return TriState::Unknown;
    if (*t.count > 0) return TriState::No;
  }
  return TriState::Yes;
}

}  // namespace

FiberDescriptor bouquet_even(int n, long long degree) {
  if (n < 2) throw HypothesisError("bouquet_even: target dimension must be at least 2");
  const long long count = (n % 2 == 0) ? degree : -degree;
  if (count < 0)
    throw ContradictionError("bouquet_even: degree " + std::to_string(degree) +
                             " gives a negative sphere count in target dimension " +
                             std::to_string(n));
  FiberDescriptor f;
  f.dim = n;
  std::vector<long long> betti(static_cast<std::size_t>(n) + 1, 0);
  betti[0] = 1;
  betti[static_cast<std::size_t>(n) - 1] = count;
  f.betti = betti;
  std::vector<BouquetTerm> wedge;
  if (count > 0) wedge.push_back({n - 1, count});
  f.bouquet = wedge;
  f.torsion_free_middle = TriState::Yes;
  f.simply_connected = simply_connected_of_wedge(wedge);
  return f;
}

FiberDescriptor bouquet_odd(int n, long long beta, TriState torsion_free) {
  if (n < 3) throw HypothesisError("bouquet_odd: target dimension must be at least 3");
  if (beta < 0) throw ContradictionError("bouquet_odd: negative Betti number");
  FiberDescriptor f;
  f.dim = n + 1;
  std::vector<long long> betti(static_cast<std::size_t>(n) + 2, 0);
  betti[0] = 1;
  betti[static_cast<std::size_t>(n) - 1] = beta;
  betti[static_cast<std::size_t>(n)] = beta;  // forced by chi = 1
  f.betti = betti;
  f.torsion_free_middle = torsion_free;
  if (torsion_free == TriState::Yes) {
    std::vector<BouquetTerm> wedge;
    if (beta > 0) {
      wedge.push_back({n - 1, beta});
      wedge.push_back({n, beta});
    }
    f.bouquet = wedge;
    f.simply_connected = simply_connected_of_wedge(wedge);
  } else {
    f.simply_connected = TriState::Unknown;
  }
  return f;
}

NSInvariantRecord looijenga_sum(const NSInvariantRecord& rec) {
  validate(rec);
  if (!rec.link_components)
    throw InsufficientDataError("looijenga_sum: link component count is unknown");
  if (*rec.link_components < 1)
    throw HypothesisError("looijenga_sum: the link must be non-empty");
  if (!rec.fiber.betti)
    throw InsufficientDataError("looijenga_sum: fiber Betti numbers are unknown");

  const long long c = *rec.link_components;
  NSInvariantRecord out;
  out.n = rec.n + 1;
  out.p = rec.p + 1;
  out.link_components = 2 * c - 1;
  out.provenance = rec.provenance;

  FiberDescriptor f;
  f.dim = rec.fiber.dim;  // (n+1) - (p+1)
  std::vector<long long> betti = *rec.fiber.betti;
  for (std::size_t i = 1; i + 1 < betti.size(); ++i) betti[i] *= 2;
  f.betti = betti;
  f.boundary_components = 2 * c - 1;

  // A boundary connected sum is homotopy equivalent to a wedge, so a known
  // wedge decomposition doubles term by term.
  if (rec.fiber.bouquet) {
    bool counts_known = true;
    for (const BouquetTerm& t : *rec.fiber.bouquet)
      if (!t.count) counts_known = false;
    if (counts_known) {
      std::vector<BouquetTerm> wedge;
      for (const BouquetTerm& t : *rec.fiber.bouquet)
        wedge.push_back({t.sphere_dim, 2 * *t.count});
      f.bouquet = wedge;
    }
  }
  if (!f.bouquet && out.n == 2 * out.p) {
    // Even-dimensional germ class: the fiber is always a wedge of
    // middle-dimensional spheres.
    std::vector<BouquetTerm> wedge;
    const long long count = betti[static_cast<std::size_t>(out.p) - 1];
    if (count > 0) wedge.push_back({out.p - 1, count});
    f.bouquet = wedge;
  }
  f.torsion_free_middle = rec.fiber.torsion_free_middle;
  if (f.bouquet) f.torsion_free_middle = TriState::Yes;
  f.simply_connected = rec.fiber.simply_connected;
  out.fiber = f;

  // The output is a germ record, so the degree of the first component's
  // gradient is determined by the Euler characteristic.
  const long long chi = euler_characteristic(betti);
  out.degree = (out.n % 2 == 0) ? 1 - chi : 0;
  if (out.n % 2 != 0 && chi != 1)
    throw ContradictionError("looijenga_sum: odd source dimension with chi != 1");

  if (has_nonzero_reduced_homology(out.fiber))
    out.trivial = TriState::No;
  else if (*out.link_components == 1 && rec.trivial == TriState::Yes)
    out.trivial = TriState::Yes;
  else
    out.trivial = TriState::Unknown;

  out.provenance.push_back("looijenga sum: " + dims(rec.n, rec.p) + " -> " + dims(out.n, out.p) +
                           ", link components " + std::to_string(c) + " -> " +
                           std::to_string(2 * c - 1));
  validate(out);
  return out;
}

NSInvariantRecord spun(const NSInvariantRecord& rec) {
  validate(rec);
  if (!rec.link_components)
    throw InsufficientDataError("spun: link component count is unknown");
  if (*rec.link_components < 1)
    throw HypothesisError("spun: spinning is undefined for an empty link");

  NSInvariantRecord out;
  out.n = rec.n + 1;
  out.p = rec.p;
  out.link_components = rec.link_components;
  out.provenance = rec.provenance;

  FiberDescriptor f;
  f.dim = rec.fiber.dim + 1;
  f.boundary_components = rec.link_components;
  // Spinning preserves the fundamental group of the fiber but no higher
  // homology is carried over.
  f.simply_connected = rec.fiber.simply_connected;
  out.fiber = f;

  out.trivial =
      (rec.fiber.simply_connected == TriState::No) ? TriState::No : TriState::Unknown;
  out.provenance.push_back("spun: " + dims(rec.n, rec.p) + " -> " + dims(out.n, out.p));
  validate(out);
  return out;
}

NSInvariantRecord compose_projection(const NSInvariantRecord& rec) {
  validate(rec);
  if (rec.p < 2)
    throw HypothesisError("compose_projection: target dimension must be at least 2");

  NSInvariantRecord out;
  out.n = rec.n;
  out.p = rec.p - 1;
  out.provenance = rec.provenance;

  FiberDescriptor f;
  f.dim = rec.fiber.dim + 1;
  if (rec.fiber.betti) {
    std::vector<long long> betti = *rec.fiber.betti;
    betti.push_back(0);  // a manifold with boundary has no top homology
    f.betti = betti;
  }
  f.bouquet = rec.fiber.bouquet;
  f.torsion_free_middle = rec.fiber.torsion_free_middle;
  f.simply_connected = rec.fiber.simply_connected;

  // The composite's fiber is the old fiber times an interval; when the old
  // fiber had boundary, the new boundary is connected.
  if (rec.link_components && *rec.link_components >= 1) {
    out.link_components = 1;
    f.boundary_components = 1;
  }
  out.fiber = f;
  out.degree = rec.degree;  // the first component of the germ is unchanged

  if (rec.trivial == TriState::Yes)
    out.trivial = TriState::Yes;
  else if (rec.trivial == TriState::No && has_nonzero_reduced_homology(out.fiber))
    out.trivial = TriState::No;
  else
    out.trivial = TriState::Unknown;

  std::string note = "projection composite: " + dims(rec.n, rec.p) + " -> " + dims(out.n, out.p);
  if (rec.p == 2) note += " (target dimension 2: interval fiber definition)";
  out.provenance.push_back(note);
  validate(out);
  return out;
}

NSInvariantRecord higher_dim_construct(int n, const LinkingMatrix& l) {
  if (n < 3) throw HypothesisError("higher_dim_construct: need ambient parameter n >= 3");
  validate(l);
  const int expected_sign = (n % 2 == 0) ? 1 : -1;
  if (l.symmetry_sign != expected_sign)
    throw HypothesisError("higher_dim_construct: linking matrix symmetry sign " +
                          std::to_string(l.symmetry_sign) + " does not match (-1)^n for n = " +
                          std::to_string(n));
  const std::size_t ell = l.k();
  if (ell % 2 != 0)
    throw HypothesisError("higher_dim_construct: matrix size must be even, got " +
                          std::to_string(ell));
  const Int det = determinant(l.entries);
  if (det != 1 && det != -1)
    throw HypothesisError("higher_dim_construct: matrix must be unimodular, determinant is " +
                          det.str());

  const long long k = 2 * static_cast<long long>(ell) + 1;
  const long long components = 2 * k - 1;

  NSInvariantRecord out;
  out.n = 2 * n;
  out.p = n;
  out.link_components = components;
  out.fiber = holed_sphere_fiber(n, components);
  out.degree = (n % 2 == 0) ? (2 * k - 2) : -(2 * k - 2);
  out.trivial = (k == 1) ? TriState::Yes : TriState::No;
  out.provenance.push_back("higher-dimensional construction: ambient n = " + std::to_string(n) +
                           ", matrix size " + std::to_string(ell) + ", k = " + std::to_string(k) +
                           ", link components " + std::to_string(components));
  validate(out);
  return out;
}

namespace {

// One known indicator: what it says about triviality and why.
struct Vote {
  bool trivial;
  std::string reason;
};

TrivialityResult settle(const std::vector<Vote>& votes, const NSInvariantRecord& rec,
                        const std::string& rule) {
  if (votes.empty()) return {TriState::Unknown, "no applicable invariant is known; " + rule};
  for (std::size_t i = 1; i < votes.size(); ++i)
    if (votes[i].trivial != votes[0].trivial)
      throw ContradictionError("triviality_check: " + votes[0].reason + " but " +
                               votes[i].reason);
  const TriState verdict = votes[0].trivial ? TriState::Yes : TriState::No;
  if (rec.trivial != TriState::Unknown && rec.trivial != verdict)
    throw ContradictionError("triviality_check: record marks trivial = " +
                             to_string(rec.trivial) + " but " + votes[0].reason);
  std::string reason = votes[0].reason;
  for (std::size_t i = 1; i < votes.size(); ++i) reason += "; " + votes[i].reason;
  return {verdict, reason + "; " + rule};
}

}  // namespace

TrivialityResult triviality_check(const NSInvariantRecord& rec) {
  validate(rec);
  std::vector<Vote> votes;

  if (rec.n == 6 && rec.p == 3) {
    if (rec.degree)
      votes.push_back({*rec.degree == 0, "degree is " + std::to_string(*rec.degree)});
    if (rec.link_components)
      votes.push_back(
          {*rec.link_components == 1,
           "link has " + std::to_string(*rec.link_components) + " component(s)"});
    if (rec.fiber.betti)
      votes.push_back({!has_nonzero_reduced_homology(rec.fiber),
                       std::string("fiber homology is ") +
                           (has_nonzero_reduced_homology(rec.fiber) ? "nontrivial" : "trivial")});
    return settle(votes, rec,
                  "in class (6,3) trivial, degree zero, and connected link are equivalent");
  }
  if (rec.n == 8 && rec.p == 5) {
    if (rec.degree)
      votes.push_back({*rec.degree == 0, "degree is " + std::to_string(*rec.degree)});
    if (rec.link_components)
      votes.push_back({*rec.link_components >= 1,
                       "link is " + std::string(*rec.link_components >= 1 ? "non-empty" : "empty")});
    return settle(votes, rec,
                  "in class (8,5) trivial, degree zero, and non-empty link are equivalent");
  }
  if (rec.n == 5 && rec.p == 2) {
    if (rec.fiber.simply_connected != TriState::Unknown)
      votes.push_back({rec.fiber.simply_connected == TriState::Yes,
                       "fiber is " +
                           std::string(rec.fiber.simply_connected == TriState::Yes
                                           ? "simply connected"
                                           : "not simply connected")});
    return settle(votes, rec,
                  "in class (5,2) trivial is equivalent to a simply connected fiber");
  }
  throw UnsupportedCaseError("triviality_check: no criterion available for class " +
                             dims(rec.n, rec.p));
}

std::optional<FiberDescriptor> stairs_conclude(int n, int p, bool stairs_available,
                                               TriState torsion_free,
                                               std::optional<long long> degree) {
  if (p < 2 || 2 * p > n)
    throw HypothesisError("stairs_conclude: need 2 <= p and 2p <= n, got " + dims(n, p));
  if (!stairs_available) return std::nullopt;

  if (n % 2 == 0) {
    const int m = n / 2;
    FiberDescriptor f;
    f.dim = n - p;
    if (degree) {
      const long long count = (m % 2 == 0) ? *degree : -*degree;
      if (count < 0)
        throw ContradictionError("stairs_conclude: degree " + std::to_string(*degree) +
                                 " gives a negative sphere count");
      std::vector<long long> betti(static_cast<std::size_t>(f.dim) + 1, 0);
      betti[0] = 1;
      betti[static_cast<std::size_t>(m) - 1] = count;
      f.betti = betti;
      std::vector<BouquetTerm> wedge;
      if (count > 0) wedge.push_back({m - 1, count});
      f.bouquet = wedge;
      f.simply_connected = simply_connected_of_wedge(wedge);
    } else {
      f.bouquet = std::vector<BouquetTerm>{{m - 1, std::nullopt}};
      f.simply_connected = simply_connected_of_wedge(*f.bouquet);
    }
    f.torsion_free_middle = TriState::Yes;
    return f;
  }

  if (torsion_free != TriState::Yes) return std::nullopt;
  const int m = (n - 1) / 2;
  FiberDescriptor f;
  f.dim = n - p;
  f.bouquet = std::vector<BouquetTerm>{{m - 1, std::nullopt}, {m, std::nullopt}};
  f.torsion_free_middle = TriState::Yes;
  f.simply_connected = TriState::Unknown;
  return f;
}

void validate(const NSInvariantRecord& rec) {
  if (rec.p < 1 || rec.n <= rec.p)
    throw DimensionError("record: need source dimension > target dimension >= 1, got " +
                         dims(rec.n, rec.p));
  if (rec.fiber.dim != rec.n - rec.p)
    throw ContradictionError("record: fiber dimension " + std::to_string(rec.fiber.dim) +
                             " does not equal n - p for " + dims(rec.n, rec.p));
  if (rec.link_components && *rec.link_components < 0)
    throw ContradictionError("record: negative link component count");

  const FiberDescriptor& f = rec.fiber;
  if (f.betti) {
    if (f.betti->size() != static_cast<std::size_t>(f.dim) + 1)
      throw DimensionError("record: betti sequence length must be fiber dim + 1");
    for (long long b : *f.betti)
      if (b < 0) throw ContradictionError("record: negative Betti number");
    if (rec.link_components && *rec.link_components >= 1 && (*f.betti)[0] != 1)
      throw ContradictionError("record: fiber of a non-empty link must be connected");
  }
  if (f.boundary_components && rec.link_components &&
      *f.boundary_components != *rec.link_components)
    throw ContradictionError(
        "record: fiber boundary count differs from link component count");

  if (f.bouquet) {
    bool counts_known = true;
    for (const BouquetTerm& t : *f.bouquet) {
      if (t.sphere_dim < 1 || t.sphere_dim > f.dim)
        throw ContradictionError("record: bouquet sphere dimension out of range");
      if (t.count && *t.count < 0)
        throw ContradictionError("record: negative bouquet multiplicity");
      if (!t.count) counts_known = false;
    }
    if (f.torsion_free_middle == TriState::No)
      throw ContradictionError("record: a wedge of spheres has free homology");
    if (counts_known && f.betti) {
      std::vector<long long> expected(static_cast<std::size_t>(f.dim) + 1, 0);
      expected[0] = 1;
      for (const BouquetTerm& t : *f.bouquet)
        expected[static_cast<std::size_t>(t.sphere_dim)] += *t.count;
      if (expected != *f.betti)
        throw ContradictionError("record: betti sequence does not match the bouquet");
    }
    if (simply_connected_of_wedge(*f.bouquet) == TriState::Yes &&
        f.simply_connected == TriState::No)
      throw ContradictionError("record: wedge of spheres of dimension >= 2 is simply connected");
  }

  if (rec.degree) {
    if (rec.n % 2 != 0 && *rec.degree != 0)
      throw ContradictionError("record: odd source dimension forces degree 0, got " +
                               std::to_string(*rec.degree));
    if (f.betti) {
      const long long chi = euler_characteristic(*f.betti);
      if (chi != euler_from_degree(rec.n, *rec.degree))
        throw ContradictionError("record: Euler characteristic " + std::to_string(chi) +
                                 " conflicts with degree " + std::to_string(*rec.degree));
    }
  }

  if (rec.trivial == TriState::Yes) {
    if (has_nonzero_reduced_homology(f))
      throw ContradictionError("record: trivial germ with homologically nontrivial fiber");
    if (rec.degree && *rec.degree != 0)
      throw ContradictionError("record: trivial germ with nonzero degree");
    if (f.simply_connected == TriState::No)
      throw ContradictionError("record: trivial germ with non-simply-connected fiber");
  }
}

}  // namespace nspair
