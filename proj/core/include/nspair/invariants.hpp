#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nspair/errors.hpp"

namespace nspair {

struct LinkingMatrix;

// Three-valued logic for invariants that a construction may or may not
// determine. Unknown is contagious: no operation ever upgrades it silently.
enum class TriState { Yes, No, Unknown };

std::string to_string(TriState t);

// One wedge summand: `count` copies of a sphere of dimension sphere_dim.
// count is absent when the dimension is forced but the multiplicity is not.
struct BouquetTerm {
  int sphere_dim = 0;
  std::optional<long long> count;

  bool operator==(const BouquetTerm&) const = default;
};

// Homotopy/homology summary of a fiber. Absent optionals mean unknown, not
// zero. An empty bouquet list means the fiber is contractible; an absent
// bouquet means no wedge decomposition is claimed.
struct FiberDescriptor {
  int dim = 0;
  std::optional<std::vector<long long>> betti;  // beta_0 .. beta_dim
  std::optional<long long> boundary_components;
  std::optional<std::vector<BouquetTerm>> bouquet;
  TriState torsion_free_middle = TriState::Unknown;
  TriState simply_connected = TriState::Unknown;

  bool operator==(const FiberDescriptor&) const = default;
};

// Symbolic record of a fibered link or of the class of a map germ
// (R^n, 0) -> (R^p, 0) with isolated singular value structure. The link
// lives in a sphere and has dimension n - p - 1; every construction appends
// a provenance line instead of mutating in place.
struct NSInvariantRecord {
  int n = 0;  // source dimension
  int p = 0;  // target dimension
  std::optional<long long> link_components;
  FiberDescriptor fiber;
  std::optional<long long> degree;  // local degree of the first component's gradient
  TriState trivial = TriState::Unknown;
  std::vector<std::string> provenance;

  int link_dim() const { return n - p - 1; }

  bool operator==(const NSInvariantRecord&) const = default;
};

struct TrivialityResult {
  TriState trivial = TriState::Unknown;
  std::string reason;

  bool operator==(const TrivialityResult&) const = default;
};

// Euler characteristic of the betti sequence (alternating sum).
long long euler_characteristic(const std::vector<long long>& betti);

// Euler characteristic of the Milnor fiber of a germ with source dimension
// n from the local degree of the gradient of its first component: 1 - deg
// for even n, always 1 for odd n. Odd n with nonzero degree is
// contradictory and throws.
long long euler_from_degree(int n, long long degree);

// Fiber of a germ (R^{2n}, 0) -> (R^n, 0), n >= 2: a wedge of
// (-1)^n * degree copies of S^{n-1}. Throws if that count is negative.
FiberDescriptor bouquet_even(int n, long long degree);

// Fiber of a germ (R^{2n+1}, 0) -> (R^n, 0), n >= 3, with beta = beta_{n-1}.
// Free middle homology forces a wedge of beta copies of S^{n-1} v S^n; a
// torsion flag of No blocks any wedge claim (beta_n = beta_{n-1} still
// holds either way).
FiberDescriptor bouquet_odd(int n, long long beta, TriState torsion_free);

// Boundary-sum doubling: from a fibered-link record with c components and
// known fiber Betti data, produce the germ record one dimension up whose
// link has 2c - 1 components and whose fiber Betti numbers double in the
// open range 0 < i < dim.
NSInvariantRecord looijenga_sum(const NSInvariantRecord& rec);

// Spinning: source and link dimensions go up by one, component count and
// fundamental-group data survive, Betti numbers beyond beta_0 do not.
NSInvariantRecord spun(const NSInvariantRecord& rec);

// Composition with the projection that drops the last target coordinate:
// the fiber gains a trivial interval factor, so all homotopy data is
// copied; the degree of the first component is untouched. Target
// dimension 2 uses the interval-fiber reading of the composite and is
// flagged in provenance.
NSInvariantRecord compose_projection(const NSInvariantRecord& rec);

// Record of the germ (R^{2n}, 0) -> (R^n, 0) built from an l x l
// unimodular (-1)^n-symmetric linking matrix with l even: k = 2l + 1,
// link of 2k - 1 components, fiber a (2k-1)-holed n-sphere.
NSInvariantRecord higher_dim_construct(int n, const LinkingMatrix& l);

// Triviality decision in the three dimension pairs where it is equivalent
// to a computable invariant: (6,3) degree zero / connected link, (8,5)
// non-empty link, (5,2) simply connected fiber. Inconsistent supplied data
// throws ContradictionError.
TrivialityResult triviality_check(const NSInvariantRecord& rec);

// Conclusions available when a germ (R^n, 0) -> (R^p, 0), 2p <= n, admits
// a full stairs extension: for even n a wedge of (n/2 - 1)-spheres (count
// known only when the degree is supplied), for odd n with free middle
// homology a paired wedge in dimensions (n-1)/2 - 1 and (n-1)/2. Returns
// nullopt when the hypotheses do not determine anything.
std::optional<FiberDescriptor> stairs_conclude(int n, int p, bool stairs_available,
                                               TriState torsion_free,
                                               std::optional<long long> degree = std::nullopt);

// Structural consistency: link dimension arithmetic, betti length and
// beta_0, bouquet vs betti agreement, Euler consistency with the degree,
// boundary vs link component counts, flags compatible with a claimed
// wedge. Throws ContradictionError or DimensionError.
void validate(const NSInvariantRecord& rec);

}  // namespace nspair
