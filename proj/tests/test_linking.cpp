#include <doctest.h>

#include <random>

#include "gen.hpp"
#include "nspair/linking.hpp"
#include "oracles.hpp"

using namespace nspair;

namespace {

LinkingMatrix skew(IntMatrix entries) { return LinkingMatrix{-1, std::move(entries)}; }

bool all_ones_full_rank(const SmithNormalForm& s, std::size_t n) {
  if (s.rank != n) return false;
  for (const Int& d : s.invariant_factors)
    if (d != 1) return false;
  return true;
}

}  // namespace

TEST_CASE("linking matrix validation") {
  CHECK_NOTHROW(validate(generate_unimodular_blocks(2)));
  CHECK_NOTHROW(validate(LinkingMatrix{1, IntMatrix::from_rows({{Int(0), Int(3)}, {Int(3), Int(0)}})}));

  LinkingMatrix bad_sign{0, IntMatrix(2, 2)};
  CHECK_THROWS_AS(validate(bad_sign), StructureError);

  LinkingMatrix diag{-1, IntMatrix::from_rows({{Int(1), Int(0)}, {Int(0), Int(0)}})};
  CHECK_THROWS_AS(validate(diag), StructureError);

  LinkingMatrix not_skew{-1, IntMatrix::from_rows({{Int(0), Int(1)}, {Int(1), Int(0)}})};
  CHECK_THROWS_AS(validate(not_skew), StructureError);

  LinkingMatrix rect{-1, IntMatrix(2, 3)};
  CHECK_THROWS_AS(validate(rect), StructureError);
}

TEST_CASE("presentation matrix layout for the empty link complement") {
  IntMatrix r = build_R(skew(IntMatrix(0, 0)));
  CHECK(r == IntMatrix::from_rows({{Int(0), Int(1)}, {Int(-1), Int(0)}}));
}

TEST_CASE("presentation matrix layout for the elementary block") {
  IntMatrix r = build_R(generate_unimodular_blocks(1));
  CHECK(r == IntMatrix::from_rows({{Int(0), Int(0), Int(0), Int(1), Int(1), Int(1)},
                                   {Int(1), Int(1), Int(0), Int(0), Int(0), Int(1)},
                                   {Int(1), Int(0), Int(1), Int(0), Int(-1), Int(0)},
                                   {Int(-1), Int(0), Int(0), Int(0), Int(0), Int(0)},
                                   {Int(0), Int(-1), Int(0), Int(0), Int(0), Int(0)},
                                   {Int(0), Int(0), Int(-1), Int(0), Int(0), Int(0)}}));
  CHECK(determinant(r) == 1);
}

TEST_CASE("presentation matrix is skew-only") {
  LinkingMatrix sym{1, IntMatrix::from_rows({{Int(0), Int(1)}, {Int(1), Int(0)}})};
  CHECK_THROWS_AS(build_R(sym), UnsupportedCaseError);
}

TEST_CASE("presentation matrix determinant equals the linking determinant up to sign") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t k = 1 + trial % 8;
    LinkingMatrix l = skew(gen::random_skew(rng, k, 9));
    CHECK(abs_of(determinant(build_R(l))) == abs_of(determinant(l.entries)));
  }
}

TEST_CASE("classification of the elementary block") {
  ClassificationReport r = classify(generate_unimodular_blocks(1));
  CHECK(r.k == 2);
  CHECK(r.symmetry_sign == -1);
  CHECK(r.det_A == 1);
  REQUIRE(r.pfaffian_A.has_value());
  CHECK(*r.pfaffian_A == 1);
  REQUIRE(r.det_R.has_value());
  CHECK(*r.det_R == 1);
  CHECK(r.h2_invariant_factors == std::vector<Int>(6, Int(1)));
  CHECK(r.is_ns_pair);
  CHECK(r.link_components == 3);
  REQUIRE(r.fiber.has_value());
  CHECK(r.fiber->dim == 3);
  CHECK(r.fiber->betti == std::vector<long long>{1, 0, 2, 0});
  CHECK(r.fiber->boundary_components == 3);
  CHECK(r.fiber->bouquet == std::vector<BouquetTerm>{{2, 2}});
  CHECK(r.fiber->torsion_free_middle == TriState::Yes);
  CHECK(r.fiber->simply_connected == TriState::Yes);
}

TEST_CASE("classification of a torsion link") {
  ClassificationReport r =
      classify(skew(IntMatrix::from_rows({{Int(0), Int(2)}, {Int(-2), Int(0)}})));
  CHECK(r.det_A == 4);
  CHECK(*r.pfaffian_A == 2);
  CHECK(*r.det_R == 4);
  CHECK(r.h2_invariant_factors == std::vector<Int>{1, 1, 1, 1, 2, 2});
  CHECK_FALSE(r.is_ns_pair);
  CHECK_FALSE(r.fiber.has_value());
}

TEST_CASE("classification of an odd link") {
  ClassificationReport r = classify(skew(IntMatrix(1, 1)));
  CHECK(r.k == 1);
  CHECK(r.det_A == 0);
  CHECK_FALSE(r.pfaffian_A.has_value());  // odd size has no pfaffian
  CHECK(*r.det_R == 0);
  CHECK_FALSE(r.is_ns_pair);
  // Free rank one in the cokernel: exactly one zero invariant factor.
  std::size_t zeros = 0;
  for (const Int& d : r.h2_invariant_factors) zeros += (d == 0);
  CHECK(zeros == 1);
}

TEST_CASE("classification of symmetric linking data") {
  LinkingMatrix sym{1, IntMatrix::from_rows({{Int(0), Int(1)}, {Int(1), Int(0)}})};
  ClassificationReport bare = classify(sym);
  CHECK(bare.det_A == -1);
  CHECK(bare.is_ns_pair);
  CHECK_FALSE(bare.det_R.has_value());
  CHECK_FALSE(bare.pfaffian_A.has_value());
  CHECK_FALSE(bare.fiber.has_value());  // ambient dimension not supplied

  ClassificationReport with_dim = classify(sym, 6);
  REQUIRE(with_dim.fiber.has_value());
  CHECK(with_dim.fiber->dim == 6);
  CHECK(with_dim.fiber->bouquet == std::vector<BouquetTerm>{{5, 2}});

  CHECK_THROWS_AS(classify(sym, 5), UnsupportedCaseError);
  CHECK_THROWS_AS(classify(sym, 2), UnsupportedCaseError);
  CHECK_THROWS_AS(classify(generate_unimodular_blocks(1), 4), UnsupportedCaseError);
}

TEST_CASE("unimodularity, the pair condition, and the smith form of R agree") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t k = 1 + trial % 6;
    LinkingMatrix l = skew(gen::random_skew(rng, k, 3));
    ClassificationReport r = classify(l);
    bool unimodular = abs_of(r.det_A) == 1;
    CHECK(r.is_ns_pair == unimodular);
    SmithNormalForm s = smith_normal_form(build_R(l));
    CHECK(r.is_ns_pair == all_ones_full_rank(s, 2 * k + 2));
    CHECK(r.h2_invariant_factors == s.invariant_factors);
  }
}

TEST_CASE("classification is invariant under relabeling the moving spheres") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t k = 2 + trial % 5;
    LinkingMatrix l = skew(gen::random_skew(rng, k, 5));
    // Signed permutation: reverse the order and flip the sign of sphere 0.
    IntMatrix p(k, k);
    for (std::size_t i = 0; i < k; ++i) p.at(i, k - 1 - i) = (i == 0) ? -1 : 1;
    LinkingMatrix relabeled = skew(p.transpose().multiply(l.entries).multiply(p));
    ClassificationReport a = classify(l);
    ClassificationReport b = classify(relabeled);
    CHECK(a.is_ns_pair == b.is_ns_pair);
    CHECK(abs_of(a.det_A) == abs_of(b.det_A));
    CHECK(a.h2_invariant_factors == b.h2_invariant_factors);
  }
}

TEST_CASE("generated elementary sums are unimodular") {
  CHECK(generate_unimodular_blocks(0).k() == 0);
  CHECK(generate_unimodular_blocks(1).entries ==
        IntMatrix::from_rows({{Int(0), Int(1)}, {Int(-1), Int(0)}}));
  for (std::size_t half : {1, 2, 3, 4}) {
    LinkingMatrix l = generate_unimodular_blocks(half);
    CHECK(l.k() == 2 * half);
    CHECK_NOTHROW(validate(l));
    CHECK(pfaffian(l.entries) == 1);
    CHECK(oracle::matching_pfaffian(l.entries) == 1);
    CHECK(classify(l).is_ns_pair);
  }
}

TEST_CASE("record view of a classified pair") {
  NSInvariantRecord rec = to_record(classify(generate_unimodular_blocks(1)));
  CHECK(rec.n == 5);
  CHECK(rec.p == 2);
  CHECK(rec.link_dim() == 2);
  CHECK(rec.link_components == 3);
  CHECK(rec.trivial == TriState::No);
  CHECK(rec.fiber.dim == 3);
  REQUIRE(rec.provenance.size() == 1);
  CHECK(rec.provenance[0] ==
        "classified fibered link of 3 two-spheres in the five-sphere (k = 2, det A = 1)");

  NSInvariantRecord unknot = to_record(classify(skew(IntMatrix(0, 0))));
  CHECK(unknot.link_components == 1);
  CHECK(unknot.trivial == TriState::Yes);

  CHECK_THROWS_AS(to_record(classify(skew(IntMatrix::from_rows({{Int(0), Int(2)}, {Int(-2), Int(0)}})))),
                  HypothesisError);
  LinkingMatrix sym{1, IntMatrix::from_rows({{Int(0), Int(1)}, {Int(1), Int(0)}})};
  CHECK_THROWS_AS(to_record(classify(sym, 6)), UnsupportedCaseError);
}
