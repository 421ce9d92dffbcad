#include <doctest.h>

#include <random>

#include "gen.hpp"
#include "nspair/exact_linalg.hpp"
#include "oracles.hpp"

using namespace nspair;

TEST_CASE("determinant of small frozen matrices") {
  CHECK(determinant(IntMatrix()) == 1);  // empty product
  CHECK(determinant(IntMatrix::from_rows({{Int(7)}})) == 7);
  CHECK(determinant(IntMatrix::from_rows({{Int(1), Int(2)}, {Int(3), Int(4)}})) == -2);
  CHECK(determinant(IntMatrix::identity(5)) == 1);
  IntMatrix singular = IntMatrix::from_rows({{Int(1), Int(2)}, {Int(2), Int(4)}});
  CHECK(determinant(singular) == 0);
}

TEST_CASE("determinant rejects non-square input") {
  IntMatrix m(2, 3);
  CHECK_THROWS_AS(determinant(m), DimensionError);
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 1 + trial % 6;
    IntMatrix m = gen::random_square(rng, n, 9);
    CHECK(determinant(m) == oracle::cofactor_determinant(m));
  }
  IntMatrix big = gen::random_square(rng, 7, 9);
  CHECK(determinant(big) == oracle::cofactor_determinant(big));
}

TEST_CASE("rational determinant clears denominators exactly") {
  RatMatrix m(2, 2);
  m.at(0, 0) = Rat(1, 2);
  m.at(0, 1) = Rat(1, 3);
  m.at(1, 0) = Rat(1, 5);
  m.at(1, 1) = Rat(1, 7);
  CHECK(determinant(m) == Rat(1, 14) - Rat(1, 15));
}

TEST_CASE("pfaffian of frozen matrices") {
  CHECK(pfaffian(IntMatrix()) == 1);
  CHECK(pfaffian(IntMatrix::from_rows({{Int(0), Int(1)}, {Int(-1), Int(0)}})) == 1);
  CHECK(pfaffian(IntMatrix::from_rows({{Int(0), Int(2)}, {Int(-2), Int(0)}})) == 2);
  // Pf of [[0,a,b,c],[-a,0,d,e],[-b,-d,0,f],[-c,-e,-f,0]] is a*f - b*e + c*d.
  IntMatrix four = IntMatrix::from_rows({{Int(0), Int(2), Int(3), Int(5)},
                                         {Int(-2), Int(0), Int(7), Int(11)},
                                         {Int(-3), Int(-7), Int(0), Int(13)},
                                         {Int(-5), Int(-11), Int(-13), Int(0)}});
  CHECK(pfaffian(four) == 2 * 13 - 3 * 11 + 5 * 7);
}

TEST_CASE("pfaffian rejects malformed input") {
  CHECK_THROWS_AS(pfaffian(IntMatrix(3, 3)), StructureError);  // odd size
  IntMatrix notskew = IntMatrix::from_rows({{Int(0), Int(1)}, {Int(1), Int(0)}});
  CHECK_THROWS_AS(pfaffian(notskew), StructureError);
  IntMatrix diag = IntMatrix::from_rows({{Int(1), Int(1)}, {Int(-1), Int(0)}});
  CHECK_THROWS_AS(pfaffian(diag), StructureError);
}

TEST_CASE("pfaffian matches the perfect-matching sum and squares to the determinant") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t k = 2 * (1 + trial % 4);  // 2, 4, 6, 8
    IntMatrix m = gen::random_skew(rng, k, 9);
    Int pf = pfaffian(m);
    CHECK(pf == oracle::matching_pfaffian(m));
    CHECK(pf * pf == determinant(m));
  }
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = gen::random_skew(rng, 10, 9);
    Int pf = pfaffian(m);
    CHECK(pf * pf == determinant(m));
  }
}

TEST_CASE("odd-size skew matrices are singular") {
  std::mt19937 rng(31);
  for (std::size_t k : {1, 3, 5, 7}) {
    IntMatrix m = gen::random_skew(rng, k, 9);
    CHECK(determinant(m) == 0);
  }
}

TEST_CASE("smith normal form of frozen matrices") {
  SmithNormalForm s = smith_normal_form(IntMatrix::from_rows({{Int(0), Int(2)}, {Int(-2), Int(0)}}));
  CHECK(s.invariant_factors == std::vector<Int>{2, 2});
  CHECK(s.rank == 2);

  s = smith_normal_form(IntMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(3)}}));
  CHECK(s.invariant_factors == std::vector<Int>{1, 6});

  s = smith_normal_form(IntMatrix::from_rows({{Int(2), Int(4)}, {Int(6), Int(8)}}));
  CHECK(s.invariant_factors == std::vector<Int>{2, 4});

  s = smith_normal_form(IntMatrix::from_rows({{Int(1), Int(2)}, {Int(2), Int(4)}}));
  CHECK(s.invariant_factors == std::vector<Int>{1, 0});
  CHECK(s.rank == 1);

  s = smith_normal_form(IntMatrix(3, 3));
  CHECK(s.invariant_factors == std::vector<Int>{0, 0, 0});
  CHECK(s.rank == 0);

  s = smith_normal_form(IntMatrix::identity(4));
  CHECK(s.invariant_factors == std::vector<Int>{1, 1, 1, 1});
}

TEST_CASE("smith normal form matches determinantal divisors") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix m = gen::random_square(rng, 4, 6);
    SmithNormalForm s = smith_normal_form(m);
    CHECK(s.invariant_factors == oracle::divisor_invariant_factors(m));
  }
  // Rectangular shapes.
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> d(-6, 6);
    IntMatrix m(3, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) m.at(i, j) = d(rng);
    CHECK(smith_normal_form(m).invariant_factors == oracle::divisor_invariant_factors(m));
    IntMatrix t = m.transpose();
    CHECK(smith_normal_form(t).invariant_factors == oracle::divisor_invariant_factors(t));
  }
}

TEST_CASE("smith normal form invariant factors divide in order and multiply to |det|") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + trial % 4;
    IntMatrix m = gen::random_square(rng, n, 9);
    SmithNormalForm s = smith_normal_form(m);
    Int product = 1;
    for (std::size_t i = 0; i < s.invariant_factors.size(); ++i) {
      const Int& d = s.invariant_factors[i];
      CHECK(d >= 0);
      if (i + 1 < s.invariant_factors.size() && d != 0 && s.invariant_factors[i + 1] != 0)
        CHECK(s.invariant_factors[i + 1] % d == 0);
      product *= d;
    }
    if (s.rank == n) CHECK(product == abs_of(determinant(m)));
  }
}

TEST_CASE("smith normal form is invariant under unimodular changes of basis") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix m = gen::random_square(rng, 4, 5);
    IntMatrix u = gen::random_unimodular(rng, 4, 12);
    IntMatrix v = gen::random_unimodular(rng, 4, 12);
    CHECK(smith_normal_form(u.multiply(m).multiply(v)).invariant_factors ==
          smith_normal_form(m).invariant_factors);
  }
}

TEST_CASE("characteristic polynomial agrees with shifted determinants") {
  IntMatrix diag = IntMatrix::from_rows({{Int(1), Int(0)}, {Int(0), Int(2)}});
  CHECK(characteristic_polynomial(diag) == std::vector<Int>{2, -3, 1});

  std::mt19937 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 5;
    IntMatrix m = gen::random_square(rng, n, 7);
    std::vector<Int> p = characteristic_polynomial(m);
    REQUIRE(p.size() == n + 1);
    CHECK(p.back() == 1);
    for (long long t : {-3LL, 0LL, 1LL, 5LL}) {
      Int value = 0;
      Int power = 1;
      for (const Int& c : p) {
        value += c * power;
        power *= t;
      }
      IntMatrix shifted(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          shifted.at(i, j) = (i == j ? Int(t) : Int(0)) - m.at(i, j);
      CHECK(value == oracle::cofactor_determinant(shifted));
    }
  }
}

TEST_CASE("exact signature of frozen matrices") {
  CHECK(exact_signature(IntMatrix::from_rows({{Int(0), Int(1)}, {Int(1), Int(0)}})) ==
        ExactSignature{1, 1, 0});
  CHECK(exact_signature(IntMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(2)}})) ==
        ExactSignature{2, 0, 0});
  CHECK(exact_signature(IntMatrix::from_rows({{Int(4)}})) == ExactSignature{1, 0, 0});
  CHECK(exact_signature(IntMatrix(2, 2)) == ExactSignature{0, 0, 2});
  CHECK(exact_signature(IntMatrix::from_rows({{Int(-1), Int(0), Int(0)},
                                              {Int(0), Int(0), Int(0)},
                                              {Int(0), Int(0), Int(9)}})) ==
        ExactSignature{1, 1, 1});
  CHECK(ExactSignature{1, 3, 0}.index() == -2);
}

TEST_CASE("exact signature rejects non-symmetric input") {
  RatMatrix m(2, 2);
  m.at(0, 1) = 1;
  CHECK_THROWS_AS(exact_signature(m), StructureError);
}

TEST_CASE("exact signature matches Sturm root counting") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = 1 + trial % 5;
    IntMatrix m = gen::random_symmetric(rng, n, 6);
    if (trial % 4 == 0 && n >= 2) {
      // Plant a kernel vector to exercise zero eigenvalues.
      for (std::size_t j = 0; j < n; ++j) {
        m.at(0, j) = 0;
        m.at(j, 0) = 0;
      }
    }
    ExactSignature s = exact_signature(m);
    oracle::SignCounts expected = oracle::sturm_signature(m);
    CHECK(s.positive == expected.positive);
    CHECK(s.negative == expected.negative);
    CHECK(s.zero == expected.zero);
  }
}

TEST_CASE("exact signature on rational matrices with denominators") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix ints = gen::random_symmetric(rng, 4, 9);
    RatMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = Rat(ints.at(i, j), Int(6));
    ExactSignature s = exact_signature(m);
    oracle::SignCounts expected = oracle::sturm_signature(m);
    CHECK(s.positive == expected.positive);
    CHECK(s.negative == expected.negative);
    CHECK(s.zero == expected.zero);
  }
}

TEST_CASE("signature is a congruence invariant") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix m = gen::random_symmetric(rng, 4, 5);
    IntMatrix p = gen::random_unimodular(rng, 4, 10);
    IntMatrix congruent = p.transpose().multiply(m).multiply(p);
    CHECK(exact_signature(congruent) == exact_signature(m));
  }
}
