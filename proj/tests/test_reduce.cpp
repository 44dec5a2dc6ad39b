#include <doctest.h>

#include <random>

#include "gimel/errors.hpp"
#include "gimel/filtration.hpp"
#include "gimel/reduce.hpp"
#include "planting.hpp"
#include "support.hpp"

using namespace gimel;
using gimel::testing::fixture;

TEST_CASE("an isolated unit pair cancels completely") {
  RingCtx r = RingCtx::equivariant(2);
  GradedFreeComplex c(r);
  c.modules[0] = {3};
  c.modules[1] = {3};
  PolyMatrix m(1, 1);
  m.at(0, 0) = r.constant(-5);
  c.set_d(0, m);
  SimplifyResult res = gauss_simplify_tracked(c);
  CHECK(res.cancelled_pairs == 1);
  CHECK(res.complex.total_rank() == 0);
}

TEST_CASE("constants between different labels are never pivots") {
  // Entry x is not a unit; an entry between unequal labels cannot be constant
  // in a valid complex, so nothing cancels.
  GradedFreeComplex c = fixture("s3_p754.json");
  SimplifyResult res = gauss_simplify_tracked(c);
  CHECK(res.cancelled_pairs == 0);
  CHECK(res.complex == c);
}

TEST_CASE("elimination applies the zig-zag correction") {
  // g0 -> (h0, h1) by (1, 1), g1 -> h1 by x. One unit pair cancels and the
  // survivor g1 -> h picks up +-x through the correction term.
  RingCtx r = RingCtx::equivariant(2);
  GradedFreeComplex c(r);
  c.modules[0] = {0, 2};
  c.modules[1] = {0, 0};
  PolyMatrix m(2, 2);
  m.at(0, 0) = r.one();
  m.at(1, 0) = r.one();
  m.at(1, 1) = r.x_power(1);
  c.set_d(0, m);
  REQUIRE(validate(c).ok);
  SimplifyResult res = gauss_simplify_tracked(c);
  CHECK(res.cancelled_pairs == 1);
  CHECK(validate(res.complex).ok);
  CHECK(euler(res.complex) == 0);
  REQUIRE(res.complex.total_rank() == 2);
  Poly survivor = res.complex.d(0).at(0, 0);
  CHECK((survivor == r.x_power(1) || survivor == -r.x_power(1)));
}

TEST_CASE("split components and Euler bookkeeping") {
  GradedFreeComplex a = fixture("s3_p754.json");
  GradedFreeComplex b = fixture("s3_p976.json");
  GradedFreeComplex sum = direct_sum(a, b);
  Decomposition dec = split_components(sum);
  CHECK(dec.summands.size() == 2);
  long total = 0;
  for (const auto& s : dec.summands) total += euler(s);
  CHECK(total == euler(sum));
  // Two odd summands: no unique S_n.
  try {
    extract_sn(dec);
    FAIL("expected a decomposition error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Decomposition);
  }
  Decomposition one = split_components(a);
  CHECK(extract_sn(one) == a);
}

TEST_CASE("odd summand of Euler characteristic -1 is rejected") {
  GradedFreeComplex a = shift(fixture("s3_p754.json"), 1, 0);
  try {
    extract_sn(split_components(a));
    FAIL("expected a decomposition error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Decomposition);
  }
}

TEST_CASE("planted pairs are removed and the fixture recovered") {
  std::mt19937 rng(20240611);
  for (const char* f : {"s3_p754.json", "s3_p976.json", "p2m37_n4.json"}) {
    GradedFreeComplex base = fixture(f);
    for (int round = 0; round < 5; ++round) {
      auto planted = gimel::testing::plant_pairs(base, 4, 10, rng);
      REQUIRE(validate(planted.complex).ok);
      CHECK(planted.shears_applied == 10);
      SimplifyResult res = gauss_simplify_tracked(planted.complex);
      CHECK(res.cancelled_pairs == 4);
      GradedFreeComplex sn = extract_sn(split_components(res.complex));
      CHECK(gimel::testing::isomorphic_up_to_scaling(base, sn));
    }
  }
}

TEST_CASE("simplification preserves the cohomology of the reduced complex") {
  std::mt19937 rng(7);
  RingCtx split3 = RingCtx::specialized_from_string("x^3 - x");
  for (const char* f : {"s3_p754.json", "s3_p976.json"}) {
    GradedFreeComplex base = fixture(f);
    auto planted = gimel::testing::plant_pairs(base, 3, 8, rng);
    GradedFreeComplex simple = gauss_simplify(planted.complex);
    for (int alpha : {-1, 0, 1}) {
      CHECK(reduced_complex(planted.complex, split3, alpha).cohomology() ==
            reduced_complex(simple, split3, alpha).cohomology());
    }
  }
}

TEST_CASE("reduced complex is one-dimensional for a knot") {
  RingCtx g3 = RingCtx::gimel_potential(3);
  for (const char* f : {"s3_p754.json", "s3_p976.json", "p2m37_n3.json"}) {
    RationalComplex rc = reduced_complex(fixture(f), g3, 1);
    CHECK(rc.total_cohomology() == 1);
    CHECK(rc.cohomology().count(0) == 1);
  }
  CHECK_THROWS_AS(reduced_complex(fixture("s3_p754.json"), g3, 2), Error);
  // 0 is a double root of x^3 - x^2.
  CHECK_THROWS_AS(reduced_complex(fixture("s3_p754.json"), g3, 0), Error);
}

TEST_CASE("sparse and dense forms round-trip") {
  GradedFreeComplex a = fixture("p2m37_n6.json");
  CHECK(SparseComplex::from_dense(a).to_dense() == a);
}
