#include <doctest.h>

#include "gimel/chain.hpp"
#include "gimel/errors.hpp"
#include "support.hpp"

using namespace gimel;
using gimel::testing::fixture;

namespace {

GradedFreeComplex two_term(const RingCtx& ctx, int lo_label, int hi_label, const std::string& entry) {
  GradedFreeComplex c(ctx);
  c.modules[0] = {lo_label};
  c.modules[1] = {hi_label};
  PolyMatrix m(1, 1);
  m.at(0, 0) = ctx.parse(entry);
  c.set_d(0, m);
  return c;
}

}  // namespace

TEST_CASE("shipped fixtures validate") {
  for (int n = 3; n <= 8; ++n) {
    GradedFreeComplex c = fixture("p2m37_n" + std::to_string(n) + ".json");
    ComplexReport rep = validate(c);
    CHECK_MESSAGE(rep.ok, rep.failure);
    CHECK(rep.euler == 1);
    CHECK(c.labels(0) == std::vector<int>{-2 * n, 2 - 2 * n});
  }
  for (const char* f : {"s3_p754.json", "s3_p976.json"}) {
    ComplexReport rep = validate(fixture(f));
    CHECK_MESSAGE(rep.ok, rep.failure);
    CHECK(rep.euler == 1);
  }
}

TEST_CASE("validation rejects d^2 != 0 and inhomogeneous entries") {
  RingCtx r = RingCtx::equivariant(2);
  CHECK(validate(two_term(r, 0, -2, "x + a1")).ok);
  GradedFreeComplex wrong_degree = two_term(r, 0, -2, "x^2");
  CHECK_FALSE(validate(wrong_degree).ok);
  CHECK_THROWS_AS(require_valid(wrong_degree), Error);

  GradedFreeComplex sq(r);
  sq.modules[0] = {0};
  sq.modules[1] = {-2};
  sq.modules[2] = {-4};
  PolyMatrix a(1, 1), b(1, 1);
  a.at(0, 0) = r.parse("x");
  b.at(0, 0) = r.parse("x");
  sq.set_d(0, a);
  sq.set_d(1, b);
  ComplexReport rep = validate(sq);
  CHECK_FALSE(rep.ok);
  CHECK(rep.failure.find("is not zero") != std::string::npos);
}

TEST_CASE("tensor ranks and Euler characteristic multiply") {
  GradedFreeComplex a = fixture("s3_p754.json");
  GradedFreeComplex b = fixture("s3_p976.json");
  GradedFreeComplex t = tensor(a, b);
  CHECK(validate(t).ok);
  CHECK(t.rank(-1) == 2);
  CHECK(t.rank(0) == 5);
  CHECK(t.rank(1) == 2);
  CHECK(euler(t) == euler(a) * euler(b));
  // Labels add: (q^0)^2 + (q^-2)^3 in degree 0.
  std::vector<int> l = t.labels(0);
  std::sort(l.begin(), l.end());
  CHECK(l == std::vector<int>{-2, -2, -2, 0, 0});
}

TEST_CASE("tensor with the unknot is the identity") {
  GradedFreeComplex a = fixture("s3_p976.json");
  GradedFreeComplex t = tensor(a, unknot_complex(a.ctx));
  t.name = a.name;
  CHECK(t == a);
}

TEST_CASE("dual is an involution and negates labels") {
  GradedFreeComplex a = fixture("s3_p754.json");
  GradedFreeComplex d = dual(a);
  CHECK(validate(d).ok);
  CHECK(d.labels(1) == std::vector<int>{-4});
  CHECK(d.labels(0) == std::vector<int>{0, 0});
  GradedFreeComplex dd = dual(d);
  dd.name = a.name;
  CHECK(dd == a);
}

TEST_CASE("shift and direct sum") {
  GradedFreeComplex a = fixture("s3_p754.json");
  GradedFreeComplex s = shift(a, 1, 2);
  CHECK(s.labels(0) == std::vector<int>{6});
  CHECK(s.labels(1) == std::vector<int>{2, 2});
  CHECK(validate(s).ok);
  CHECK(euler(s) == -euler(a));
  GradedFreeComplex sum = direct_sum(a, a);
  CHECK(sum.total_rank() == 2 * a.total_rank());
  CHECK(euler(sum) == 2);
  CHECK(validate(sum).ok);
}

TEST_CASE("evaluation specializes every entry") {
  GradedFreeComplex a = fixture("p2m37_n3.json");
  GradedFreeComplex ev = evaluate(a, RingCtx::gimel_potential(3));
  CHECK(ev.ctx.is_gimel_potential());
  CHECK(validate(ev).ok);
  // dw' = 3x^2 + 2 a2 x + a1 -> 3x^2 - 2x
  CHECK(ev.d(-1).at(0, 0) == ev.ctx.parse("3*x^2 - 2*x"));
  CHECK_THROWS_AS(evaluate(a, RingCtx::gimel_potential(4)), Error);
}

TEST_CASE("tensoring in different rings is a context mismatch") {
  GradedFreeComplex a = fixture("s3_p754.json");
  GradedFreeComplex b = unknot_complex(RingCtx::equivariant(2));
  try {
    tensor(a, b);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ContextMismatch);
  }
}
