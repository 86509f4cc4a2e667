#include "doctest.h"

#include "gradalg/idempotents.hpp"
#include "support/fixtures.hpp"

using namespace gradalg;
namespace fx = gradalg::fixtures;

namespace {

// K[x]/(x^2) x K, basis {1_1, x, 1_2}
Algebra dual_numbers_plus_k(const Field& f) {
  Algebra a(f, 3, {"one1", "x", "one2"});
  a.set_product(0, 0, vec_unit(f, 3, 0));
  a.set_product(0, 1, vec_unit(f, 3, 1));
  a.set_product(1, 0, vec_unit(f, 3, 1));
  a.set_product(2, 2, vec_unit(f, 3, 2));
  a.set_unit(vec_add(vec_unit(f, 3, 0), vec_unit(f, 3, 2)));
  return a;
}

}  // namespace

TEST_CASE("idempotent lifting") {
  Field q = Field::rationals();

  Algebra a = dual_numbers_plus_k(q);
  a.validate();
  Matrix jac = algebra_radical(a).basis;
  REQUIRE(jac.rows() == 1);

  // ebar = 1 lifts to 1
  CHECK(lift_idempotent(a, jac, a.unit()) == a.unit());

  // (0, 1) is already idempotent
  CHECK(lift_idempotent(a, jac, vec_unit(q, 3, 2)) == vec_unit(q, 3, 2));

  // 1_1 + x is idempotent only mod J; the iteration strips the radical part
  Vec dirty = vec_add(vec_unit(q, 3, 0), vec_unit(q, 3, 1));
  Vec e = lift_idempotent(a, jac, dirty);
  CHECK(a.is_idempotent(e));
  CHECK(e == vec_unit(q, 3, 0));

  // triangular 2x2: diag(1, 0) mod J lifts exactly
  Algebra t = fx::triangular(q, 2);
  Matrix jt = algebra_radical(t).basis;
  Vec et = lift_idempotent(t, jt, vec_unit(q, 3, 0));
  CHECK(t.is_idempotent(et));

  // a preimage that is not idempotent mod J is rejected
  Algebra kk = fx::product_kk(q);
  Matrix jkk = algebra_radical(kk).basis;
  CHECK_THROWS_AS(lift_idempotent(kk, jkk, vec_scale(Scalar::from_int(q, 2), vec_unit(q, 2, 0))),
                  Error);

  // lifting works in characteristic 2 as well
  Field f2 = Field::prime(2);
  Algebra a2 = dual_numbers_plus_k(f2);
  Matrix j2 = algebra_radical(a2).basis;
  Vec dirty2 = vec_add(vec_unit(f2, 3, 0), vec_unit(f2, 3, 1));
  Vec e2 = lift_idempotent(a2, j2, dirty2);
  CHECK(a2.is_idempotent(e2));
  Vec defect = vec_sub(e2, dirty2);
  CHECK(subspace_contains(j2, defect));
}

TEST_CASE("complete primitive idempotent sets") {
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(5)}) {
    CAPTURE(f.to_string());

    auto one = complete_primitive_set(fx::truncated_poly(f, 1));
    CHECK(one.elements.size() == 1);
    CHECK(one.orthogonal);
    CHECK(one.complete);

    auto kk = complete_primitive_set(fx::product_kk(f));
    CHECK(kk.elements.size() == 2);
    CHECK(kk.primitive == std::vector<bool>{true, true});

    auto m2 = complete_primitive_set(fx::full_matrix(f, 2));
    CHECK(m2.elements.size() == 2);
    for (bool p : m2.primitive) CHECK(p);

    // local algebra: single primitive idempotent (the unit)
    auto kx3 = complete_primitive_set(fx::truncated_poly(f, 3));
    CHECK(kx3.elements.size() == 1);
    CHECK(kx3.elements[0] == fx::truncated_poly(f, 3).unit());

    auto tri = complete_primitive_set(fx::triangular(f, 2));
    CHECK(tri.elements.size() == 2);
  }
}

TEST_CASE("non-split quotients are rejected with a witness") {
  Field q = Field::rationals();
  CHECK_THROWS_AS(complete_primitive_set(fx::quadratic_extension(q)), Error);
  try {
    complete_primitive_set(fx::quadratic_extension(q));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonSplitSemisimpleQuotient);
  }
  // Q[Z/3] = Q x Q(omega): the quadratic block refuses, the rational block splits
  CHECK_THROWS_AS(complete_primitive_set(fx::group_algebra_zn(q, 3)), Error);

  // over F_5, x^2 + 1 factors: the same algebra splits
  Field f5 = Field::prime(5);
  auto s = complete_primitive_set(fx::quadratic_extension(f5));
  CHECK(s.elements.size() == 2);

  // over F_3, x^2 + 1 is irreducible: F_9 is a field, not split
  CHECK_THROWS_AS(complete_primitive_set(fx::quadratic_extension(Field::prime(3))), Error);
}

TEST_CASE("locality certificates") {
  Field q = Field::rationals();
  CHECK(is_local(fx::truncated_poly(q, 1)).local);
  CHECK(is_local(fx::truncated_poly(q, 3)).local);       // quotient K
  CHECK(!is_local(fx::product_kk(q)).local);
  CHECK(!is_local(fx::full_matrix(q, 2)).local);
  CHECK(!is_local(fx::triangular(q, 2)).local);

  auto f9 = is_local(fx::quadratic_extension(Field::prime(3)));
  CHECK(f9.local);
  CHECK(!f9.split);

  auto qi = is_local(fx::quadratic_extension(q));
  CHECK(qi.local);
  CHECK(!qi.split);
}

TEST_CASE("projective decomposition") {
  Field q = Field::rationals();

  // A[gamma] with local endomorphism ring: one summand, the module itself
  auto of = fx::one_object_field(q);
  auto k = generator_module(of.alg, 0).module;
  auto d1 = decompose_projective(k);
  CHECK(d1.summands.size() == 1);
  CHECK(d1.summands[0].corner_local.local);
  CHECK(d1.summands[0].module->total_dim() == 1);

  // two copies of the generator: two summands
  auto sum = graded_direct_sum({k, k});
  auto d2 = decompose_projective(sum.module);
  CHECK(d2.summands.size() == 2);

  // regular module of the poset-graded triangular algebra: dims 2 and 1
  auto pt = fx::poset_triangular(q);
  auto reg = regular_graded_module(pt.alg);
  REQUIRE(reg->validate().ok());
  auto d3 = decompose_projective(reg);
  REQUIRE(d3.summands.size() == 2);
  std::vector<std::size_t> dims = {d3.summands[0].module->total_dim(),
                                   d3.summands[1].module->total_dim()};
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{1, 2});
  for (const auto& s : d3.summands) {
    CHECK(s.corner_local.local);
    // pi o i = identity on the summand
    auto round = s.projection.compose_after(s.inclusion);
    CHECK(round == GradedHom::identity(s.module));
  }
  // sum of i o pi = identity on the parent
  GradedHom acc = d3.summands[0].inclusion.compose_after(d3.summands[0].projection);
  for (std::size_t i = 1; i < d3.summands.size(); ++i)
    acc = acc + d3.summands[i].inclusion.compose_after(d3.summands[i].projection);
  CHECK(acc == GradedHom::identity(reg));
}
