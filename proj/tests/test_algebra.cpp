#include "doctest.h"

#include "gradalg/algebra.hpp"

using namespace gradalg;

namespace {

// K[x]/(x^n) with basis 1, x, ..., x^{n-1}
Algebra truncated_poly(const Field& f, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : "x^" + std::to_string(i));
  Algebra a(f, n, labels);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) a.set_product(i, j, vec_unit(f, n, i + j));
  a.set_unit(vec_unit(f, n, 0));
  return a;
}

// triangular 2x2 matrix units: u11, u21, u22 with u21 = E_21 (maps slot 1 into slot 2)
Algebra triangular2(const Field& f) {
  Algebra a(f, 3, {"u11", "u21", "u22"});
  auto u = [&](std::size_t i) { return vec_unit(f, 3, i); };
  a.set_product(0, 0, u(0));  // u11 u11 = u11
  a.set_product(1, 0, u(1));  // u21 u11 = u21
  a.set_product(2, 1, u(1));  // u22 u21 = u21
  a.set_product(2, 2, u(2));  // u22 u22 = u22
  a.set_unit(vec_add(u(0), u(2)));
  return a;
}

}  // namespace

TEST_CASE("structure constants validate and multiply") {
  Field q = Field::rationals();
  Algebra a = truncated_poly(q, 3);
  a.validate();
  Vec x = vec_unit(q, 3, 1);
  CHECK(a.multiply(x, x) == vec_unit(q, 3, 2));
  CHECK(vec_is_zero(a.multiply(a.multiply(x, x), x)));

  Algebra t = triangular2(q);
  t.validate();
  CHECK(t.is_idempotent(vec_unit(q, 3, 0)));
  CHECK(t.is_idempotent(vec_unit(q, 3, 2)));
  CHECK(!t.is_idempotent(vec_unit(q, 3, 1)));

  // planted associativity violation: x * x^2 = 1 but x^2 * x = 0
  Algebra bad = truncated_poly(q, 3);
  bad.set_product(1, 2, vec_unit(q, 3, 0));
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("center and minimal polynomials") {
  Field q = Field::rationals();
  Algebra t = triangular2(q);
  // center of the triangular algebra is the scalars
  Matrix z = t.center();
  CHECK(z.rows() == 1);
  CHECK(subspace_contains(z, t.unit()));

  Algebra a = truncated_poly(q, 3);
  CHECK(a.center().rows() == 3);  // commutative

  Poly mx = a.minimal_polynomial(vec_unit(q, 3, 1));
  CHECK(mx.degree() == 3);  // x^3
  CHECK(mx.coeff(3).is_one());
  CHECK(mx.coeff(0).is_zero());
  CHECK(mx.coeff(1).is_zero());
  CHECK(mx.coeff(2).is_zero());

  Poly mu = t.minimal_polynomial(vec_unit(q, 3, 0));
  CHECK(mu.degree() == 2);  // x^2 - x
}

TEST_CASE("ideals, nilpotency, quotients") {
  Field q = Field::rationals();
  Algebra a = truncated_poly(q, 3);
  Matrix rad = Matrix::from_rows(q, 3, {vec_unit(q, 3, 1), vec_unit(q, 3, 2)});
  CHECK(a.is_ideal(rad));
  auto ni = a.nilpotency_index(rad);
  REQUIRE(ni.has_value());
  CHECK(*ni == 3);  // x*x != 0, x*x*x = 0
  CHECK(*a.nilpotency_index(Matrix(q, 0, 3)) == 1);

  Matrix not_nil = Matrix::from_rows(q, 3, {a.unit()});
  CHECK(!a.nilpotency_index(a.ideal_closure(not_nil)).has_value());

  auto quot = a.quotient_by_ideal(rad);
  CHECK(quot.alg.dim() == 1);
  quot.alg.validate();
  CHECK(quot.alg.multiply(quot.alg.unit(), quot.alg.unit()) == quot.alg.unit());
}

TEST_CASE("corner algebra") {
  Field q = Field::rationals();
  Algebra t = triangular2(q);
  auto c1 = t.corner(vec_unit(q, 3, 0));  // u11 A u11 = K u11
  CHECK(c1.alg.dim() == 1);
  c1.alg.validate();
  auto c2 = t.corner(vec_unit(q, 3, 2));
  CHECK(c2.alg.dim() == 1);
}

TEST_CASE("regular module, submodules, quotients") {
  Field q = Field::rationals();
  auto t = std::make_shared<Algebra>(triangular2(q));
  AlgebraModule reg = AlgebraModule::regular(t);
  reg.validate();

  // left ideal A u11 = span{u11, u21}: the dim-2 indecomposable projective
  Matrix p1 = left_ideal_of(*t, vec_unit(q, 3, 0));
  CHECK(p1.rows() == 2);
  CHECK(reg.is_submodule(p1));
  auto sub = reg.submodule(p1);
  sub.mod.validate();
  CHECK(sub.mod.dim() == 2);

  auto quot = reg.quotient(p1);
  quot.mod.validate();
  CHECK(quot.mod.dim() == 1);

  Matrix p2 = left_ideal_of(*t, vec_unit(q, 3, 2));
  CHECK(p2.rows() == 1);
}

TEST_CASE("hom bases between modules") {
  Field q = Field::rationals();
  auto t = std::make_shared<Algebra>(triangular2(q));
  AlgebraModule reg = AlgebraModule::regular(t);
  auto s1 = reg.submodule(left_ideal_of(*t, vec_unit(q, 3, 0)));
  auto s2 = reg.submodule(left_ideal_of(*t, vec_unit(q, 3, 2)));

  // End(P1) = K, End(P2) = K, Hom(P2, P1) = K (u21 column), Hom(P1, P2) = 0
  CHECK(AlgebraModule::hom_basis(s1.mod, s1.mod).size() == 1);
  CHECK(AlgebraModule::hom_basis(s2.mod, s2.mod).size() == 1);
  CHECK(AlgebraModule::hom_basis(s2.mod, s1.mod).size() == 1);
  CHECK(AlgebraModule::hom_basis(s1.mod, s2.mod).size() == 0);
  CHECK(!s1.mod.are_isomorphic(s2.mod));

  auto sum = AlgebraModule::direct_sum({&s1.mod, &s2.mod});
  sum.sum.validate();
  CHECK(sum.sum.dim() == 3);
  CHECK(sum.sum.are_isomorphic(reg));
}

TEST_CASE("algebra from endomorphisms composes in apply-first order") {
  Field q = Field::rationals();
  // endomorphisms of K^2: full matrix algebra
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Matrix m(q, 2, 2);
      m.at(i, j) = Scalar::one(q);
      basis.push_back(m);
    }
  Algebra m2 = algebra_from_endomorphisms(q, basis);
  m2.validate();
  CHECK(m2.dim() == 4);
  // E11 . E12 means "apply E11 then E12" = E12 * E11 = E11? indices: E12 E11... computed below
  // basis order: E11=0, E12=1, E21=2, E22=3 (row i, col j)
  // x . y = mat(y)*mat(x): E11 . E21 = E21*E11 = E21 -> index 2
  CHECK(m2.product(0, 2) == vec_unit(q, 4, 2));
  // E21 . E11 = E11*E21 = 0
  CHECK(vec_is_zero(m2.product(2, 0)));
}
