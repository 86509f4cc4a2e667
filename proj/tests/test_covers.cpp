#include "doctest.h"

#include <set>

#include "gradalg/covers.hpp"
#include "support/fixtures.hpp"

using namespace gradalg;
namespace fx = gradalg::fixtures;

namespace {

AlgebraAnalysis flat_analysis(const Algebra& a) {
  return analyze_algebra(std::make_shared<Algebra>(a));
}

}  // namespace

TEST_CASE("tops") {
  Field q = Field::rationals();

  // regular K[x]/(x^3): one simple with multiplicity 1
  auto an = flat_analysis(fx::truncated_poly(q, 3));
  AlgebraModule reg = AlgebraModule::regular(an.alg);
  auto top = top_of(an, reg);
  REQUIRE(top.multiplicities.size() == 1);
  CHECK(top.multiplicities[0] == 1);
  CHECK(top.quotient.mod.dim() == 1);

  // simple goes to itself
  AlgebraModule s = simple_of_class(an, 0);
  auto top_s = top_of(an, s);
  CHECK(top_s.multiplicities[0] == 1);

  // two copies double the multiplicity
  auto two = AlgebraModule::direct_sum({&reg, &reg});
  CHECK(top_of(an, two.sum).multiplicities[0] == 2);

  // triangular algebra: two simple classes
  auto tri = flat_analysis(fx::triangular(q, 2));
  CHECK(tri.class_rep.size() == 2);
  auto top_reg = top_of(tri, AlgebraModule::regular(tri.alg));
  CHECK(top_reg.multiplicities == std::vector<std::size_t>{1, 1});
}

TEST_CASE("projective covers over flat algebras") {
  Field q = Field::rationals();
  auto an = flat_analysis(fx::truncated_poly(q, 3));

  // projective indecomposable covers itself with zero kernel
  AlgebraModule reg = AlgebraModule::regular(an.alg);
  auto c1 = projective_cover_e(an, reg);
  CHECK(c1.cover.dim() == 3);
  CHECK(c1.kernel.rows() == 0);
  CHECK(c1.kernel_in_radical);

  // the simple: cover = regular module, kernel = rad, dim 2
  AlgebraModule s = simple_of_class(an, 0);
  auto c2 = projective_cover_e(an, s);
  CHECK(c2.cover.dim() == 3);
  CHECK(c2.kernel.rows() == 2);
  CHECK(c2.kernel_in_radical);

  // triangular: S1 is covered by the dim-2 projective; kernel is the other simple
  auto tri = flat_analysis(fx::triangular(q, 2));
  for (std::size_t cls = 0; cls < 2; ++cls) {
    AlgebraModule simple = simple_of_class(tri, cls);
    auto cov = projective_cover_e(tri, simple);
    auto proj = projective_of_class(tri, cls);
    CHECK(cov.cover.dim() == proj.mod.dim());
    CHECK(cov.kernel.rows() == proj.mod.dim() - 1);
  }
}

TEST_CASE("smallness: radical criterion and verbatim enumeration") {
  Field f2 = Field::prime(2);
  auto an = flat_analysis(fx::truncated_poly(f2, 3));
  AlgebraModule reg = AlgebraModule::regular(an.alg);

  // x = 0 is small
  Matrix zero(f2, 0, 3);
  auto r0 = is_small_subobject(reg, zero, SmallnessMethod::Both);
  CHECK(r0.small);

  // x = p is not small (p nonzero)
  auto rp = is_small_subobject(reg, Matrix::identity(f2, 3), SmallnessMethod::Both);
  CHECK(!rp.small);

  // span{x, x^2} is small by both methods
  Matrix radx = Matrix::from_rows(f2, 3, {vec_unit(f2, 3, 1), vec_unit(f2, 3, 2)});
  auto rr = is_small_subobject(reg, radx, SmallnessMethod::Both);
  CHECK(rr.small);
  CHECK(rr.method == "radical-criterion+enumeration");

  // span{1} is not small: it generates everything
  Matrix one = Matrix::from_rows(f2, 3, {vec_unit(f2, 3, 0)});
  CHECK(!is_small_subobject(reg, one, SmallnessMethod::Both).small);

  // enumeration refuses over Q
  Field q = Field::rationals();
  auto anq = flat_analysis(fx::truncated_poly(q, 3));
  AlgebraModule regq = AlgebraModule::regular(anq.alg);
  CHECK_THROWS_AS(
      is_small_subobject(regq, Matrix(q, 0, 3), SmallnessMethod::Enumeration), Error);

  // agreement on every subspace of the F_2 regular module (dim 3)
  for (const Matrix& s : {zero, radx, one}) {
    auto a = is_small_subobject(reg, s, SmallnessMethod::RadicalCriterion);
    auto b = is_small_subobject(reg, s, SmallnessMethod::Enumeration);
    CHECK(a.small == b.small);
  }
}

TEST_CASE("minimal resolution golden pattern for K over graded K[x]/(x^3)") {
  Field q = Field::rationals();
  auto g = fx::nat_window_poly(q, 9, 3);  // window [0,9], relation x^3
  TotalHomAlgebra e = TotalHomAlgebra::over_all_arrows(g.alg);
  AlgebraAnalysis an = analyze_total(e);

  auto t = e.to_total(g.modules.at("K0"));
  ResolutionComplex res = minimal_resolution(an, t.mod, 6);

  REQUIRE(res.stages.size() == 7);  // P_0 .. P_6
  CHECK(res.terminated);
  auto betti = res.betti();
  std::vector<std::string> expected_shifts = {"0", "1", "3", "4", "6", "7", "9"};
  for (std::size_t k = 0; k < 7; ++k) {
    CAPTURE(k);
    REQUIRE(betti[k].size() == 1);
    CHECK(betti[k].begin()->first == expected_shifts[k] + ":0");
    CHECK(betti[k].begin()->second == 1);
  }
  auto cert = verify_resolution(t.mod, res);
  CHECK(cert.pass);
}

TEST_CASE("verify_resolution flags planted defects") {
  Field q = Field::rationals();
  auto an = flat_analysis(fx::truncated_poly(q, 3));
  AlgebraModule s = simple_of_class(an, 0);
  ResolutionComplex good = minimal_resolution(an, s, 2);
  CHECK(verify_resolution(s, good).pass);

  // planted inexactness: zero differential where the kernel is nonzero
  ResolutionComplex bad = good;
  bad.terminated = false;
  bad.differentials.erase(bad.differentials.begin() + 1, bad.differentials.end());
  bad.stages.erase(bad.stages.begin() + 2, bad.stages.end());
  bad.differentials[0] = Matrix(q, bad.stages[0].cover.dim(), bad.stages[1].cover.dim());
  auto cert = verify_resolution(s, bad);
  CHECK(!cert.pass);

  // planted non-minimal stage: cover the kernel by P + P with a redundant copy
  ResolutionComplex redundant;
  redundant.stages.push_back(good.stages[0]);  // P_0 = regular, kernel = rad (dim 2)
  AlgebraModule reg = AlgebraModule::regular(an.alg);
  auto two = AlgebraModule::direct_sum({&reg, &reg});
  // d_1: A + A -> A, (u, v) -> u x + v x^2; image = rad, exact, but the
  // second copy is redundant: the kernel of d_1 contains (x, -1), not small
  Matrix d1(q, 3, 6);
  for (std::size_t j = 0; j < 3; ++j) {
    Vec ux = an.alg->multiply(vec_unit(q, 3, j), vec_unit(q, 3, 1));
    Vec vx2 = an.alg->multiply(vec_unit(q, 3, j), vec_unit(q, 3, 2));
    for (std::size_t i = 0; i < 3; ++i) {
      d1.at(i, j) = ux[i];
      d1.at(i, 3 + j) = vx2[i];
    }
  }
  CoverResultE fake{two.sum, {0, 0}, {"e0", "e0"}, {0, 3}, d1, kernel_basis(d1), false};
  redundant.stages.push_back(fake);
  redundant.differentials.push_back(d1);
  auto cert2 = verify_resolution(s, redundant);
  CHECK(!cert2.pass);
  CHECK(cert2.first_failure.find("not small") != std::string::npos);
}

TEST_CASE("betti tables are independent of the idempotent seed") {
  Field q = Field::rationals();
  auto g = fx::nat_window_poly(q, 3, 3);
  TotalHomAlgebra e = TotalHomAlgebra::over_all_arrows(g.alg);
  AlgebraAnalysis a1 = analyze_total(e, kDefaultSeed);
  AlgebraAnalysis a2 = analyze_total(e, kDefaultSeed + 1);
  auto t = e.to_total(g.modules.at("K0"));
  auto r1 = minimal_resolution(a1, t.mod, 3);
  auto r2 = minimal_resolution(a2, t.mod, 3);
  CHECK(r1.betti() == r2.betti());
}

TEST_CASE("graded projective covers") {
  Field q = Field::rationals();
  auto pt = fx::poset_triangular(q);
  TotalHomAlgebra e = TotalHomAlgebra::over_all_arrows(pt.alg);
  AlgebraAnalysis an = analyze_total(e);

  auto cover = projective_cover_graded(e, an, pt.modules.at("S1"));
  CHECK(cover.cover->total_dim() == 2);
  CHECK(cover.epi.is_surjective());
  CHECK(cover.epi.validate().ok());
  CHECK(cover.kernel_in_radical);
  // kernel is concentrated at the arrow 2|1, dimension 1
  int a21 = pt.cat->arrow_index("2|1");
  REQUIRE(cover.kernel.count(a21));
  CHECK(cover.kernel.at(a21).rows() == 1);

  // S2 is projective already: identity cover
  auto cover2 = projective_cover_graded(e, an, pt.modules.at("S2"));
  CHECK(cover2.cover->total_dim() == 1);
  CHECK(cover2.kernel.empty());
}

TEST_CASE("independently computed covers share their multiplicity vectors") {
  Field q = Field::rationals();
  auto pt = fx::poset_triangular(q);
  TotalHomAlgebra e = TotalHomAlgebra::over_all_arrows(pt.alg);
  AlgebraAnalysis a1 = analyze_total(e, kDefaultSeed);
  AlgebraAnalysis a2 = analyze_total(e, kDefaultSeed + 7);
  auto reg = regular_graded_module(pt.alg);
  auto t1 = e.to_total(reg);
  CoverResultE c1 = projective_cover_e(a1, t1.mod);
  CoverResultE c2 = projective_cover_e(a2, t1.mod);
  std::multiset<std::string> m1(c1.summand_labels.begin(), c1.summand_labels.end());
  std::multiset<std::string> m2(c2.summand_labels.begin(), c2.summand_labels.end());
  CHECK(m1 == m2);
}

TEST_CASE("hom radical of projectives equals Hom(P, rad Q), and differentials live there") {
  // flat side: J(P, Q) computed through End(P + Q) matches {X : im X <= rad Q}
  Field q = Field::rationals();
  auto an = flat_analysis(fx::triangular(q, 2));
  ModuleSub p1 = projective_of_class(an, 0);
  ModuleSub p2 = projective_of_class(an, 1);
  for (const auto* pa : {&p1.mod, &p2.mod})
    for (const auto* pb : {&p1.mod, &p2.mod}) {
      auto sum = AlgebraModule::direct_sum({pa, pb});
      auto endos = AlgebraModule::hom_basis(sum.sum, sum.sum);
      Algebra end = algebra_from_endomorphisms(q, endos);
      Matrix jac = algebra_radical(end).basis;
      // corner pi J i as matrices pa -> pb
      std::vector<Vec> corner_rows;
      for (std::size_t r = 0; r < jac.rows(); ++r) {
        Matrix h(q, sum.sum.dim(), sum.sum.dim());
        for (std::size_t k = 0; k < endos.size(); ++k)
          if (!jac.at(r, k).is_zero()) h = h + endos[k].scaled(jac.at(r, k));
        Matrix block = sum.project[1] * h * sum.inject[0];
        Vec flat;
        for (std::size_t i = 0; i < block.rows(); ++i)
          for (std::size_t j = 0; j < block.cols(); ++j) flat.push_back(block.at(i, j));
        corner_rows.push_back(flat);
      }
      const std::size_t len = pa->dim() * pb->dim();
      Matrix corner = corner_rows.empty()
                          ? Matrix(q, 0, len)
                          : row_space_basis(Matrix::from_rows(q, len, corner_rows));
      // {X in Hom(pa, pb) : im X <= rad pb}
      Matrix rad_b = module_radical(*pb);
      std::vector<Vec> into_rad;
      for (const Matrix& x : AlgebraModule::hom_basis(*pa, *pb)) {
        bool inside = true;
        for (std::size_t c = 0; c < x.cols(); ++c)
          inside = inside && subspace_contains(rad_b, x.transpose().row(c));
        if (inside) {
          Vec flat;
          for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j) flat.push_back(x.at(i, j));
          into_rad.push_back(flat);
        }
      }
      Matrix expected = into_rad.empty() ? Matrix(q, 0, len)
                                         : row_space_basis(Matrix::from_rows(q, len, into_rad));
      CHECK(subspace_eq(corner, expected));
    }

  // corpus resolutions: every differential maps into the radical of its target
  AlgebraModule s = simple_of_class(an, 0);
  ResolutionComplex res = minimal_resolution(an, s, 2);
  for (std::size_t k = 0; k < res.differentials.size(); ++k) {
    Matrix rad = module_radical(res.stages[k].cover);
    Matrix image = row_space_basis(res.differentials[k].transpose());
    CHECK(subspace_leq(image, rad));
  }
}
