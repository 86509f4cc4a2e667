#include "doctest.h"

#include "gradalg/perfectness.hpp"
#include "support/fixtures.hpp"

using namespace gradalg;
namespace fx = gradalg::fixtures;

TEST_CASE("semiperfectness certificates on the corpus") {
  for (const Field& f : {Field::rationals(), Field::prime(2)}) {
    for (const auto& g : fx::graded_corpus(f)) {
      CAPTURE(g.name);
      auto verdict = check_semiperfect(g.alg);
      CHECK(verdict.verdict == Verdict::Positive);
      CHECK(verdict.theorem == TheoremUsed::Theorem45);
      for (const auto& cert : verdict.per_arrow) {
        CHECK(cert.left_perfect);
        CHECK(cert.split_semisimple_quotient);
      }
    }
  }
}

TEST_CASE("divisor ring certificates carry the expected dimensions") {
  Field q = Field::rationals();
  auto g = fx::nat_window_poly(q, 3, 99);
  auto verdict = check_semiperfect(g.alg);
  // A(n:n) = A_0 = K for every window arrow
  for (const auto& cert : verdict.per_arrow) {
    CHECK(cert.divisor_dim == 1);
    CHECK(cert.radical_dim == 0);
    CHECK(cert.nilpotency_index == 1);
    CHECK(cert.idempotent_count == 1);
  }

  // poset-graded: the divisor ring at mu lambda is e_mu A e_mu
  auto pt = fx::poset_triangular(q);
  auto v2 = check_semiperfect(pt.alg);
  CHECK(v2.verdict == Verdict::Positive);
  for (const auto& cert : v2.per_arrow) CHECK(cert.divisor_dim == 1);
}

TEST_CASE("perfectness by category kind") {
  Field q = Field::rationals();

  auto of = fx::one_object_field(q);
  auto v0 = check_perfect(of.alg);
  CHECK(v0.verdict == Verdict::Positive);
  CHECK(v0.theorem == TheoremUsed::Main0);

  auto z2 = fx::group_z2_graded(q);
  auto v1 = check_perfect(z2.alg);
  CHECK(v1.verdict == Verdict::Positive);
  CHECK(v1.theorem == TheoremUsed::Prop51);
  CHECK(v1.sequence.verdict == SequenceVerdict::Holds);

  auto nat = fx::nat_window_poly(q, 3, 99);
  auto v2 = check_perfect(nat.alg);
  CHECK(v2.verdict == Verdict::Positive);
  CHECK(v2.theorem == TheoremUsed::Prop52);

  auto pt = fx::poset_triangular(q);
  auto v3 = check_perfect(pt.alg);
  CHECK(v3.verdict == Verdict::Positive);
  CHECK(v3.theorem == TheoremUsed::Poset52);

  // Int window: honesty about the truncation
  auto cat = std::make_shared<IndexCategory>(
      IndexCategory::monoid_window(1, LatticeKind::Int, {{-1}, {0}, {1}}));
  auto alg = std::make_shared<GradedAlgebra>(cat, q);
  int zero = cat->arrow_index("0");
  alg->set_component(zero, {"a0"});
  alg->set_product(zero, zero, 0, 0, vec_unit(q, 1, 0));
  alg->set_local_unit("*", vec_unit(q, 1, 0));
  REQUIRE(alg->validate().ok());
  auto v4 = check_perfect(alg);
  CHECK(v4.verdict == Verdict::HypothesesNotVerifiable);
  CHECK(v4.theorem == TheoremUsed::None);

  // perfect implies semiperfect across the corpus
  for (const auto& g : fx::graded_corpus(q)) {
    if (check_perfect(g.alg).verdict == Verdict::Positive)
      CHECK(check_semiperfect(g.alg).verdict == Verdict::Positive);
  }
}

TEST_CASE("non-split divisor ring yields hypotheses-not-verifiable") {
  Field q = Field::rationals();
  // identity category with A = Q[x]/(x^2+1): the divisor ring is a field
  // extension, so the split certificate fails
  auto cat = std::make_shared<IndexCategory>(
      IndexCategory::explicit_finite({"*"}, {Arrow{"1", "*", "*"}}, {{"*", "1"}}, {}));
  auto alg = std::make_shared<GradedAlgebra>(cat, q);
  alg->set_component(0, {"1", "i"});
  Algebra flat = fx::quadratic_extension(q);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) alg->set_product(0, 0, i, j, flat.product(i, j));
  alg->set_local_unit("*", flat.unit());
  REQUIRE(alg->validate().ok());

  auto verdict = check_perfect(alg);
  CHECK(verdict.verdict == Verdict::HypothesesNotVerifiable);
  REQUIRE(verdict.per_arrow.size() == 1);
  CHECK(!verdict.per_arrow[0].left_perfect);
  CHECK(verdict.per_arrow[0].note.find("NonSplit") != std::string::npos);
}

TEST_CASE("t-nilpotency witnesses") {
  Field q = Field::rationals();

  // semisimple case: index 1, empty chain
  auto of = fx::one_object_field(q);
  TotalHomAlgebra e0 = TotalHomAlgebra::over_all_arrows(of.alg);
  auto w0 = t_nilpotency_witness(e0);
  CHECK(w0.index == 1);
  CHECK(w0.chain.empty());

  // Nat window [0,2] polynomial algebra: index 3, chain of length 2
  auto g = fx::nat_window_poly(q, 2, 99);
  TotalHomAlgebra e = TotalHomAlgebra::over_all_arrows(g.alg);
  auto w = t_nilpotency_witness(e);
  CHECK(w.index == 3);
  REQUIRE(w.chain.size() == 2);
  Vec prod = e.algebra().multiply(w.chain[0], w.chain[1]);
  CHECK(!vec_is_zero(prod));

  // triangular poset example: index 2
  auto pt = fx::poset_triangular(q);
  TotalHomAlgebra ept = TotalHomAlgebra::over_all_arrows(pt.alg);
  CHECK(t_nilpotency_witness(ept).index == 2);

  // monotone under adding generators
  std::vector<int> small_gens = {g.cat->arrow_index("0"), g.cat->arrow_index("1")};
  TotalHomAlgebra esmall(g.alg, small_gens);
  CHECK(t_nilpotency_witness(esmall).index <= w.index);
}

TEST_CASE("endomorphism rings of generators match divisor rings") {
  Field q = Field::rationals();
  for (const auto& g : fx::graded_corpus(q)) {
    CAPTURE(g.name);
    for (int gamma : g.alg->support()) {
      auto agamma = generator_module(g.alg, gamma);
      if (agamma.module->total_dim() == 0) continue;
      EndAlgebra end = end_algebra(agamma.module);
      DivisorSpace d = divisor_space(*g.alg, gamma, gamma);
      CHECK(end.alg->dim() == d.dim);
    }
  }

  // the identification Hom(A[g], A[g]) ~ A(g:g) sending f to f(e (x) 1) is
  // multiplicative for the apply-first product, i.e. anti-multiplicative for
  // composition order
  auto g = fx::nat_window_poly(q, 2, 99);
  int gam = g.cat->arrow_index("0");
  auto agam = generator_module(g.alg, gam);
  EndAlgebra end = end_algebra(agam.module);
  DivisorSpace d = divisor_space(*g.alg, gam, gam);
  REQUIRE(d.ring.has_value());
  // read off the divisor coordinates of a hom: its component at gamma applied
  // to the canonical generator (the free basis element (identity arrow, gamma))
  const auto& basis_elems = agam.basis.at(gam);
  std::size_t gen_pos = 0;
  for (std::size_t i = 0; i < basis_elems.size(); ++i)
    if (g.cat->is_identity(basis_elems[i].alg_arrow)) gen_pos = i;
  auto divisor_coords = [&](const GradedHom& h) {
    // image of the generator in A[g]_g = (+) A_alpha, which is the divisor basis
    return h.component(gam).apply(vec_unit(q, agam.module->dim(gam), gen_pos));
  };
  for (std::size_t i = 0; i < end.basis.size(); ++i)
    for (std::size_t j = 0; j < end.basis.size(); ++j) {
      GradedHom composed = end.basis[j].compose_after(end.basis[i]);  // i first
      Vec lhs = divisor_coords(composed);
      Vec rhs = d.ring->multiply(divisor_coords(end.basis[i]), divisor_coords(end.basis[j]));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("cross validation constructs verified covers") {
  for (const Field& f : {Field::rationals(), Field::prime(2)}) {
    for (const auto& g : fx::graded_corpus(f)) {
      CAPTURE(g.name);
      if (check_perfect(g.alg).verdict != Verdict::Positive) continue;
      TotalHomAlgebra e = TotalHomAlgebra::over_all_arrows(g.alg);
      AlgebraAnalysis an = analyze_total(e);
      auto samples = default_sample_modules(e, an);
      auto report = cross_validate_perfectness(e, an, samples);
      for (const auto& item : report.items) {
        CAPTURE(item.name);
        CHECK(item.cover_ok);
      }
      CHECK(report.all_ok);
    }
  }
}
