// Shared corpus builders for unit and acceptance tests.
#pragma once

#include <map>
#include <memory>
#include <string>

#include "gradalg/graded.hpp"

namespace gradalg::fixtures {

/// K[x]/(x^n), basis 1, x, ..., x^{n-1}.
Algebra truncated_poly(const Field& f, std::size_t n);

/// Triangular n x n matrix units u_ij with i >= j (the strict part maps
/// lower slots into higher ones); basis ordered (1,1),(2,1),(2,2),(3,1),...
Algebra triangular(const Field& f, std::size_t n);

/// K x K, componentwise.
Algebra product_kk(const Field& f);

/// Group algebra K[Z/n], basis e, g, ..., g^{n-1}.
Algebra group_algebra_zn(const Field& f, std::size_t n);

/// Full matrix algebra M_n(K) in matrix units E_ij (row-major basis order).
Algebra full_matrix(const Field& f, std::size_t n);

/// K[x]/(x^2 + 1): a division quadratic extension over Q, split over F_p
/// when -1 is a square.
Algebra quadratic_extension(const Field& f);

struct GradedFixture {
  std::string name;
  std::shared_ptr<const IndexCategory> cat;
  std::shared_ptr<const GradedAlgebra> alg;
  std::map<std::string, std::shared_ptr<const GradedModule>> modules;
};

/// Identity category, A = K at the identity arrow; module "K" = regular.
GradedFixture one_object_field(const Field& f);

/// Nat window [0, maxdeg], A_k = K a_k for k <= reldeg - 1 (full polynomial
/// when reldeg > maxdeg), products a_i a_j = a_{i+j}; module "K0" = simple
/// at degree 0.
GradedFixture nat_window_poly(const Field& f, long maxdeg, long reldeg);

/// K[Z/2] graded by Z/2; module "K" = trivial-like column.
GradedFixture group_z2_graded(const Field& f);

/// The poset-graded triangular 2x2 algebra (chain 1 < 2) built through
/// build_poset_graded; modules "S1", "S2" = the two vertex simples.
GradedFixture poset_triangular(const Field& f);

/// All fixtures above for a field, in a fixed order.
std::vector<GradedFixture> graded_corpus(const Field& f);

}  // namespace gradalg::fixtures
