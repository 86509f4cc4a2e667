/**
 * @file gradalg/idempotents.hpp
 * @copyright Apache License 2.0
 *
 * Complete orthogonal primitive idempotent sets, exact idempotent lifting
 * modulo the radical, locality certificates, and the decomposition of
 * projective graded modules into completely indecomposable summands.
 *
 * The semisimple quotient is split over the base field by factoring minimal
 * polynomials of deterministically seeded candidate elements (center first,
 * then zero-divisor searches inside central blocks).  Non-split quotients
 * are rejected with NonSplitSemisimpleQuotient; the error message carries
 * the witness data.
 */
#pragma once

#include "gradalg/graded.hpp"
#include "gradalg/radical.hpp"
#include "gradalg/util.hpp"

namespace gradalg {

/// Exact lift of an idempotent of a/J along the nilpotent radical: returns
/// e with e^2 = e and e = preimage mod J, via e <- 3e^2 - 2e^3.
/// InputNotIdempotentModJ when preimage^2 - preimage is not in J.
Vec lift_idempotent(const Algebra& a, const Matrix& jac, const Vec& preimage);

struct IdempotentSet {
  std::vector<Vec> elements;  // pairwise orthogonal, summing to 1
  bool orthogonal = false;
  bool complete = false;
  std::vector<bool> primitive;  // corner is local, per element
  std::uint64_t seed = 0;       // recorded for reproducibility
};

/// Complete set of orthogonal primitive idempotents of a unital algebra.
/// The count equals the sum of the matrix sizes of the Wedderburn components
/// of a/J.  NonSplitSemisimpleQuotient when the quotient does not split.
IdempotentSet complete_primitive_set(const Algebra& a, std::uint64_t seed = kDefaultSeed);

/// Same, but inside the corner u a u (u idempotent); the returned elements
/// live in the coordinates of a and sum to u.
std::vector<Vec> primitive_set_in_corner(const Algebra& a, const Vec& u,
                                         std::uint64_t seed = kDefaultSeed);

struct LocalCertificate {
  bool local = false;
  std::size_t quotient_dim = 0;
  bool split = false;       // quotient is the base field
  std::string note;         // how the verdict was reached
};

/// True iff a/J(a) is a division ring.
LocalCertificate is_local(const Algebra& a, std::uint64_t seed = kDefaultSeed);

struct ProjectiveSummand {
  GradedHom idempotent;                        // e : p -> p
  std::shared_ptr<const GradedModule> module;  // the summand P_j
  GradedHom projection;                        // p -> P_j
  GradedHom inclusion;                         // P_j -> p
  LocalCertificate corner_local;               // Prop. 3.3 check
};

struct ProjectiveDecomposition {
  std::shared_ptr<const GradedModule> parent;
  std::vector<ProjectiveSummand> summands;
  std::uint64_t seed = 0;
};

/// Decomposes a finitely supported projective module along a complete
/// primitive idempotent set of its endomorphism algebra.
ProjectiveDecomposition decompose_projective(std::shared_ptr<const GradedModule> p,
                                             std::uint64_t seed = kDefaultSeed);

}  // namespace gradalg
