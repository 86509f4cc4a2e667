/**
 * @file gradalg/graded.hpp
 * @copyright Apache License 2.0
 *
 * Category-graded algebras and modules over them: per-arrow components with
 * structure constants, degree-wise homomorphisms, the free functor and its
 * counit, divisor spaces A(gamma:beta), and the poset-graded algebra built
 * from an orthogonal idempotent decomposition.
 *
 * Composition convention throughout: alpha.beta means "beta first", so
 * src(alpha.beta) = src(beta).  Products whose target arrow is absorbed by
 * the window are identically zero.
 */
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradalg/algebra.hpp"
#include "gradalg/category.hpp"
#include "gradalg/matrix.hpp"

namespace gradalg {

struct GradedVectorSpace {
  // arrow index -> basis labels; absent means dimension zero
  std::map<int, std::vector<std::string>> components;

  std::size_t dim(int arrow) const {
    auto it = components.find(arrow);
    return it == components.end() ? 0 : it->second.size();
  }
  std::vector<int> support() const {
    std::vector<int> s;
    for (const auto& [a, labels] : components)
      if (!labels.empty()) s.push_back(a);
    return s;
  }
  std::size_t total_dim() const {
    std::size_t t = 0;
    for (const auto& [a, labels] : components) t += labels.size();
    return t;
  }
};

struct GradedViolation {
  std::string code;
  std::string message;
};

struct GradedReport {
  std::vector<GradedViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Structure-constant table for one composable arrow pair: entry [i][j] is
/// the coordinate vector of (basis_i . basis_j) in the target component.
using MultTable = std::vector<std::vector<Vec>>;

class GradedAlgebra {
 public:
  GradedAlgebra(std::shared_ptr<const IndexCategory> cat, const Field& field)
      : cat_(std::move(cat)), field_(field) {}

  const IndexCategory& category() const { return *cat_; }
  std::shared_ptr<const IndexCategory> category_ptr() const { return cat_; }
  const Field& field() const { return field_; }
  const GradedVectorSpace& space() const { return comps_; }
  std::size_t dim(int arrow) const { return comps_.dim(arrow); }
  std::vector<int> support() const { return comps_.support(); }

  void set_component(int arrow, std::vector<std::string> labels);
  void set_product(int alpha, int beta, std::size_t i, std::size_t j, const Vec& coords);
  void set_local_unit(const std::string& object, const Vec& coords);

  /// Coordinates of basis_i(alpha) . basis_j(beta) in A_{alpha.beta};
  /// zero vector of the target dimension, or nullopt when absorbed.
  std::optional<std::pair<int, Vec>> basis_product(int alpha, std::size_t i, int beta,
                                                   std::size_t j) const;
  /// x in A_alpha times y in A_beta.
  std::optional<std::pair<int, Vec>> component_product(int alpha, const Vec& x, int beta,
                                                       const Vec& y) const;

  bool has_local_unit(const std::string& object) const { return units_.count(object) > 0; }
  const Vec& local_unit(const std::string& object) const;

  GradedReport validate() const;

 private:
  std::shared_ptr<const IndexCategory> cat_;
  Field field_;
  GradedVectorSpace comps_;
  std::map<std::pair<int, int>, MultTable> mult_;
  std::map<std::string, Vec> units_;
};

class GradedModule {
 public:
  GradedModule(std::shared_ptr<const GradedAlgebra> alg) : alg_(std::move(alg)) {}

  const GradedAlgebra& algebra() const { return *alg_; }
  std::shared_ptr<const GradedAlgebra> algebra_ptr() const { return alg_; }
  const IndexCategory& category() const { return alg_->category(); }
  const Field& field() const { return alg_->field(); }
  const GradedVectorSpace& space() const { return comps_; }
  std::size_t dim(int arrow) const { return comps_.dim(arrow); }
  std::vector<int> support() const { return comps_.support(); }
  std::size_t total_dim() const { return comps_.total_dim(); }

  void set_component(int arrow, std::vector<std::string> labels);
  void set_action(int alpha, int beta, std::size_t i, std::size_t j, const Vec& coords);

  std::optional<std::pair<int, Vec>> basis_action(int alpha, std::size_t i, int beta,
                                                  std::size_t j) const;
  std::optional<std::pair<int, Vec>> act(int alpha, const Vec& a, int beta, const Vec& m) const;

  GradedReport validate() const;

 private:
  std::shared_ptr<const GradedAlgebra> alg_;
  GradedVectorSpace comps_;
  std::map<std::pair<int, int>, MultTable> action_;
};

class GradedHom {
 public:
  GradedHom(std::shared_ptr<const GradedModule> src, std::shared_ptr<const GradedModule> tgt);

  static GradedHom identity(std::shared_ptr<const GradedModule> m);

  const GradedModule& source() const { return *src_; }
  const GradedModule& target() const { return *tgt_; }
  std::shared_ptr<const GradedModule> source_ptr() const { return src_; }
  std::shared_ptr<const GradedModule> target_ptr() const { return tgt_; }

  /// Component at an arrow; identically-zero components may be absent.
  void set_component(int arrow, const Matrix& m);
  Matrix component(int arrow) const;  // zero matrix when absent
  const std::map<int, Matrix>& explicit_components() const { return comps_; }

  GradedHom compose_after(const GradedHom& first) const;  // this o first
  GradedHom operator+(const GradedHom& o) const;
  GradedHom scaled(const Scalar& c) const;
  bool is_zero() const;
  bool operator==(const GradedHom& o) const;

  /// Degree-wise rank equals target dimension everywhere.
  bool is_surjective() const;
  /// Empty report iff equivariant: f_{alpha.beta}(a m) = a f_beta(m).
  GradedReport validate() const;

  /// Flattened coordinates over the source support (for subspace work on
  /// hom spaces); layout is fixed by the source/target components.
  Vec flatten() const;
  static GradedHom unflatten(std::shared_ptr<const GradedModule> src,
                             std::shared_ptr<const GradedModule> tgt, const Vec& coords);

 private:
  std::shared_ptr<const GradedModule> src_, tgt_;
  std::map<int, Matrix> comps_;
};

/// ---- free functor -------------------------------------------------------

struct FreeBasisElem {
  int alg_arrow;
  std::size_t alg_index;
  int v_arrow;
  std::size_t v_index;
};

struct FreeModule {
  std::shared_ptr<const GradedModule> module;
  std::map<int, std::vector<FreeBasisElem>> basis;  // per degree, canonical order
};

/// F_A(V)_gamma = sum over factorizations gamma = alpha.beta of
/// A_alpha (x) V_beta, with the action through mu on the left factor.
FreeModule free_module(std::shared_ptr<const GradedAlgebra> a, const GradedVectorSpace& v);

/// A[gamma] = F_A(R[gamma]).
FreeModule generator_module(std::shared_ptr<const GradedAlgebra> a, int gamma);

/// A as a graded module over itself (action = multiplication).
std::shared_ptr<const GradedModule> regular_graded_module(std::shared_ptr<const GradedAlgebra> a);

/// Counit F_A(U(m)) -> m; the (alpha, beta) block of the degree-gamma
/// component is the action r_{alpha,beta}.  Surjective in every degree.
GradedHom counit(const FreeModule& free, std::shared_ptr<const GradedModule> m);

/// Builds F_A(U(m)) and the counit onto m in one step.
struct CounitData {
  FreeModule free;
  GradedHom epi;
};
CounitData counit_of(std::shared_ptr<const GradedModule> m);

/// ---- divisor spaces ------------------------------------------------------

struct DivisorSummand {
  int alpha;
  std::size_t dim;
  std::size_t offset;  // position of this summand in the concatenated basis
};

struct DivisorSpace {
  int gamma;
  int beta;
  std::vector<DivisorSummand> summands;
  std::size_t dim;
  /// The ring structure, present exactly when beta == gamma (unit e_t).
  std::optional<Algebra> ring;
};

DivisorSpace divisor_space(const GradedAlgebra& a, int gamma, int beta);

/// ---- hom spaces ----------------------------------------------------------

/// Basis of the space of equivariant degree-preserving maps m -> n,
/// computed by solving the linear system {f_{alpha.beta} r = r f_beta}.
std::vector<GradedHom> hom_space(std::shared_ptr<const GradedModule> m,
                                 std::shared_ptr<const GradedModule> n);

/// End(D) as a flat algebra over the hom_space basis, with the product
/// "apply left factor first" (x . y = y o x).
struct EndAlgebra {
  std::shared_ptr<Algebra> alg;
  std::vector<GradedHom> basis;  // alg coordinates index this basis
  Matrix flat_basis;             // rows: flattened homs
};
EndAlgebra end_algebra(std::shared_ptr<const GradedModule> d);

/// ---- submodules, quotients, direct sums ----------------------------------

struct GradedSub {
  std::shared_ptr<const GradedModule> module;
  GradedHom inclusion;
};
/// Per-arrow row bases (must be action-closed; StructureError otherwise).
GradedSub graded_submodule(std::shared_ptr<const GradedModule> m,
                           const std::map<int, Matrix>& bases);

struct GradedQuot {
  std::shared_ptr<const GradedModule> module;
  GradedHom projection;
};
GradedQuot graded_quotient(std::shared_ptr<const GradedModule> m,
                           const std::map<int, Matrix>& bases);

struct GradedSum {
  std::shared_ptr<const GradedModule> module;
  std::vector<GradedHom> inject;
  std::vector<GradedHom> project;
};
GradedSum graded_direct_sum(const std::vector<std::shared_ptr<const GradedModule>>& parts);

/// ---- poset-graded construction -------------------------------------------

struct PosetGradedResult {
  std::shared_ptr<const IndexCategory> category;
  std::shared_ptr<const GradedAlgebra> algebra;
  /// Arrow index -> corner basis rows (e_mu A e_lambda) in parent coordinates;
  /// the canonical bijection between graded components and corners of `a`.
  std::map<int, Matrix> corner_bases;
};

/// Grades a unital algebra by a poset along a complete orthogonal idempotent
/// family.  Throws IdempotentError when the family is not orthogonal-complete
/// and TriangularityViolation when e_mu A e_lambda != 0 with mu not >= lambda.
PosetGradedResult build_poset_graded(const Algebra& a,
                                     const std::map<std::string, Vec>& idempotents,
                                     const std::vector<std::string>& elements,
                                     const std::vector<std::pair<std::string, std::string>>& leq);

}  // namespace gradalg
