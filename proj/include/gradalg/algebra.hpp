/**
 * @file gradalg/algebra.hpp
 * @copyright Apache License 2.0
 *
 * Finite-dimensional associative unital algebras given by structure
 * constants, and left modules over them given by action matrices.  All the
 * radical / idempotent / cover machinery reduces to these two types.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradalg/matrix.hpp"
#include "gradalg/poly.hpp"

namespace gradalg {

class Algebra;
class AlgebraModule;

struct AlgebraQuotient;
struct AlgebraCorner;
struct ModuleSub;
struct ModuleQuot;
struct ModuleSummands;

class Algebra {
 public:
  Algebra(const Field& f, std::size_t dim, std::vector<std::string> labels = {});

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  void set_product(std::size_t i, std::size_t j, const Vec& coords);
  const Vec& product(std::size_t i, std::size_t j) const { return mult_[i][j]; }
  void set_unit(const Vec& coords);
  const Vec& unit() const { return unit_; }

  Vec multiply(const Vec& x, const Vec& y) const;
  /// Matrix of left multiplication by x (columns: images of basis vectors).
  Matrix left_mult(const Vec& x) const;
  Matrix right_mult(const Vec& x) const;
  bool is_idempotent(const Vec& x) const;

  /// Throws StructureError on an associativity defect, NotUnital when the
  /// declared unit does not act as identity.
  void validate() const;

  /// Basis (rows) of the center {z : zb = bz for all basis b}.
  Matrix center() const;

  /// Monic minimal polynomial of x in the algebra.
  Poly minimal_polynomial(const Vec& x) const;

  /// span{ u v : u row of U, v row of V }.
  Matrix product_space(const Matrix& u, const Matrix& v) const;
  /// Two-sided ideal generated by the rows of seed.
  Matrix ideal_closure(const Matrix& seed) const;
  bool is_ideal(const Matrix& basis) const;
  /// Smallest m with I^m = 0 (m = 1 for the zero ideal), or nullopt.
  std::optional<std::size_t> nilpotency_index(const Matrix& ideal_basis) const;

  /// Quotient by a two-sided ideal (basis rows).
  AlgebraQuotient quotient_by_ideal(const Matrix& ideal_basis) const;

  /// e A e with unit e.
  AlgebraCorner corner(const Vec& idempotent) const;

  std::uint64_t canonical_hash() const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<std::vector<Vec>> mult_;
  Vec unit_;
  std::vector<std::string> labels_;
};

/// Builds the algebra spanned by endomorphism matrices (a basis, closed under
/// composition and containing the identity).  The product is "apply left
/// factor first": x . y = mat(y) * mat(x), which matches the divisor-space
/// orientation used throughout.
Algebra algebra_from_endomorphisms(const Field& f, const std::vector<Matrix>& basis,
                                   std::vector<std::string> labels = {});

class AlgebraModule {
 public:
  AlgebraModule(std::shared_ptr<const Algebra> alg, std::size_t dim);

  static AlgebraModule regular(std::shared_ptr<const Algebra> alg);

  const Algebra& algebra() const { return *alg_; }
  std::shared_ptr<const Algebra> algebra_ptr() const { return alg_; }
  std::size_t dim() const { return dim_; }

  void set_action(std::size_t basis_index, const Matrix& m);
  const Matrix& action(std::size_t basis_index) const { return action_[basis_index]; }
  Matrix act(const Vec& a) const;
  Vec act_vec(const Vec& a, const Vec& m) const;

  /// Module axioms on basis triples plus unit identity.
  void validate() const;

  /// Smallest action-closed subspace containing the rows of seed.
  Matrix submodule_closure(const Matrix& seed) const;
  bool is_submodule(const Matrix& basis) const;

  ModuleSub submodule(const Matrix& basis) const;

  ModuleQuot quotient(const Matrix& sub_basis) const;

  static ModuleSummands direct_sum(const std::vector<const AlgebraModule*>& parts);

  /// Basis of Hom(M, N): matrices X with X act_M(b) = act_N(b) X.
  static std::vector<Matrix> hom_basis(const AlgebraModule& m, const AlgebraModule& n);

  bool are_isomorphic(const AlgebraModule& other) const;

 private:
  std::shared_ptr<const Algebra> alg_;
  std::size_t dim_;
  std::vector<Matrix> action_;
};

struct AlgebraQuotient {
  Algebra alg;
  Matrix projection;  // dim(quot) x dim(parent)
  Matrix section;     // dim(parent) x dim(quot), projection * section = id
};

struct AlgebraCorner {
  Algebra alg;   // e A e with unit e
  Matrix basis;  // rows: corner basis in parent coordinates
};

struct ModuleSub {
  AlgebraModule mod;
  Matrix inclusion;  // parent_dim x sub_dim (columns: sub basis in parent coords)
};

struct ModuleQuot {
  AlgebraModule mod;
  Matrix projection;  // quot_dim x parent_dim
  Matrix section;     // parent_dim x quot_dim
};

struct ModuleSummands {
  AlgebraModule sum;
  std::vector<Matrix> inject;   // sum_dim x part_dim
  std::vector<Matrix> project;  // part_dim x sum_dim
};

/// Left ideal A v as a row basis (action-closed since A is unital).
Matrix left_ideal_of(const Algebra& a, const Vec& v);

}  // namespace gradalg
