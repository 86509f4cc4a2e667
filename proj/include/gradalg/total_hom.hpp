/**
 * @file gradalg/total_hom.hpp
 * @copyright Apache License 2.0
 *
 * The total hom algebra E = (+) Hom(A[gamma_i], A[gamma_j]) of a finite
 * family of generators, realized through the divisor-space identification
 * Hom(A[gamma_i], A[gamma_j]) ~ A(gamma_i : gamma_j).  The flat product is
 * "apply the left factor first", which makes the identification with divisor
 * products multiplicative and turns transported modules into left E-modules.
 *
 * Finitely supported graded modules transport to E-modules through the
 * adjunction bases Hom(A[gamma], M) ~ M_gamma; the block idempotents 1_gamma
 * recover the grading on the way back.
 */
#pragma once

#include <memory>
#include <vector>

#include "gradalg/algebra.hpp"
#include "gradalg/graded.hpp"

namespace gradalg {

class TotalHomAlgebra {
 public:
  TotalHomAlgebra(std::shared_ptr<const GradedAlgebra> a, std::vector<int> generators);
  static TotalHomAlgebra over_all_arrows(std::shared_ptr<const GradedAlgebra> a);

  const GradedAlgebra& graded() const { return *graded_; }
  std::shared_ptr<const GradedAlgebra> graded_ptr() const { return graded_; }
  const std::vector<int>& generators() const { return gens_; }
  const Algebra& algebra() const { return *alg_; }
  std::shared_ptr<const Algebra> algebra_ptr() const { return alg_; }

  struct BasisInfo {
    std::size_t gen_src;  // position i in generators(): block Hom(A[g_i], A[g_j])
    std::size_t gen_tgt;  // position j
    int alpha;            // arrow with alpha . gamma_j = gamma_i
    std::size_t comp;     // basis index inside A_alpha
  };
  const std::vector<BasisInfo>& basis_info() const { return info_; }

  /// Block identity idempotent 1_{gamma_i} in flat coordinates.
  Vec block_unit(std::size_t gen_index) const;
  /// Sum of all block units = unit of E.
  Vec unit() const { return alg_->unit(); }

  /// The cached generator modules A[gamma_i].
  const FreeModule& generator_module_at(std::size_t gen_index) const {
    return gen_modules_[gen_index];
  }

  struct Transported {
    AlgebraModule mod;                         // left E-module
    std::vector<std::size_t> offsets;          // flat offset per generator position
    std::shared_ptr<const GradedModule> source;
  };
  /// Requires the module to be supported on the generator arrows
  /// (InfiniteSupport otherwise).
  Transported to_total(std::shared_ptr<const GradedModule> m) const;

  struct GradedView {
    std::shared_ptr<const GradedModule> module;
    std::map<int, Matrix> block_bases;  // arrow -> rows in flat coordinates of the E-module
  };
  /// Reconstructs a graded module from any E-module through the block
  /// idempotents; round-trips to_total degree-wise.
  GradedView view_as_graded(const AlgebraModule& mod) const;

  /// Flat E-module hom (matrix tgt_dim x src_dim) to a graded hom between
  /// reconstructed views.
  GradedHom hom_as_graded(const Matrix& flat_hom, const GradedView& src,
                          const GradedView& tgt) const;

  /// Graded hom to the flat block-diagonal matrix between transported modules.
  Matrix hom_to_total(const GradedHom& h, const Transported& src, const Transported& tgt) const;

 private:
  Vec block_unit_raw(std::size_t gen_index) const;

  std::shared_ptr<const GradedAlgebra> graded_;
  std::vector<int> gens_;
  std::shared_ptr<const Algebra> alg_;
  std::vector<BasisInfo> info_;
  std::vector<FreeModule> gen_modules_;
};

}  // namespace gradalg
