/**
 * @file gradalg/radical.hpp
 * @copyright Apache License 2.0
 *
 * Jacobson radicals of finite-dimensional unital algebras, of hom-groups
 * between graded modules (through the endomorphism algebra of the direct
 * sum), and of modules (J(E) M).  Every result carries a certificate: the
 * method used, the nilpotency index, and a semisimplicity witness for the
 * quotient.
 */
#pragma once

#include "gradalg/algebra.hpp"
#include "gradalg/graded.hpp"
#include "gradalg/total_hom.hpp"

namespace gradalg {

struct RadicalCertificate {
  std::string method;             // "trace-form" or "exhaustive"
  std::size_t radical_dim = 0;
  std::size_t nilpotency_index = 1;  // smallest m with J^m = 0
  bool quotient_semisimple = false;
};

struct RadicalResult {
  Matrix basis;  // rows: basis of J(A)
  RadicalCertificate cert;
};

/// Radical of a finite-dimensional unital algebra.
///
/// Over Q and over F_p with p > dim the kernel of the trace form
/// (x, y) -> tr(L_{xy}) is the radical.  For small p the radical is swept
/// exhaustively as {x : the ideal generated by x is nilpotent}, which is
/// exact whenever p^dim stays enumerable; beyond that CharacteristicTooSmall
/// is raised.  Both paths certify: ideal, nilpotent, semisimple quotient.
RadicalResult algebra_radical(const Algebra& a);

/// Smallest m with I^m = 0, or nullopt when the powers stabilize nonzero.
std::optional<std::size_t> nilpotency_index(const Algebra& a, const Matrix& ideal_basis);

struct HomRadical {
  std::vector<GradedHom> basis;  // basis of J(M, N) inside Hom(M, N)
};

/// J(M, N) via the radical of End(M + N), intersected with the (M -> N)
/// corner of the 2x2 block matrix picture.
HomRadical hom_radical(std::shared_ptr<const GradedModule> m,
                       std::shared_ptr<const GradedModule> n);

/// Same value computed inside End(M + N + C); used to exercise the
/// uniqueness of the radical under padding.
HomRadical hom_radical_padded(std::shared_ptr<const GradedModule> m,
                              std::shared_ptr<const GradedModule> n,
                              std::shared_ptr<const GradedModule> padding);

/// J(A) M for a flat module (rows: subspace basis).
Matrix module_radical(const AlgebraModule& m);

/// J(E) M for a finitely supported graded module, with the grading of the
/// radical recovered through the block idempotents of E.
GradedSub module_radical_graded(const TotalHomAlgebra& e, std::shared_ptr<const GradedModule> m);

}  // namespace gradalg
