/**
 * @file gradalg/counterexample.hpp
 * @copyright Apache License 2.0
 *
 * The Z-graded polynomial algebra scene at truncated scale: the module X
 * whose free cover admits no bounded splitting, searched exhaustively.
 *
 * The scene lives on an Int window; the algebra carries K a_k for
 * 0 <= k <= 2d, the module X carries K x_k for |k| <= d, and f(a_k (x) x_l)
 * = x_{k+l}.  Degree-preserving equivariant endomorphisms e of F_A(X) are
 * parametrized by the lambda triangle e(a_0 (x) x_k) = sum_{l <= k}
 * lambda_{k,l} a_{k-l} (x) x_l.  Admissibility imposes f o e = f for
 * |k| <= d and e^2 = e on the interior |k| <= d - 1; truncation must not
 * manufacture constraints beyond those.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "gradalg/graded.hpp"

namespace gradalg {

struct WindowScene {
  long d = 1;
  std::shared_ptr<const IndexCategory> cat;
  std::shared_ptr<const GradedAlgebra> algebra;   // A_k = K a_k, 0 <= k <= 2d
  std::shared_ptr<const GradedModule> x_module;   // X_k = K x_k, |k| <= d
  FreeModule free_cover;                          // F = F_A(X)
  GradedHom f;                                    // counit F -> X

  int arrow(long k) const;                        // window arrow for degree k
  /// Position of a_{k-l} (x) x_l in the basis of F_k.
  std::size_t free_index(long k, long l) const;
};

WindowScene build_scene(long d, const Field& field);

/// Lambda triangle: lambda[k][l] for -d <= l <= k <= d, stored row-wise with
/// row index k+d and column index l+d.
struct LambdaTriangle {
  long d = 1;
  std::vector<std::vector<Scalar>> rows;  // rows[k+d] has k+d+1 entries

  const Scalar& at(long k, long l) const { return rows[k + d][l + d]; }
};

/// The graded endomorphism of F with the given triangle (the tested lemma:
/// equivariant degree-preserving endomorphisms are exactly these).
GradedHom endo_from_triangle(const WindowScene& s, const LambdaTriangle& lambda);

/// Extracts the triangle of an equivariant degree-preserving endomorphism;
/// NotEquivariant when e is not of that shape.
LambdaTriangle triangle_of_endo(const WindowScene& s, const GradedHom& e);

struct IdempotentAnalysis {
  LambdaTriangle lambda;
  std::vector<long> diagonal_one;  // I = {k : lambda_{k,k} = 1}
  bool diagonal_idempotent = true; // lambda_{k,k}^2 = lambda_{k,k} on the interior
  std::vector<long> failures;     // interior degrees where it fails
};

/// Checks e^2 = e on the interior degrees |k| <= d-1 (NotIdempotentOnInterior
/// otherwise) and extracts the diagonal data.
IdempotentAnalysis idempotent_diagonal_check(const WindowScene& s, const GradedHom& e);

struct DescentStep {
  long from;
  long to;  // leading index of row from-1; lambda_{to,to} = 1
};

struct DescentReport {
  /// For every k in I above the edge zone, the chain of descent steps until
  /// the window edge zone {-d, 1-d} is reached.
  std::vector<std::vector<DescentStep>> chains;
  bool all_reach_edge = true;
  long interior_minimal_elements = 0;  // must stay 0
  std::size_t max_depth = 0;
};

/// Verifies the minimal-element descent at window scale for an analysis
/// coming from an admissible e (f o e = f on |k| <= d assumed checked).
DescentReport min_element_propagation(const WindowScene& s, const IdempotentAnalysis& a);

struct SearchReport {
  long d = 1;
  std::uint32_t field_char = 2;
  std::uint64_t admissible_count = 0;
  std::uint64_t min_max_descent_depth = 0;  // min over e of max descent depth
  bool all_diagonal_idempotent = true;
  bool all_descents_reach_edge = true;
  std::uint64_t interior_minimal_found = 0;  // must stay 0
  /// A bounded sample of admissible triangles in canonical order.
  std::vector<LambdaTriangle> sample;
};

/// Enumerates ALL admissible triangles (f o e = f on |k| <= d, e^2 = e on
/// |k| <= d - 1) over F_2 or F_3 for d <= 3; SearchSpaceTooLarge beyond.
/// `threads` caps the partition workers (top-degree row partitions merge
/// deterministically).
SearchReport brute_force_split_search(long d, const Field& field, unsigned threads = 1,
                                      std::size_t sample_limit = 5);

}  // namespace gradalg
