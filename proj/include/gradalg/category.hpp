/**
 * @file gradalg/category.hpp
 * @copyright Apache License 2.0
 *
 * The grading category: finite categories with explicit composition tables,
 * finite groups, finitely supported commutative monoid windows (Nat^k or
 * Int^k lattices), and poset interval categories.  Compositions that land
 * outside a declared window are absorbed (the algebra components there are
 * definitionally zero).
 */
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradalg/error.hpp"

namespace gradalg {

enum class CategoryKind { ExplicitFinite, FiniteGroup, CommutativeMonoidWindow, PosetInterval };

enum class LatticeKind { Nat, Int };

struct Arrow {
  std::string id;
  std::string src;
  std::string tgt;
};

struct CategoryViolation {
  std::string code;     // "associativity", "identity", "totality", ...
  std::string message;  // includes the offending ids
};

struct CategoryReport {
  std::vector<CategoryViolation> violations;
  bool ok() const { return violations.empty(); }
};

enum class SequenceCondition { Main0SequenceCondition, Main1RightDivisorChains };
enum class SequenceVerdict { Holds, Fails, NotDecidableForKind };

struct ArrowSequenceReport {
  SequenceCondition condition;
  SequenceVerdict verdict;
  std::vector<std::string> witness;  // failure chain, checkable by right_divisor
  std::string justification;         // which argument decided it
};

class IndexCategory {
 public:
  /// Explicit finite category from arrow data and a composition table
  /// (triples alpha, beta -> alpha.beta, meaning "beta first").
  static IndexCategory explicit_finite(
      std::vector<std::string> objects, std::vector<Arrow> arrows,
      std::map<std::string, std::string> identities,
      const std::vector<std::array<std::string, 3>>& composition);

  /// One object; arrows = group elements via the Cayley table
  /// table[i][j] = elements[i] * elements[j].  Checks the group axioms.
  static IndexCategory from_group(const std::vector<std::string>& elements,
                                  const std::vector<std::vector<std::string>>& table);

  /// Objects = elements, one arrow per comparable pair (reflexive pairs give
  /// identities).  `leq` lists pairs (a, b) with a <= b; reflexivity is
  /// implied, transitivity is required and checked.
  static IndexCategory from_poset(const std::vector<std::string>& elements,
                                  const std::vector<std::pair<std::string, std::string>>& leq);

  /// One object; arrows = lattice points of the window; composition is
  /// componentwise addition, absorbed when the sum leaves the window.
  /// For Nat the window must be downward closed under componentwise <=.
  static IndexCategory monoid_window(std::size_t rank, LatticeKind lattice,
                                     const std::vector<std::vector<long>>& window);

  CategoryKind kind() const { return kind_; }
  LatticeKind lattice() const { return lattice_; }
  std::size_t lattice_rank() const { return rank_; }

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t arrow_count() const { return arrows_.size(); }

  int arrow_index(const std::string& id) const;  // StructureError when unknown
  std::optional<int> find_arrow(const std::string& id) const;
  const Arrow& arrow(int idx) const { return arrows_[idx]; }
  int identity_arrow(const std::string& object) const;
  bool is_identity(int idx) const;

  /// Composition alpha.beta ("beta first"); requires src(alpha) == tgt(beta).
  /// nullopt = absorbed out-of-window product (only for window kinds).
  std::optional<int> compose(int alpha, int beta) const;
  bool composable(int alpha, int beta) const;

  /// All (alpha, beta) with alpha.beta = gamma.
  std::vector<std::pair<int, int>> factorizations(int gamma) const;

  /// true iff gamma = alpha.beta for some alpha.
  bool right_divisor(int gamma, int beta) const;

  /// Window coordinates of an arrow (window kinds only).
  const std::vector<long>& lattice_point(int idx) const;

  CategoryReport validate() const;

  /// Decides the Theorem 1.1 / 1.2 hypotheses by category kind.
  ArrowSequenceReport check_sequence_condition(const std::vector<int>& algebra_support) const;

  /// Poset order on objects (PosetInterval kind only): a <= b.
  bool poset_leq(const std::string& a, const std::string& b) const;

 private:
  IndexCategory() = default;
  void index_arrows();
  int compose_raw(int alpha, int beta) const { return compose_[alpha][beta]; }

  static constexpr int kNotComposable = -2;
  static constexpr int kOutOfWindow = -1;

  CategoryKind kind_ = CategoryKind::ExplicitFinite;
  LatticeKind lattice_ = LatticeKind::Nat;
  std::size_t rank_ = 0;
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> arrow_index_;
  std::map<std::string, int> identity_of_;
  std::vector<std::vector<int>> compose_;
  std::vector<std::vector<long>> points_;  // window kinds: lattice coordinates
  std::map<std::pair<std::string, std::string>, bool> leq_;  // poset kinds
};

/// Formats a lattice point as an arrow id: "3" for rank 1, "(1,2)" beyond.
std::string lattice_arrow_id(const std::vector<long>& point);

}  // namespace gradalg
