// Independent brute-force oracles used by unit and acceptance tests.
// These stay deliberately naive: they define correctness, they do not share
// the algorithms under test.
#pragma once

#include "gradalg/algebra.hpp"

namespace gradalg::oracles {

/// All subspaces of F_p^n as canonical rref row bases (p small, n <= 7).
std::vector<Matrix> all_subspaces(const Field& f, std::size_t n);

/// The largest nilpotent ideal:
///  - over F_2/F_3 (enumerable dimension): scans every subspace, keeps the
///    nilpotent two-sided ideals, returns their sum;
///  - over Q: fixpoint sweep of a small integer grid of candidate generators
///    ({-2..2} coordinates), summing every nilpotent ideal found, iterated on
///    the quotient until stable.
Matrix largest_nilpotent_ideal(const Algebra& a);

/// All vectors of F_p^n (p small).
std::vector<Vec> all_vectors(const Field& f, std::size_t n);

}  // namespace gradalg::oracles
