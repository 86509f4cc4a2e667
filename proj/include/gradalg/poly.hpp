/**
 * @file gradalg/poly.hpp
 * @copyright Apache License 2.0
 *
 * Univariate polynomials over the exact fields, plus the factorization
 * helpers the idempotent-splitting machinery needs: squarefree
 * decomposition, full factorization over F_p (distinct-degree plus
 * Cantor-Zassenhaus with a seeded generator), and rational-root extraction
 * over Q.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gradalg/matrix.hpp"
#include "gradalg/util.hpp"

namespace gradalg {

struct PolyDivMod;

class Poly {
 public:
  explicit Poly(const Field& f) : field_(f) {}
  Poly(const Field& f, const Vec& coeffs);  // coeffs[i] multiplies x^i
  static Poly zero(const Field& f) { return Poly(f); }
  static Poly one(const Field& f);
  static Poly x(const Field& f);
  static Poly constant(const Scalar& c);

  const Field& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for 0
  Scalar coeff(std::size_t i) const;
  const Vec& coeffs() const { return coeffs_; }
  Scalar leading() const;
  bool is_monic() const;
  Poly monic() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Scalar& c) const;
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Quotient and remainder by a nonzero divisor.
  PolyDivMod divmod(const Poly& divisor) const;
  Poly operator%(const Poly& o) const;
  Poly operator/(const Poly& o) const;

  Poly derivative() const;
  Scalar eval(const Scalar& at) const;
  std::string to_string() const;  // e.g. "x^2 + 2*x + 1"

 private:
  void normalize();
  Field field_;
  Vec coeffs_;
};

struct PolyDivMod {
  Poly quot, rem;
};

/// Monic gcd; gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

struct PolyExtGcd {
  Poly g, u, v;  // u a + v b = g, g monic (or zero)
};
PolyExtGcd poly_ext_gcd(const Poly& a, const Poly& b);

/// base^e mod m with an arbitrary-precision exponent.
Poly pow_mod(const Poly& base, const mpz_class& e, const Poly& m);

/// det(xI - m), monic of degree m.rows(); division-free (Berkowitz), so it
/// is exact over every field including small characteristic.
Poly characteristic_polynomial(const Matrix& m);

/// Squarefree decomposition f = lc * prod parts[i].factor^parts[i].multiplicity
/// with the factors monic, squarefree and pairwise coprime.  Valid in any
/// characteristic (the F_p case strips p-th powers via Frobenius).
struct SquarefreePart {
  Poly factor;
  std::size_t multiplicity;
};
std::vector<SquarefreePart> squarefree_decomposition(const Poly& f);

struct PolyFactor {
  Poly factor;  // monic
  std::size_t multiplicity;
};

/// Full factorization into monic irreducibles over F_p.  Deterministic for a
/// fixed seed.  Throws StructureError over Q.
std::vector<PolyFactor> factor_over_prime_field(const Poly& f, std::uint64_t seed = kDefaultSeed);

/// Rational roots with multiplicities (exact; divisor enumeration is bounded,
/// which suffices for the coefficient sizes that arise at this scale).
struct RationalRoot {
  Scalar root;
  std::size_t multiplicity;
};
std::vector<RationalRoot> rational_roots(const Poly& f);

/// True iff f is irreducible; exact over F_p, and exact over Q for
/// degree <= 3 (degree >= 4 over Q returns false only when a split is found,
/// otherwise throws StructureError to refuse an unsupported decision).
bool is_irreducible(const Poly& f, std::uint64_t seed = kDefaultSeed);

}  // namespace gradalg
