/**
 * @file gradalg/scalar.hpp
 * @copyright Apache License 2.0
 *
 * Exact scalar arithmetic over Q (GMP rationals, always reduced) and prime
 * fields F_p with p prime, p < 2^31 (canonical representatives in [0, p)).
 */
#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "gradalg/error.hpp"

namespace gradalg {

enum class FieldKind { Rationals, Prime };

class Field {
 public:
  static Field rationals() { return Field(FieldKind::Rationals, 0); }
  static Field prime(std::uint32_t p);

  FieldKind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == FieldKind::Rationals; }
  std::uint32_t characteristic() const { return p_; }  // 0 for Q

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Field(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  FieldKind kind_;
  std::uint32_t p_;
};

/// Throws FieldMismatch unless both fields agree.
void require_same_field(const Field& a, const Field& b);

class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}
  static Scalar zero(const Field& f) { return from_int(f, 0); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, long v);
  static Scalar from_mpq(const Field& f, const mpq_class& v);
  /// Parses "a" or "a/b" with optional sign; reduced over Q, canonical mod p.
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;  // DivisionByZero on 0
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "p/q" (or "n" when integral) over Q; decimal representative over F_p.
  std::string to_string() const;

  /// Rational value; only valid over Q.
  const mpq_class& rational() const { return rat_; }
  /// Canonical representative in [0, p); only valid over F_p.
  std::int64_t residue() const { return rep_; }

 private:
  explicit Scalar(const Field& f) : field_(f) {}
  Field field_;
  mpq_class rat_;
  std::int64_t rep_ = 0;
};

/// Deterministic total order (rationals by value, F_p by representative);
/// used for lexicographic tie-breaks.
bool scalar_less(const Scalar& a, const Scalar& b);

}  // namespace gradalg
