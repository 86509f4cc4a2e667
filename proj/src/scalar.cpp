/**
 * @file scalar.cpp
 * @copyright Apache License 2.0
 */
#include "gradalg/scalar.hpp"

#include <sstream>

namespace gradalg {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::StructureError: return "StructureError";
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::WindowError: return "WindowError";
    case ErrorKind::InfiniteSupport: return "InfiniteSupport";
    case ErrorKind::TriangularityViolation: return "TriangularityViolation";
    case ErrorKind::IdempotentError: return "IdempotentError";
    case ErrorKind::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::InputNotIdempotentModJ: return "InputNotIdempotentModJ";
    case ErrorKind::NonSplitSemisimpleQuotient: return "NonSplitSemisimpleQuotient";
    case ErrorKind::OracleTooLarge: return "OracleTooLarge";
    case ErrorKind::LiftFailure: return "LiftFailure";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::NotIdempotentOnInterior: return "NotIdempotentOnInterior";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
  }
  return "UnknownError";
}

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

// Inverse of a mod p via extended Euclid; a in [1, p).
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return mod_reduce(t, p);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p))
    throw Error(ErrorKind::StructureError,
                "prime field characteristic must be prime and < 2^31, got " + std::to_string(p));
  return Field(FieldKind::Prime, p);
}

std::string Field::to_string() const {
  return is_rationals() ? "Q" : "F_" + std::to_string(p_);
}

void require_same_field(const Field& a, const Field& b) {
  if (a != b)
    throw Error(ErrorKind::FieldMismatch, a.to_string() + " vs " + b.to_string());
}

Scalar Scalar::from_int(const Field& f, long v) {
  Scalar s(f);
  if (f.is_rationals())
    s.rat_ = mpq_class(v);
  else
    s.rep_ = mod_reduce(v, f.characteristic());
  return s;
}

Scalar Scalar::from_mpq(const Field& f, const mpq_class& v) {
  Scalar s(f);
  if (f.is_rationals()) {
    s.rat_ = v;
    s.rat_.canonicalize();
    return s;
  }
  const std::int64_t p = f.characteristic();
  mpz_class num = v.get_num() % p, den = v.get_den() % p;
  std::int64_t n = mod_reduce(num.get_si(), p), d = mod_reduce(den.get_si(), p);
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "denominator divisible by " + std::to_string(p));
  s.rep_ = n * mod_inverse(d, p) % p;
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  try {
    mpq_class v(text);
    v.canonicalize();
    return from_mpq(f, v);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::StructureError, "cannot parse scalar '" + text + "'");
  }
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? rat_ == 0 : rep_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? rat_ == 1 : rep_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(field_, o.field_);
  Scalar s(field_);
  if (field_.is_rationals())
    s.rat_ = rat_ + o.rat_;
  else
    s.rep_ = (rep_ + o.rep_) % field_.characteristic();
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(field_, o.field_);
  Scalar s(field_);
  if (field_.is_rationals())
    s.rat_ = rat_ - o.rat_;
  else
    s.rep_ = mod_reduce(rep_ - o.rep_, field_.characteristic());
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(field_, o.field_);
  Scalar s(field_);
  if (field_.is_rationals())
    s.rat_ = rat_ * o.rat_;
  else
    s.rep_ = rep_ * o.rep_ % field_.characteristic();
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rationals())
    s.rat_ = -rat_;
  else
    s.rep_ = mod_reduce(-rep_, field_.characteristic());
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  Scalar s(field_);
  if (field_.is_rationals())
    s.rat_ = 1 / rat_;
  else
    s.rep_ = mod_inverse(rep_, field_.characteristic());
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(field_, o.field_);
  return field_.is_rationals() ? rat_ == o.rat_ : rep_ == o.rep_;
}

std::string Scalar::to_string() const {
  if (!field_.is_rationals()) return std::to_string(rep_);
  std::ostringstream os;
  os << rat_;
  return os.str();
}

bool scalar_less(const Scalar& a, const Scalar& b) {
  require_same_field(a.field(), b.field());
  return a.field().is_rationals() ? a.rational() < b.rational() : a.residue() < b.residue();
}

}  // namespace gradalg
