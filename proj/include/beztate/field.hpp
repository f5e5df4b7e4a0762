#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace beztate {

/// Raised for malformed input at the library boundary (bad field spec,
/// non-homogeneous forms, dependent subspaces, unparsable JSON values).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FieldKind { rationals, prime_field };

/// An element of the ground field.  The value is meaningful only together
/// with the Field that produced it: over GF(p) it is the canonical residue
/// in [0, p), over Q it is a reduced fraction with positive denominator.
class Scalar {
 public:
  Scalar() = default;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  const mpq_class& value() const { return value_; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

 private:
  friend class Field;
  explicit Scalar(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_{0};
};

/// The ground field k: either Q or GF(p) with p prime and below 2^31.
class Field {
 public:
  static constexpr std::uint32_t kDefaultModulus = 32003;

  Field() : Field(FieldKind::prime_field, kDefaultModulus) {}

  static Field rationals() { return Field(FieldKind::rationals, 0); }
  static Field prime(std::uint64_t modulus);
  /// Accepts "q" (rationals) or "p:MODULUS".
  static Field parse(std::string_view spec);

  FieldKind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == FieldKind::prime_field; }
  std::uint32_t modulus() const { return modulus_; }
  std::string spec() const;

  Scalar zero() const { return Scalar(); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long long v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// Parses "num" or "num/den" (decimal, optional sign).
  Scalar parse_scalar(std::string_view text) const;
  std::string format(const Scalar& s) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// Residue of a canonical GF(p) scalar; only valid for prime fields.
  std::uint32_t residue(const Scalar& s) const;
  Scalar from_residue(std::uint64_t r) const { return Scalar(mpq_class(static_cast<unsigned long>(r % modulus_))); }

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(FieldKind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}
  Scalar reduce(mpq_class q) const;

  FieldKind kind_;
  std::uint32_t modulus_;
};

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
bool is_prime(std::uint64_t n);

}  // namespace beztate
