#include "beztate/field.hpp"

#include <charconv>

namespace beztate {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t modulus) {
  if (modulus >= (1ULL << 31U) || !is_prime(modulus))
    throw InvalidInput("field modulus must be a prime below 2^31, got " + std::to_string(modulus));
  return Field(FieldKind::prime_field, static_cast<std::uint32_t>(modulus));
}

Field Field::parse(std::string_view spec) {
  if (spec == "q" || spec == "Q") return rationals();
  if (spec.size() > 2 && spec.substr(0, 2) == "p:") {
    std::uint64_t m = 0;
    auto digits = spec.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(m);
  }
  throw InvalidInput("field must be 'q' or 'p:MODULUS', got '" + std::string(spec) + "'");
}

std::string Field::spec() const {
  return is_prime_field() ? "p:" + std::to_string(modulus_) : std::string("q");
}

Scalar Field::reduce(mpq_class q) const {
  if (!is_prime_field()) {
    q.canonicalize();
    return Scalar(std::move(q));
  }
  mpz_class m(static_cast<unsigned long>(modulus_));
  mpz_class num = q.get_num() % m;
  if (num < 0) num += m;
  mpz_class den = q.get_den() % m;
  if (den == 0) throw InvalidInput("denominator vanishes modulo " + std::to_string(modulus_));
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  mpz_class r = num * den_inv % m;
  return Scalar(mpq_class(r));
}

Scalar Field::from_int(long long v) const { return reduce(mpq_class(static_cast<long>(v))); }

Scalar Field::from_rational(const mpq_class& q) const { return reduce(q); }

Scalar Field::parse_scalar(std::string_view text) const {
  std::string s(text);
  auto slash = s.find('/');
  try {
    mpz_class num(slash == std::string::npos ? s : s.substr(0, slash), 10);
    mpz_class den(1);
    if (slash != std::string::npos) den = mpz_class(s.substr(slash + 1), 10);
    if (den == 0) throw InvalidInput("zero denominator in '" + s + "'");
    return reduce(mpq_class(num, den));
  } catch (const std::invalid_argument&) {
    throw InvalidInput("malformed scalar '" + s + "'");
  }
}

std::string Field::format(const Scalar& s) const { return s.value_.get_str(10); }

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) return from_residue(std::uint64_t{residue(a)} + residue(b));
  return Scalar(mpq_class(a.value_ + b.value_));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) return from_residue(std::uint64_t{residue(a)} + modulus_ - residue(b));
  return Scalar(mpq_class(a.value_ - b.value_));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) return from_residue(std::uint64_t{residue(a)} * residue(b));
  return Scalar(mpq_class(a.value_ * b.value_));
}

Scalar Field::neg(const Scalar& a) const {
  if (is_prime_field()) return from_residue(modulus_ - residue(a));
  return Scalar(mpq_class(-a.value_));
}

Scalar Field::inv(const Scalar& a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  if (is_prime_field()) return from_residue(pow_mod(residue(a), modulus_ - 2, modulus_));
  return Scalar(mpq_class(1 / a.value_));
}

std::uint32_t Field::residue(const Scalar& s) const {
  return static_cast<std::uint32_t>(mpz_get_ui(s.value_.get_num_mpz_t()));
}

}  // namespace beztate
