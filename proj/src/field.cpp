#include "quivkit/field.hpp"

#include "quivkit/error.hpp"

#include <limits>
#include <utility>

namespace quivkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p) || p > (1u << 31)) {
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  }
  return {p};
}

std::string FieldSpec::name() const {
  return characteristic == 0 ? "Q" : "F" + std::to_string(characteristic);
}

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q");
  v_ /= o.v_;
  return *this;
}

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("division by zero in F_" + std::to_string(p));
  return static_cast<std::uint64_t>(t < 0 ? t + p : t);
}

}  // namespace

ModP ModP::bound(std::int64_t v, std::uint32_t p) {
  ModP out;
  out.p_ = p;
  const std::int64_t m = static_cast<std::int64_t>(p);
  out.v_ = ((v % m) + m) % m;
  return out;
}

std::uint32_t ModP::common_modulus(const ModP& a, const ModP& b) {
  if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) {
    throw std::logic_error("mixing F_" + std::to_string(a.p_) + " and F_" + std::to_string(b.p_));
  }
  return a.p_ != 0 ? a.p_ : b.p_;
}

std::uint64_t ModP::normalized(std::uint32_t p) const {
  if (p_ != 0) return static_cast<std::uint64_t>(v_);
  const std::int64_t m = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((v_ % m) + m) % m);
}

std::uint32_t ModP::residue(std::uint32_t p) const {
  const std::uint32_t m = p_ != 0 ? p_ : p;
  if (m == 0) throw std::logic_error("residue of an unbound F_p literal");
  return static_cast<std::uint32_t>(normalized(m));
}

std::string ModP::str() const {
  if (p_ == 0) return std::to_string(v_);
  return std::to_string(v_) + " mod " + std::to_string(p_);
}

ModP ModP::operator-() const {
  if (p_ == 0) {
    ModP out;
    out.v_ = -v_;
    return out;
  }
  return bound(v_ == 0 ? 0 : static_cast<std::int64_t>(p_) - v_, p_);
}

ModP operator+(const ModP& a, const ModP& b) {
  const std::uint32_t p = ModP::common_modulus(a, b);
  if (p == 0) return ModP(a.v_ + b.v_);
  return ModP::bound(static_cast<std::int64_t>((a.normalized(p) + b.normalized(p)) % p), p);
}

ModP operator-(const ModP& a, const ModP& b) {
  const std::uint32_t p = ModP::common_modulus(a, b);
  if (p == 0) return ModP(a.v_ - b.v_);
  return ModP::bound(static_cast<std::int64_t>((a.normalized(p) + p - b.normalized(p)) % p), p);
}

ModP operator*(const ModP& a, const ModP& b) {
  const std::uint32_t p = ModP::common_modulus(a, b);
  if (p == 0) return ModP(a.v_ * b.v_);
  return ModP::bound(static_cast<std::int64_t>((a.normalized(p) * b.normalized(p)) % p), p);
}

ModP operator/(const ModP& a, const ModP& b) {
  const std::uint32_t p = ModP::common_modulus(a, b);
  if (p == 0) {
    if (b.v_ == 0 || a.v_ % b.v_ != 0) {
      throw std::logic_error("inexact division of unbound F_p literals");
    }
    return ModP(a.v_ / b.v_);
  }
  const std::uint64_t inv = inverse_mod(b.normalized(p), p);
  return ModP::bound(static_cast<std::int64_t>((a.normalized(p) * inv) % p), p);
}

bool operator==(const ModP& a, const ModP& b) {
  const std::uint32_t p = ModP::common_modulus(a, b);
  if (p == 0) return a.v_ == b.v_;
  return a.normalized(p) == b.normalized(p);
}

std::strong_ordering operator<=>(const ModP& a, const ModP& b) {
  const std::uint32_t p = ModP::common_modulus(a, b);
  if (p == 0) return a.v_ <=> b.v_;
  return a.normalized(p) <=> b.normalized(p);
}

template <>
Rational make_scalar<Rational>(const FieldSpec& field, long num, long den) {
  if (!field.is_rational()) throw std::logic_error("Rational scalar requested for " + field.name());
  return Rational(num, den);
}

template <>
ModP make_scalar<ModP>(const FieldSpec& field, long num, long den) {
  if (field.is_rational()) throw std::logic_error("F_p scalar requested for Q");
  const ModP n = ModP::bound(num, field.characteristic);
  const ModP d = ModP::bound(den, field.characteristic);
  return n / d;
}

template <>
bool supports<Rational>(const FieldSpec& field) {
  return field.is_rational();
}

template <>
bool supports<ModP>(const FieldSpec& field) {
  return !field.is_rational();
}

template <>
std::string format_scalar<Rational>(const Rational& x, const FieldSpec&) {
  return x.str();
}

template <>
std::string format_scalar<ModP>(const ModP& x, const FieldSpec& field) {
  return std::to_string(x.residue(field.characteristic)) + " mod " +
         std::to_string(field.characteristic);
}

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NOT_A_SUBSPACE: return "NOT_A_SUBSPACE";
    case Errc::BLOCKS_NOT_DIRECT: return "BLOCKS_NOT_DIRECT";
    case Errc::DIMENSION_MISMATCH: return "DIMENSION_MISMATCH";
    case Errc::MALFORMED_ALGEBRA: return "MALFORMED_ALGEBRA";
    case Errc::ASSOCIATIVITY_FAIL: return "ASSOCIATIVITY_FAIL";
    case Errc::UNIT_FAIL: return "UNIT_FAIL";
    case Errc::NOT_POINTED: return "NOT_POINTED";
    case Errc::RADICAL_NOT_NILPOTENT: return "RADICAL_NOT_NILPOTENT";
    case Errc::CHAR_TOO_SMALL: return "CHAR_TOO_SMALL";
    case Errc::NOT_UNITAL: return "NOT_UNITAL";
    case Errc::NOT_MULTIPLICATIVE: return "NOT_MULTIPLICATIVE";
    case Errc::RADICAL_QUOTIENT_NOT_SURJECTIVE: return "RADICAL_QUOTIENT_NOT_SURJECTIVE";
    case Errc::NOT_AN_IDEAL: return "NOT_AN_IDEAL";
    case Errc::NOT_COMPOSABLE: return "NOT_COMPOSABLE";
    case Errc::MALFORMED_QUIVER: return "MALFORMED_QUIVER";
    case Errc::INVALID_VERTEX_MAP: return "INVALID_VERTEX_MAP";
    case Errc::NOT_INJECTIVE: return "NOT_INJECTIVE";
    case Errc::LEVEL_TOO_SMALL: return "LEVEL_TOO_SMALL";
    case Errc::BIMODULE_CONDITION_FAIL: return "BIMODULE_CONDITION_FAIL";
    case Errc::TRUNCATION_INCOMPATIBLE: return "TRUNCATION_INCOMPATIBLE";
    case Errc::NOT_VALIDATED: return "NOT_VALIDATED";
    case Errc::NO_CONJUGATOR: return "NO_CONJUGATOR";
    case Errc::TARGET_MISMATCH: return "TARGET_MISMATCH";
    case Errc::SOURCE_MISMATCH: return "SOURCE_MISMATCH";
    case Errc::NOT_SURJECTIVE: return "NOT_SURJECTIVE";
    case Errc::NOT_SIM1: return "NOT_SIM1";
    case Errc::DELTA_INVALID: return "DELTA_INVALID";
    case Errc::WITNESS_INVALID: return "WITNESS_INVALID";
    case Errc::UNDECIDED: return "UNDECIDED";
    case Errc::INTERNAL: return "INTERNAL";
  }
  return "UNKNOWN";
}

}  // namespace quivkit
