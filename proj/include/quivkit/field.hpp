#pragma once

// Exact scalars for the two supported base fields: the rationals and the
// prime fields F_p.  Both types plug into Eigen as custom scalar types, so
// every matrix in the library is an Eigen::Matrix<Scalar, Dynamic, Dynamic>.

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace quivkit {

/// Characteristic of the base field: 0 for Q, a prime p for F_p.
struct FieldSpec {
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return {0}; }
  static FieldSpec prime(std::uint32_t p);

  bool is_rational() const { return characteristic == 0; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// Element of Q, kept in lowest terms with positive denominator (GMP does
/// the canonicalisation).
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : v_(static_cast<long>(v)) {}  // NOLINT: literal conversions are intended
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

/// Element of F_p with the modulus carried at runtime.
///
/// Values built from plain integers (which is how Eigen spells 0 and 1) are
/// "unbound": they carry no modulus and adopt the modulus of whatever bound
/// element they are combined with.  Two bound values with different moduli
/// never meet in a valid computation; mixing them throws.
class ModP {
 public:
  ModP() = default;
  template <std::integral I>
  ModP(I v) : v_(static_cast<std::int64_t>(v)) {}  // NOLINT: literal conversions are intended

  static ModP bound(std::int64_t v, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  /// Residue in [0, p) (requires a modulus, either own or supplied).
  std::uint32_t residue(std::uint32_t p = 0) const;
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::string str() const;

  ModP operator-() const;
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }
  ModP& operator/=(const ModP& o) { return *this = *this / o; }

  friend ModP operator+(const ModP& a, const ModP& b);
  friend ModP operator-(const ModP& a, const ModP& b);
  friend ModP operator*(const ModP& a, const ModP& b);
  friend ModP operator/(const ModP& a, const ModP& b);
  friend bool operator==(const ModP& a, const ModP& b);
  friend std::strong_ordering operator<=>(const ModP& a, const ModP& b);

 private:
  static std::uint32_t common_modulus(const ModP& a, const ModP& b);
  std::uint64_t normalized(std::uint32_t p) const;

  std::int64_t v_ = 0;
  std::uint32_t p_ = 0;
};

template <class S>
concept ExactField = requires(const S& a, const S& b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
  S(0);
  S(1);
};

/// Field-aware constructors.  For ModP the result is bound to the field's
/// modulus; for Rational the FieldSpec must be the rationals.
template <ExactField S>
S make_scalar(const FieldSpec& field, long num, long den = 1);

template <ExactField S>
bool supports(const FieldSpec& field);

/// Serialised form: "3/7", "-2", "2 mod 5".
template <ExactField S>
std::string format_scalar(const S& x, const FieldSpec& field);

template <ExactField S>
inline bool is_zero(const S& x) {
  return x.is_zero();
}

inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }
inline std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.str(); }

/// Attaches the field's modulus to a possibly unbound literal.
inline Rational bind_to(const Rational& x, const FieldSpec&) { return x; }
inline ModP bind_to(const ModP& x, const FieldSpec& field) {
  return ModP::bound(x.residue(field.characteristic), field.characteristic);
}

// Hooks Eigen may look up through ADL for real scalar types.
inline const Rational& conj(const Rational& x) { return x; }
inline const Rational& real(const Rational& x) { return x; }
inline Rational imag(const Rational&) { return Rational(0); }
inline Rational abs2(const Rational& x) { return x * x; }
inline const ModP& conj(const ModP& x) { return x; }
inline const ModP& real(const ModP& x) { return x; }
inline ModP imag(const ModP&) { return ModP(0); }
inline ModP abs2(const ModP& x) { return x * x; }

}  // namespace quivkit

namespace Eigen {

template <>
struct NumTraits<quivkit::Rational> : GenericNumTraits<quivkit::Rational> {
  using Real = quivkit::Rational;
  using NonInteger = quivkit::Rational;
  using Literal = quivkit::Rational;
  using Nested = quivkit::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<quivkit::ModP> : GenericNumTraits<quivkit::ModP> {
  using Real = quivkit::ModP;
  using NonInteger = quivkit::ModP;
  using Literal = quivkit::ModP;
  using Nested = quivkit::ModP;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
