// Exact scalar types: arbitrary-precision rationals and integers modulo a prime.
#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tauslice {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

enum class FieldKind { rationals, prime_field };

struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::uint64_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p);

  std::string to_string() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// Integers modulo the prime installed by the innermost live ModulusScope on
/// the calling thread. Elements do not carry their modulus; every element a
/// computation touches must have been created under the same scope.
class ModInt {
 public:
  ModInt() = default;
  ModInt(long long v);  // NOLINT(google-explicit-constructor): literal interop with Eigen
  ModInt(int v) : ModInt(static_cast<long long>(v)) {}

  static std::uint64_t modulus();

  std::uint64_t value() const { return v_; }
  ModInt inverse() const;

  ModInt& operator+=(const ModInt& o);
  ModInt& operator-=(const ModInt& o);
  ModInt& operator*=(const ModInt& o);
  ModInt& operator/=(const ModInt& o) { return *this *= o.inverse(); }

  friend ModInt operator+(ModInt a, const ModInt& b) { return a += b; }
  friend ModInt operator-(ModInt a, const ModInt& b) { return a -= b; }
  friend ModInt operator*(ModInt a, const ModInt& b) { return a *= b; }
  friend ModInt operator/(ModInt a, const ModInt& b) { return a /= b; }
  ModInt operator-() const { return ModInt{} - *this; }

  friend bool operator==(const ModInt& a, const ModInt& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ModInt& a, const ModInt& b) { return a.v_ != b.v_; }
  // Needed by a few Eigen internals; the order carries no algebraic meaning.
  friend bool operator<(const ModInt& a, const ModInt& b) { return a.v_ < b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const ModInt& x);

 private:
  friend class ModulusScope;
  static thread_local std::uint64_t current_modulus_;
  std::uint64_t v_ = 0;
};

/// Installs `p` as the prime for ModInt arithmetic on this thread until destroyed.
class ModulusScope {
 public:
  explicit ModulusScope(std::uint64_t p);
  ~ModulusScope();
  ModulusScope(const ModulusScope&) = delete;
  ModulusScope& operator=(const ModulusScope&) = delete;

 private:
  std::uint64_t previous_;
};

inline ModInt abs(const ModInt& x) { return x; }

/// Uniform access to field-dependent behaviour of a scalar type.
template <class S>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static std::uint64_t characteristic() { return 0; }
  static FieldSpec spec() { return FieldSpec::rationals(); }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static Rational from_int(long long v) { return Rational(v); }
  /// Parses "a", "-a", "a/b".
  static Rational parse(std::string_view text);
  static std::string to_string(const Rational& x);
};

template <>
struct FieldTraits<ModInt> {
  static std::uint64_t characteristic() { return ModInt::modulus(); }
  static FieldSpec spec() { return FieldSpec::prime(ModInt::modulus()); }
  static bool is_zero(const ModInt& x) { return x.value() == 0; }
  static ModInt from_int(long long v) { return ModInt(v); }
  static ModInt parse(std::string_view text);
  static std::string to_string(const ModInt& x);
};

template <class S>
bool is_zero(const S& x) {
  return FieldTraits<S>::is_zero(x);
}

}  // namespace tauslice

namespace Eigen {

template <>
struct NumTraits<tauslice::Rational> : GenericNumTraits<tauslice::Rational> {
  using Real = tauslice::Rational;
  using NonInteger = tauslice::Rational;
  using Literal = tauslice::Rational;
  using Nested = tauslice::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 60
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<tauslice::ModInt> : GenericNumTraits<tauslice::ModInt> {
  using Real = tauslice::ModInt;
  using NonInteger = tauslice::ModInt;
  using Literal = tauslice::ModInt;
  using Nested = tauslice::ModInt;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
