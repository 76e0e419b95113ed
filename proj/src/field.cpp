#include "tauslice/field.hpp"

#include <charconv>
#include <ostream>

namespace tauslice {

thread_local std::uint64_t ModInt::current_modulus_ = 0;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("prime field characteristic must be below 2^31");
  return {FieldKind::prime_field, p};
}

std::string FieldSpec::to_string() const {
  return kind == FieldKind::rationals ? "Q" : "GF(" + std::to_string(characteristic) + ")";
}

std::uint64_t ModInt::modulus() { return current_modulus_; }

ModInt::ModInt(long long v) {
  if (v == 0) return;
  const auto p = current_modulus_;
  if (p == 0) throw std::logic_error("ModInt used outside a ModulusScope");
  const auto m = static_cast<long long>(p);
  long long r = v % m;
  if (r < 0) r += m;
  v_ = static_cast<std::uint64_t>(r);
}

ModInt ModInt::inverse() const {
  if (v_ == 0) throw std::domain_error("division by zero in prime field");
  // Fermat: v^(p-2).
  std::uint64_t result = 1, base = v_, e = current_modulus_ - 2;
  const auto p = current_modulus_;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  ModInt out;
  out.v_ = result;
  return out;
}

ModInt& ModInt::operator+=(const ModInt& o) {
  v_ += o.v_;
  if (v_ >= current_modulus_ && current_modulus_ != 0) v_ -= current_modulus_;
  return *this;
}

ModInt& ModInt::operator-=(const ModInt& o) {
  v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + current_modulus_ - o.v_;
  return *this;
}

ModInt& ModInt::operator*=(const ModInt& o) {
  if (v_ != 0 && o.v_ != 0) v_ = v_ * o.v_ % current_modulus_;
  else v_ = 0;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ModInt& x) { return os << x.v_; }

ModulusScope::ModulusScope(std::uint64_t p) : previous_(ModInt::current_modulus_) {
  if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) {
    throw std::invalid_argument("ModulusScope needs a prime below 2^31, got " + std::to_string(p));
  }
  ModInt::current_modulus_ = p;
}

ModulusScope::~ModulusScope() { ModInt::current_modulus_ = previous_; }

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational FieldTraits<Rational>::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!valid_integer(num)) throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  BigInt n(strip_plus(num));
  if (slash == std::string_view::npos) return Rational(n);
  const auto den = text.substr(slash + 1);
  if (!valid_integer(den)) throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  BigInt d(strip_plus(den));
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

std::string FieldTraits<Rational>::to_string(const Rational& x) { return x.str(); }

ModInt FieldTraits<ModInt>::parse(std::string_view text) {
  const auto rational = FieldTraits<Rational>::parse(text);
  const auto p = BigInt(ModInt::modulus());
  BigInt n = boost::multiprecision::numerator(rational) % p;
  BigInt d = boost::multiprecision::denominator(rational) % p;
  if (d == 0) throw std::invalid_argument("denominator of '" + std::string(text) + "' vanishes in the prime field");
  return ModInt(n.convert_to<long long>()) / ModInt(d.convert_to<long long>());
}

std::string FieldTraits<ModInt>::to_string(const ModInt& x) { return std::to_string(x.value()); }

}  // namespace tauslice
