#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace weavekit {

// Exact rational on int64 with 128-bit intermediates. Lattice constructions
// keep numerators and denominators tiny; user input converted from doubles is
// dyadic and fits as long as exponents stay moderate. Anything past int64
// after reduction throws instead of silently rounding.
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

class Rat {
 public:
  constexpr Rat() = default;
  Rat(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rat(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

  static Rat from_double(double x);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  friend Rat operator-(const Rat& a) { return Rat(-a.num_, a.den_, already_normal_tag{}); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
    __int128 d = i128(a.den_) * b.den_;
    return reduce(n, d);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return reduce(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    __int128 n = i128(a.num_) * b.den_;
    __int128 d = i128(a.den_) * b.num_;
    if (d < 0) { n = -n; d = -d; }
    return reduce(n, d);
  }

  Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
  Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }
  Rat& operator*=(const Rat& b) { *this = *this * b; return *this; }
  Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return i128(a.num_) * b.den_ < i128(b.num_) * a.den_; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  friend Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
  friend Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }
  friend Rat abs(const Rat& a) { return a.num_ < 0 ? -a : a; }

  std::string to_string() const;

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 0x100000001b3ull;
    };
    mix(static_cast<std::uint64_t>(num_));
    mix(static_cast<std::uint64_t>(den_));
    return static_cast<std::size_t>(h);
  }

 private:
  struct already_normal_tag {};
  Rat(std::int64_t n, std::int64_t d, already_normal_tag) : num_(n), den_(d) {}

  static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

  static Rat reduce(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 an = n < 0 ? -n : n;
    __int128 g = gcd128(an, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min() ||
        d > std::numeric_limits<std::int64_t>::max()) {
      throw OverflowError("Rat: value exceeds 64-bit exact range");
    }
    return Rat(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d), already_normal_tag{});
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a;
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rat Rat::from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("Rat: non-finite double");
  if (x == 0.0) return Rat(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
  // 53 mantissa bits: m * 2^53 is an exact integer.
  auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
  exp -= 53;
  while (mant != 0 && (mant & 1) == 0) { mant >>= 1; ++exp; }
  if (exp >= 0) {
    if (exp > 10) throw OverflowError("Rat: double magnitude too large for exact range");
    return Rat(mant << exp, 1);
  }
  if (exp < -62) throw OverflowError("Rat: double requires denominator beyond exact range");
  return Rat(mant, std::int64_t{1} << (-exp));
}

inline std::string Rat::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace weavekit
