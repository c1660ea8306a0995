#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cpalg {

/// Exact fraction with a positive denominator, always in lowest terms.
/// Intermediate products run through 128-bit integers; narrowing back to
/// int64 is checked and throws std::overflow_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    num_ = num;
    den_ = den;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational operator+(const Rational& o) const {
    return make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return make(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return make(i128(num_) * o.num_, i128(den_) * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return make(i128(num_) * o.den_, i128(den_) * o.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  /// Multiplicative inverse; requires a nonzero value.
  Rational inv() const {
    if (num_ == 0) throw std::invalid_argument("Rational: inverse of zero");
    return Rational(den_, num_);
  }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator<(const Rational& o) const { return i128(num_) * o.den_ < i128(o.num_) * den_; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  /// Largest integer <= value.
  std::int64_t floor() const {
    if (num_ >= 0) return num_ / den_;
    return -((-num_ + den_ - 1) / den_);
  }
  /// Smallest integer >= value.
  std::int64_t ceil() const { return -(-*this).floor(); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "p/q" for proper fractions, plain "n" for integers.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Accepts "p/q", an integer, or a finite decimal such as "0.61".
  static Rational parse(std::string_view text);

 private:
  using i128 = __int128;

  static Rational make(i128 num, i128 den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 a = num < 0 ? -num : num;
    i128 b = den;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
    Rational r;
    r.num_ = narrow(num);
    r.den_ = narrow(den);
    return r;
  }

  static std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rational: value out of 64-bit range");
    return static_cast<std::int64_t>(v);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::int64_t& out, int& count) {
    out = 0;
    count = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      if (out > (INT64_MAX - 9) / 10) throw std::overflow_error("Rational::parse: number too large");
      out = out * 10 + (text[i] - '0');
      ++count;
      ++i;
    }
  };
  std::int64_t whole = 0;
  int nwhole = 0;
  digits(whole, nwhole);
  Rational result;
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::int64_t den = 0;
    int nden = 0;
    digits(den, nden);
    if (nwhole == 0 || nden == 0) throw std::invalid_argument("Rational::parse: malformed fraction");
    result = Rational(whole, den);
  } else if (i < text.size() && text[i] == '.') {
    ++i;
    std::int64_t frac = 0;
    int nfrac = 0;
    digits(frac, nfrac);
    if (nwhole == 0 && nfrac == 0) throw std::invalid_argument("Rational::parse: malformed decimal");
    if (nfrac > 18) throw std::overflow_error("Rational::parse: too many decimal digits");
    std::int64_t scale = 1;
    for (int k = 0; k < nfrac; ++k) scale *= 10;
    result = Rational(whole) + Rational(frac, scale);
  } else {
    if (nwhole == 0) throw std::invalid_argument("Rational::parse: expected a number");
    result = Rational(whole);
  }
  skip_ws();
  if (i != text.size()) throw std::invalid_argument("Rational::parse: trailing characters");
  return negative ? -result : result;
}

inline Rational operator+(std::int64_t a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(std::int64_t a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(std::int64_t a, const Rational& b) { return Rational(a) * b; }

}  // namespace cpalg
