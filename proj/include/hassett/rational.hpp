#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace hassett {

/// Exact rational number. Stored reduced with a positive denominator.
/// Components live in 64 bits; intermediates use 128 bits and any result
/// that would not fit back into 64 bits throws rather than wrapping.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit on purpose
  Rational(long long numerator, long long denominator);

  /// Accepts "p" or "p/q" with an optional leading sign.
  static Rational parse(std::string_view text);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }
  Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

  std::string str() const;

  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 numerator, __int128 denominator);

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace hassett
