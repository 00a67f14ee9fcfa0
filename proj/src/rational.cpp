#include "hassett/rational.hpp"

#include <cstdint>
#include <limits>

#include "hassett/errors.hpp"

namespace hassett {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 magnitude(i128 v) { return v < 0 ? u128(-v) : u128(v); }

}  // namespace

Rational Rational::from_wide(i128 numerator, i128 denominator) {
  if (denominator == 0) throw Error("rational: zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  if (numerator == 0) return Rational();
  u128 g = gcd_u128(magnitude(numerator), u128(denominator));
  numerator /= i128(g);
  denominator /= i128(g);
  constexpr i128 kMax = std::numeric_limits<long long>::max();
  if (numerator > kMax || -numerator > kMax || denominator > kMax)
    throw Error("rational: overflow after reduction");
  Rational r;
  r.num_ = static_cast<long long>(numerator);
  r.den_ = static_cast<long long>(denominator);
  return r;
}

Rational::Rational(long long numerator, long long denominator) {
  *this = from_wide(numerator, denominator);
}

Rational& Rational::operator+=(const Rational& o) {
  *this = from_wide(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = from_wide(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = from_wide(i128(num_) * o.num_, i128(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("rational: division by zero");
  *this = from_wide(i128(num_) * o.den_, i128(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  i128 lhs = i128(a.num_) * b.den_;
  i128 rhs = i128(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string out = std::to_string(num_);
  if (den_ != 1) {
    out += '/';
    out += std::to_string(den_);
  }
  return out;
}

Rational Rational::parse(std::string_view text) {
  size_t pos = 0;
  auto fail = [&](const char* why) -> void {
    throw ParseError(std::string("bad rational \"") + std::string(text) + "\": " + why);
  };
  auto skip_spaces = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_spaces();
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
    skip_spaces();
  }
  auto read_digits = [&]() -> i128 {
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') fail("digits expected");
    i128 value = 0;
    int digits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (++digits > 30) fail("too many digits");
      value = value * 10 + (text[pos] - '0');
      ++pos;
    }
    return value;
  };
  i128 numerator = read_digits();
  i128 denominator = 1;
  skip_spaces();
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    skip_spaces();
    denominator = read_digits();
    if (denominator == 0) fail("zero denominator");
  }
  skip_spaces();
  if (pos != text.size()) fail("trailing characters");
  return from_wide(negative ? -numerator : numerator, denominator);
}

}  // namespace hassett
