#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "coalrank/errors.hpp"

namespace coalrank {

/// Exact rational number on 64-bit words.
///
/// Always normalized: gcd(num, den) == 1 and den > 0. Arithmetic runs
/// through 128-bit intermediates and throws domain_error if a result no
/// longer fits in 64 bits.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  std::strong_ordering operator<=>(const Rational& o) const;
  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  /// Lowest terms, "p" for integers, "p/q" otherwise, sign on the numerator.
  std::string str() const;

  /// Accepts "p", "-p", "p/q", "-p/q". Throws parse_error.
  static Rational parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace coalrank
