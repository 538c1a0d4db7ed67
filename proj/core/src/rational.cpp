#include "coalrank/rational.hpp"

#include <charconv>
#include <numeric>

namespace coalrank {

namespace {

using int128 = __int128;

std::int64_t narrow(int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw domain_error(std::string("rational overflow in ") + what);
  }
  return static_cast<std::int64_t>(v);
}

std::pair<std::int64_t, std::int64_t> normalize(int128 num, int128 den,
                                                const char* what) {
  if (den == 0) throw domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int128 a = num < 0 ? -num : num;
  int128 b = den;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  if (a != 0) {
    num /= a;
    den /= a;
  }
  return {narrow(num, what), narrow(den, what)};
}

Rational make(int128 num, int128 den, const char* what) {
  const auto [n, d] = normalize(num, den, what);
  return Rational(n, d);  // already reduced; the ctor's gcd pass is a no-op
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw parse_error("invalid integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  const auto [n, d] = normalize(num, den, "constructor");
  num_ = n;
  den_ = d;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-static_cast<int128>(num_), "negation");
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<int128>(a.num_) * b.den_ +
                  static_cast<int128>(b.num_) * a.den_,
              static_cast<int128>(a.den_) * b.den_, "addition");
}

Rational operator-(const Rational& a, const Rational& b) {
  return make(static_cast<int128>(a.num_) * b.den_ -
                  static_cast<int128>(b.num_) * a.den_,
              static_cast<int128>(a.den_) * b.den_, "subtraction");
}

Rational operator*(const Rational& a, const Rational& b) {
  return make(static_cast<int128>(a.num_) * b.num_,
              static_cast<int128>(a.den_) * b.den_, "multiplication");
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw domain_error("rational division by zero");
  return make(static_cast<int128>(a.num_) * b.den_,
              static_cast<int128>(a.den_) * b.num_, "division");
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  const int128 lhs = static_cast<int128>(num_) * o.den_;
  const int128 rhs = static_cast<int128>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) {
    s += '/';
    s += std::to_string(den_);
  }
  return s;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text));
  }
  const std::int64_t num = parse_int(text.substr(0, slash));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace coalrank
