#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace hyperkernel {

using big_int = boost::multiprecision::cpp_int;

// Exact rational in canonical form (positive denominator, reduced).
class rational {
 public:
  rational() = default;
  rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  rational(std::int64_t num, std::int64_t den);
  rational(const big_int& num, const big_int& den);

  // Accepts "p", "p/q", "-p/q".
  static rational parse(std::string_view text);

  big_int numerator() const { return boost::multiprecision::numerator(value_); }
  big_int denominator() const { return boost::multiprecision::denominator(value_); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  std::string str() const;

  rational& operator+=(const rational& o) { value_ += o.value_; return *this; }
  rational& operator-=(const rational& o) { value_ -= o.value_; return *this; }
  rational& operator*=(const rational& o) { value_ *= o.value_; return *this; }
  rational& operator/=(const rational& o);

  friend rational operator+(rational a, const rational& b) { return a += b; }
  friend rational operator-(rational a, const rational& b) { return a -= b; }
  friend rational operator*(rational a, const rational& b) { return a *= b; }
  friend rational operator/(rational a, const rational& b) { return a /= b; }
  friend rational operator-(const rational& a) { rational r; r.value_ = -a.value_; return r; }

  friend bool operator==(const rational& a, const rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const rational& a, const rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const rational& r) { return os << r.str(); }

 private:
  boost::multiprecision::cpp_rational value_;
};

}  // namespace hyperkernel
