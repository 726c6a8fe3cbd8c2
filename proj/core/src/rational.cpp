#include "hyperkernel/rational.hpp"

#include "hyperkernel/error.hpp"

#include <cctype>

namespace hyperkernel {

rational::rational(std::int64_t num, std::int64_t den) : rational(big_int(num), big_int(den)) {}

rational::rational(const big_int& num, const big_int& den) {
  if (den == 0) throw error(errc::invalid_argument, "zero denominator");
  // cpp_rational rejects a negative denominator.
  value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
}

rational& rational::operator/=(const rational& o) {
  if (o.value_ == 0) throw error(errc::invalid_argument, "division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

big_int parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw error(errc::syntax_error, "bad rational '" + std::string(whole) + "'");
  big_int value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw error(errc::syntax_error, "bad rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? big_int(-value) : value;
}

}  // namespace

rational rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return rational(parse_integer(text, text), big_int(1));
  const big_int num = parse_integer(text.substr(0, slash), text);
  const big_int den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw error(errc::syntax_error, "zero denominator in '" + std::string(text) + "'");
  return rational(num, den);
}

std::string rational::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

}  // namespace hyperkernel
