#include "spinspec/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace spinspec {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Splits "p/q" into signed numerator text and positive denominator text.
// Returns false on any malformation.
bool split_fraction(std::string_view text, std::string_view& num,
                    std::string_view& den) {
  if (text.empty()) return false;
  std::string_view body = text;
  std::size_t slash = body.find('/');
  if (slash == std::string_view::npos) {
    num = body;
    den = "1";
  } else {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  return all_digits(digits) && all_digits(den);
}

}  // namespace

std::string to_string(const Rational& value) { return value.str(); }

Rational parse_rational(std::string_view text) {
  std::string_view num, den;
  if (!split_fraction(text, num, den)) {
    throw std::invalid_argument("not a rational \"p/q\": '" +
                                std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);  // cpp_int rejects the sign
  Int d{std::string(den)};
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  }
  return make_rational(Int{std::string(num)}, d);
}

std::string HalfInt::str() const {
  if (is_integer()) return Int(twice_ / 2).str();
  return twice_.str() + "/2";
}

HalfInt HalfInt::parse(std::string_view text) {
  Rational value = parse_rational(text);
  Int den = denominator(value);
  if (den != 1 && den != 2) {
    throw std::invalid_argument("not a half-integer: '" + std::string(text) +
                                "'");
  }
  return from_twice(numerator(value) * (den == 1 ? 2 : 1));
}

}  // namespace spinspec
