#include "jrep/rational.hpp"

#include <cctype>

#include "jrep/error.hpp"

namespace jrep {

namespace {

bool is_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

}  // namespace

std::string to_fraction_string(const Rational& value) {
  return value.str();
}

std::string to_decimal_string(const Rational& value, int places) {
  if (places < 0) throw InvalidArgument("negative decimal places");
  const bool negative = value < 0;
  const Rational magnitude = negative ? Rational(-value) : value;
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // round(|x| * 10^places) with halves rounded up.
  const Rational scaled = magnitude * scale + Rational(1, 2);
  const BigInt rounded = boost::multiprecision::numerator(scaled) /
                         boost::multiprecision::denominator(scaled);
  std::string digits = rounded.str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (negative && rounded != 0) digits.insert(0, "-");
  return digits;
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  }
  const BigInt denominator{std::string(den)};
  if (denominator == 0) {
    throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  }
  BigInt numerator{std::string(num)};
  if (negative) numerator = -numerator;
  return Rational(numerator, denominator);
}

}  // namespace jrep
