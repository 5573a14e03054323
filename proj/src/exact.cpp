#include "tubix/exact.hpp"

#include <cctype>
#include <stdexcept>

namespace tubix {

std::string to_exact_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_exact_string(const BigInt& z) { return z.str(); }

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

BigInt pow_int(long base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

}  // namespace tubix
