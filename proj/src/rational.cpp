#include "gpr/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gpr {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("malformed integer literal '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = 1;
  if (slash != std::string_view::npos) {
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text[0] == '-') {
      throw std::invalid_argument("denominator must be positive in '" + std::string(text) + "'");
    }
    den = parse_integer(den_text);
  }
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::size_t bit_length(const Rational& value) {
  return mpz_sizeinbase(value.get_num_mpz_t(), 2) + mpz_sizeinbase(value.get_den_mpz_t(), 2);
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

bool in_negative_naturals(const Rational& value) { return is_integer(value) && value <= 0; }

}  // namespace gpr
