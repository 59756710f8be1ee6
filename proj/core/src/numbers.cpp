#include "subdirect/numbers.hpp"

#include "subdirect/errors.hpp"

#include <cctype>

namespace subdirect {

std::string to_string(Integer const& value) { return value.get_str(); }

std::string to_string(Rational const& value) {
  Rational canon(value);
  canon.canonicalize();
  return canon.get_str();
}

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  if (pos == text.size()) {
    throw InputError("expected an integer, got '" + std::string(text) + "'");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw InputError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

Rational binomial(Integer const& n, unsigned k) {
  Rational result(1);
  for (unsigned i = 0; i < k; ++i) {
    result *= Rational(n - i);
    result /= Rational(i + 1);
  }
  result.canonicalize();
  return result;
}

}  // namespace subdirect
