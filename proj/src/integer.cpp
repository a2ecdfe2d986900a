#include "polyz/integer.hpp"

#include <stdexcept>

namespace polyz {

Int parse_int(std::string_view text)
{
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size())
    throw std::invalid_argument("expected digits in integer literal");

  Int value = 0;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch < '0' || ch > '9')
      throw std::invalid_argument("invalid character in integer literal");
    value *= 10;
    value += ch - '0';
  }
  return negative ? Int(-value) : value;
}

std::string to_string(const Int &x) { return x.str(); }

} // namespace polyz
