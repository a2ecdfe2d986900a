#ifndef POLYZ_INTEGER_HPP
#define POLYZ_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace polyz {

/// Exact signed integer used for every exponent and matrix entry.
/// Small values live inline, so hot loops over word exponents do not allocate.
using Int = boost::multiprecision::cpp_int;

/// Parity indicator: 0 for even x, 1 for odd x (also for negative x).
inline int mu(const Int &x) { return boost::multiprecision::bit_test(x, 0) ? 1 : 0; }

inline bool is_odd(const Int &x) { return mu(x) == 1; }

/// (-1)^e.
inline int sign_pow(const Int &e) { return is_odd(e) ? -1 : 1; }

/// floor(x / 2); cpp_int division truncates toward zero.
inline Int floor_half(const Int &x) { return (x - mu(x)) / 2; }

/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
Int parse_int(std::string_view text);

std::string to_string(const Int &x);

} // namespace polyz

#endif // POLYZ_INTEGER_HPP
