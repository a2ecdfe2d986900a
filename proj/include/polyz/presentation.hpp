#ifndef POLYZ_PRESENTATION_HPP
#define POLYZ_PRESENTATION_HPP

#include "polyz/integer.hpp"
#include "polyz/word.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polyz {

/// Syntax or structural error in presentation / word text, with the byte
/// offset where it was detected.
class ParseError : public std::runtime_error
{
public:
  ParseError(const std::string &message, std::size_t position);

  std::size_t position() const { return position_; }
  /// Message without the "position N: " prefix.
  const std::string &detail() const { return detail_; }

private:
  std::size_t position_;
  std::string detail_;
};

/// Polycyclic presentation
///
///   < g_1..g_n | g_j g_i g_j^-1 = u_ij, g_j^-1 g_i g_j = v_ij  (i < j),
///                g_i^o_i = w_i  (o_i finite) >
///
/// Slots are keyed by the 1-based pair (i, j). Omitted slots are allowed; the
/// engine treats a pair with neither u nor v given as commuting.
struct PolycyclicPresentation
{
  std::size_t n = 0;
  std::map<std::pair<std::size_t, std::size_t>, RawWord> conj_pos; ///< u_ij
  std::map<std::pair<std::size_t, std::size_t>, RawWord> conj_neg; ///< v_ij
  std::vector<std::optional<Int>> relative_order;                  ///< o_i, absent = infinite
  std::vector<std::optional<RawWord>> power_word;                  ///< w_i

  explicit PolycyclicPresentation(std::size_t generators = 0)
  : n(generators), relative_order(generators), power_word(generators)
  {}

  /// True when every relative order is infinite (Hirsch length n).
  bool is_poly_z() const;

  const RawWord *u(std::size_t i, std::size_t j) const;
  const RawWord *v(std::size_t i, std::size_t j) const;
};

/// Parses `<g1,...,gn | rel, rel, ...>` where each relation is one of
///   gj*gi = u*gj, gj^-1*gi = v*gj^-1, gj*gi*gj^-1 = u, gj^-1*gi*gj = v,
///   gi^o = w   (o > 0).
PolycyclicPresentation parse_presentation(std::string_view text);

/// Parses `1 | factor (* factor)*` with `factor := g INT (^ SINT)?`. The empty
/// string is the identity. Generators above n are rejected.
RawWord parse_word(std::string_view text, std::size_t n);

/// `g1^-1*g2^2`; the identity is `1`.
std::string format_word(const NormalWord &w);
std::string format_word(const RawWord &w);

/// Inverse of parse_presentation; relations are emitted in `gj*gi = u*gj` form.
std::string format_presentation(const PolycyclicPresentation &p);

} // namespace polyz

#endif // POLYZ_PRESENTATION_HPP
