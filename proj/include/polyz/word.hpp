#ifndef POLYZ_WORD_HPP
#define POLYZ_WORD_HPP

#include "polyz/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace polyz {

/// One factor g_generator^exponent of an uncollected word. Generators are 1-based.
struct Factor
{
  std::size_t generator = 1;
  Int exponent;

  friend bool operator==(const Factor &, const Factor &) = default;
};

/// Ordered product of generator powers, not necessarily in normal form.
///
/// The stored sequence is always reduced: no zero exponents and no two adjacent
/// factors on the same generator.
class RawWord
{
public:
  RawWord() = default;
  explicit RawWord(std::vector<Factor> factors);

  /// Appends g_generator^exponent, merging with the last factor when possible.
  void append(std::size_t generator, const Int &exponent);
  void append(const RawWord &other);

  const std::vector<Factor> &factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }

  /// Largest generator index used, 0 for the empty word.
  std::size_t max_generator() const;

  friend bool operator==(const RawWord &, const RawWord &) = default;

private:
  std::vector<Factor> factors_;
};

/// Exponent vector (e_1, ..., e_n) of the normal word g_1^e_1 ... g_n^e_n.
class NormalWord
{
public:
  NormalWord() = default;
  explicit NormalWord(std::size_t n) : exps_(n) {}
  explicit NormalWord(std::vector<Int> exps) : exps_(std::move(exps)) {}
  NormalWord(std::initializer_list<Int> exps) : exps_(exps) {}

  static NormalWord identity(std::size_t n) { return NormalWord(n); }
  /// g_generator^exponent inside a group with n generators (1-based generator).
  static NormalWord unit(std::size_t n, std::size_t generator, const Int &exponent = 1);

  std::size_t size() const { return exps_.size(); }
  const Int &operator[](std::size_t i) const { return exps_[i]; }
  Int &operator[](std::size_t i) { return exps_[i]; }

  std::span<const Int> exponents() const { return exps_; }
  std::vector<Int> &data() { return exps_; }
  const std::vector<Int> &data() const { return exps_; }

  bool is_identity() const;

  /// Same exponents padded with zeros (or truncated) to length n.
  NormalWord resized(std::size_t n) const;

  /// The word as a raw factor sequence g_1^e_1 ... g_n^e_n.
  RawWord to_raw() const;

  friend bool operator==(const NormalWord &, const NormalWord &) = default;

private:
  std::vector<Int> exps_;
};

} // namespace polyz

#endif // POLYZ_WORD_HPP
