#include "polyz/word.hpp"

#include <algorithm>

namespace polyz {

RawWord::RawWord(std::vector<Factor> factors)
{
  factors_.reserve(factors.size());
  for (auto &f : factors)
    append(f.generator, f.exponent);
}

void RawWord::append(std::size_t generator, const Int &exponent)
{
  if (exponent == 0)
    return;
  if (!factors_.empty() && factors_.back().generator == generator) {
    factors_.back().exponent += exponent;
    if (factors_.back().exponent == 0)
      factors_.pop_back();
    return;
  }
  factors_.push_back({generator, exponent});
}

void RawWord::append(const RawWord &other)
{
  for (const auto &f : other.factors_)
    append(f.generator, f.exponent);
}

std::size_t RawWord::max_generator() const
{
  std::size_t m = 0;
  for (const auto &f : factors_)
    m = std::max(m, f.generator);
  return m;
}

NormalWord NormalWord::unit(std::size_t n, std::size_t generator, const Int &exponent)
{
  NormalWord w(n);
  w.exps_.at(generator - 1) = exponent;
  return w;
}

bool NormalWord::is_identity() const
{
  return std::all_of(exps_.begin(), exps_.end(), [](const Int &e) { return e == 0; });
}

NormalWord NormalWord::resized(std::size_t n) const
{
  std::vector<Int> e(n);
  for (std::size_t i = 0; i < std::min(n, exps_.size()); ++i)
    e[i] = exps_[i];
  return NormalWord(std::move(e));
}

RawWord NormalWord::to_raw() const
{
  RawWord w;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    w.append(i + 1, exps_[i]);
  return w;
}

} // namespace polyz
