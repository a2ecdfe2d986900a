#include "polyz/presets.hpp"

#include <stdexcept>

namespace polyz {

namespace {

AutMatrix rows2(int a, int b, int c, int d) { return AutMatrix::from_rows({{a, b}, {c, d}}); }

Tower klein() { return Tower::integers().extend(AutMatrix::from_rows({{-1}}), {NormalWord{-1}}); }

} // namespace

const std::vector<std::string> &preset_names()
{
  static const std::vector<std::string> names{"z", "g2", "zxz", "b1", "a0", "a1", "b0"};
  return names;
}

Tower preset(std::string_view name)
{
  if (name == "z")
    return Tower::integers();
  if (name == "g2")
    return klein();
  if (name == "zxz")
    return Tower::integers().extend(AutMatrix::from_rows({{1}}), {NormalWord{1}});
  if (name == "b1") // beta_1 is an involution
    return klein().extend(rows2(-1, 1, 0, 1), {NormalWord{-1, 0}, NormalWord{1, 1}});
  if (name == "a0")
    return klein().extend(rows2(1, 0, 0, -1), {NormalWord{1, 0}, NormalWord{0, -1}});
  if (name == "a1") // alpha_1^-1 = alpha_-1
    return klein().extend(rows2(1, 1, 0, -1), {NormalWord{1, 0}, NormalWord{-1, -1}});
  if (name == "b0")
    return klein().extend(rows2(-1, 0, 0, 1), {NormalWord{-1, 0}, NormalWord{0, 1}});
  throw std::invalid_argument("unknown group preset '" + std::string(name) + "'");
}

} // namespace polyz
