#include "polyz/kernels.hpp"

#include "polyz/g2.hpp"
#include "polyz/g3.hpp"

namespace polyz {

namespace {

NormalWord add(const NormalWord &x, const NormalWord &y)
{
  NormalWord r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    r[i] = x[i] + y[i];
  return r;
}

NormalWord scale(const NormalWord &x, const Int &m)
{
  NormalWord r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    r[i] = m * x[i];
  return r;
}

} // namespace

std::optional<Kernel> kernel_for(std::string_view preset)
{
  if (preset == "z" || preset == "zxz")
    return Kernel{add, scale};
  if (preset == "g2")
    return Kernel{[](const NormalWord &x, const NormalWord &y) { return g2::mul(x, y); },
                  [](const NormalWord &x, const Int &m) { return g2::pow(x, m); }};
  if (auto v = g3::parse_variant(preset))
    return Kernel{[v = *v](const NormalWord &x, const NormalWord &y) { return g3::mul(v, x, y); },
                  [v = *v](const NormalWord &x, const Int &m) { return g3::pow(v, x, m); }};
  return std::nullopt;
}

} // namespace polyz
