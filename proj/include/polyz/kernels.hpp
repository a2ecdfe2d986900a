#ifndef POLYZ_KERNELS_HPP
#define POLYZ_KERNELS_HPP

#include "polyz/integer.hpp"
#include "polyz/word.hpp"

#include <functional>
#include <optional>
#include <string_view>

namespace polyz {

/// Closed-form arithmetic for one built-in preset.
struct Kernel
{
  std::function<NormalWord(const NormalWord &, const NormalWord &)> mul;
  std::function<NormalWord(const NormalWord &, const Int &)> pow;
};

/// Kernel for a preset name. z and zxz are abelian (componentwise), g2 and
/// the four 3-step groups use their closed forms.
std::optional<Kernel> kernel_for(std::string_view preset);

} // namespace polyz

#endif // POLYZ_KERNELS_HPP
