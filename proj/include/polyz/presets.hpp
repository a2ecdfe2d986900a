#ifndef POLYZ_PRESETS_HPP
#define POLYZ_PRESETS_HPP

#include "polyz/engine.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace polyz {

/// z, g2, zxz, b1, a0, a1, b0.
const std::vector<std::string> &preset_names();

/// Built-in towers:
///   z    Z
///   g2   <g1,g2 | g2 g1 = g1^-1 g2>           (phi_1 = [-1])
///   zxz  Z x Z                                 (phi_1 = [1])
///   b1   g2 x| Z with phi_2 = [[-1,1],[0,1]]
///   a0   g2 x| Z with phi_2 = [[1,0],[0,-1]]
///   a1   g2 x| Z with phi_2 = [[1,1],[0,-1]]
///   b0   g2 x| Z with phi_2 = [[-1,0],[0,1]]
/// Throws std::invalid_argument for unknown names.
Tower preset(std::string_view name);

} // namespace polyz

#endif // POLYZ_PRESETS_HPP
