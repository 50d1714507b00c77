#pragma once

#include "csurg/diagram.hpp"

#include <string_view>

namespace csurg::bundled {

/// tb = -1 unknot L beside two Legendrian surgeries; tb(L) = -3 after them.
/// Identical to data/figure1.json.
std::string_view figure1_json();
/// Contact (+1) surgery on the standard tb = -1 unknot "U" (tight S1 x S2).
/// Identical to data/s1xs2.json.
std::string_view s1xs2_json();

SurgeryDiagram figure1();
SurgeryDiagram s1xs2();

}  // namespace csurg::bundled
