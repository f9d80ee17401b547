#pragma once
// Text forms of theta quotients. Three input syntaxes are accepted:
//   colon pairs   "eta:-6 1:3 2:3 3:2 4:1 5:1"
//   comma list    "1,1,2/eta:1"        (pure numerator thetas over eta^d)
//   bracket form  "ϑ[-6; 1^3,2^3,3^2,4,5]"   (also "theta[...]")
// format_block emits the colon-pair form; shorthand emits the bracket form.
// Both printers round-trip through parse_block.

#include "tb/blocks.hpp"

#include <string>

namespace tb {

ThetaQuotient parse_block(const std::string& text);
std::string format_block(const ThetaQuotient& tq);
std::string shorthand(const ThetaQuotient& tq);

}  // namespace tb
