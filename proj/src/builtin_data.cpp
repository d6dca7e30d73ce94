#include "hepticheck/builtin_data.hpp"

namespace hepticheck::builtin {

std::string_view syzygy_file() {
  static constexpr std::string_view text = R"DATA(# Four syzygies of degrees (5,4,4,3); coefficients c_j of t^{deg-j} u^j.
# The fourth form of the last row is printed ambiguously, so both readings
# ship as named variants.
variant as-printed
row 5
g 1 0 0 0 0 0
g 0 1 0 0 0 0
g 0 0 1 -1 0 0
g 0 0 0 0 1 0
g 0 0 0 0 0 1
row 4
g 0 0 0 0 1
g 0 0 0 1 0
g 0 0 1 0 0
g 0 1 0 0 0
g 1 0 0 0 0
row 4
g 0 0 0 1 0
g -1 0 0 0 1
g 0 1 0 0 0
g 1 0 0 0 0
g 0 0 0 0 1
row 3
g 1 0 0 0
g 0 1 0 0
g 0 0 1 0
g 2 1 1 0
g 1 0 0 -1
variant u3-corrected
row 5
g 1 0 0 0 0 0
g 0 1 0 0 0 0
g 0 0 1 -1 0 0
g 0 0 0 0 1 0
g 0 0 0 0 0 1
row 4
g 0 0 0 0 1
g 0 0 0 1 0
g 0 0 1 0 0
g 0 1 0 0 0
g 1 0 0 0 0
row 4
g 0 0 0 1 0
g -1 0 0 0 1
g 0 1 0 0 0
g 1 0 0 0 0
g 0 0 0 0 1
row 3
g 1 0 0 0
g 0 1 0 0
g 0 0 1 0
g 1 1 1 1
g 1 0 0 -1
)DATA";
  return text;
}

std::string_view printed_curve_file() {
  static constexpr std::string_view text =
      R"DATA(# Printed solution vectors a_{i,0..16} (coefficient of t^{16-j} u^j).
0 2024965316 -2939521792 5775517930 -3553226765 -1878022821 -4727434224 421222439 -6942771445 167619124 -413542814 -3988180306 3858123180 -1625065825 1265968623 0 0
-2024965316 1469760896 -1279196964 657977093 3046492064 -1071413358 3131314971 657977093 -161442087 -2480661437 1094059027 -4232900355 2462097431 607991530 906871421 1265968623 0
1469760896 -3026560070 1893654918 -3324744957 -1298225797 -2145324486 -1485998803 963954130 1350408778 -1398695708 8068973833 1146259438 6291363246 1465865564 -2841048885 -547774219 -2531937246
-2024965316 0 1747363106 -1235677825 2321306389 -328391981 2250079387 1735063288 -166127471 1710107151 -4967945152 2909685059 -3065914682 -738048656 1326185934 -1625065825 1265968623
4049930632 2024965316 -1469760896 3304162280 -2127737989 257670216 3908162477 -8926764895 4375575638 -2051118809 1008941202 6106860508 -1555226010 657977093 -906871421 -1265968623 0
)DATA";
  return text;
}

std::string_view singularity_catalog_file() {
  static constexpr std::string_view text =
      R"DATA(# Singularity catalog: record NAME expected_delta num_branches
# branch lines give one coordinate series per '|', terms as exp:coeff.
record node 1 2
branch 1:1 | 0
branch 0 | 1:1

record cusp 1 1
branch 2:1 | 3:1

record space-cusp-t3t4t5 2 1
branch 3:1 | 4:1 | 5:1

record ramphoid-t2t5 2 1
branch 2:1 | 5:1

record tacnode 2 2
branch 1:1 | 0
branch 1:1 | 2:1

record cusp-plus-line-space 2 2
branch 2:1 | 3:1 | 0
branch 0 | 0 | 1:1

record spatial-triple-point 2 3
branch 1:1 | 0 | 0
branch 0 | 1:1 | 0
branch 0 | 0 | 1:1

record monomial-t4t5t6t7 3 1
branch 4:1 | 5:1 | 6:1 | 7:1

record monomial-t3t5 3 1
branch 3:1 | 5:1

record cusp-plus-line-plane 3 2
branch 2:1 | 3:1
branch 0 | 1:1

record inflectional-tangency 3 2
branch 1:1 | 3:1
branch 1:1 | 0

record t3t4t5-plus-line 3 2
branch 3:1 | 4:1 | 5:1 | 0
branch 0 | 0 | 0 | 1:1

record t2t5-plus-line 3 2
branch 2:1 | 5:1 | 0
branch 0 | 0 | 1:1

record planar-triple-point 3 3
branch 1:1 | 0
branch 0 | 1:1
branch 1:1 | 1:1

record spatial-triple-shared-tangent 3 3
branch 1:1 | 0 | 0
branch 0 | 0 | 1:1
branch 1:1 | 2:1 | 0

record cusp-plus-two-lines 3 3
branch 2:1 | 3:1 | 0 | 0
branch 0 | 0 | 1:1 | 0
branch 0 | 0 | 0 | 1:1

record spatial-quadruple-point 3 4
branch 1:1 | 0 | 0 | 0
branch 0 | 1:1 | 0 | 0
branch 0 | 0 | 1:1 | 0
branch 0 | 0 | 0 | 1:1
)DATA";
  return text;
}

} // namespace hepticheck::builtin
