#pragma once

// The transcribed RCC11 composition table with extensionality marks. The
// EQ row and column follow from the identity law.
//
// Cell TPPI,ECN reads ECN where the source listing has PODZ: the converse
// law (against ECN,TPP) and both dual laws force ECN, and PODZ is
// impossible there (b TPP c' and c' NTPP a would give b NTPP a).

#include <string_view>

#include "rcc11/comp_table.hpp"

namespace rcc11 {

inline constexpr std::string_view kGoldenTableText = R"(
EQ,EQ -> EQ
EQ,TPP -> TPP
EQ,TPPI -> TPPI
EQ,NTPP -> NTPP
EQ,NTPPI -> NTPPI
EQ,PON -> PON
EQ,PODY -> PODY
EQ,PODZ -> PODZ
EQ,ECN -> ECN
EQ,ECD -> ECD
EQ,DC -> DC
TPP,EQ -> TPP
TPP,TPP -> TPP|NTPP
TPP,TPPI -> EQ|TPP|TPPI|PON*|ECN*|DC
TPP,NTPP -> NTPP
TPP,NTPPI -> TPPI*|NTPPI|PON*|ECN*|DC
TPP,PON -> TPP|NTPP|PON|ECN|DC
TPP,PODY -> TPP*|NTPP|PON*|PODY|ECN|ECD
TPP,PODZ -> TPP*|NTPP|PON*|PODY*|PODZ
TPP,ECN -> ECN|DC
TPP,ECD -> ECN
TPP,DC -> DC
TPPI,EQ -> TPPI
TPPI,TPP -> EQ|TPP|TPPI|PON*|PODY*|PODZ
TPPI,TPPI -> TPPI|NTPPI
TPPI,NTPP -> TPP*|NTPP|PON*|PODY*|PODZ
TPPI,NTPPI -> NTPPI
TPPI,PON -> TPPI|NTPPI|PON|PODY|PODZ
TPPI,PODY -> PODY|PODZ
TPPI,PODZ -> PODZ
TPPI,ECN -> TPPI*|NTPPI|PON*|PODY|ECN|ECD
TPPI,ECD -> PODY
TPPI,DC -> TPPI*|NTPPI|PON*|ECN*|DC
NTPP,EQ -> NTPP
NTPP,TPP -> NTPP
NTPP,TPPI -> TPP*|NTPP|PON*|ECN*|DC
NTPP,NTPP -> NTPP
NTPP,NTPPI -> EQ|TPP|TPPI|NTPP|NTPPI|PON|ECN|DC
NTPP,PON -> TPP|NTPP|PON|ECN|DC
NTPP,PODY -> TPP*|NTPP|PON*|ECN*|DC
NTPP,PODZ -> TPP|NTPP|PON|PODY|PODZ|ECN|ECD|DC
NTPP,ECN -> DC
NTPP,ECD -> DC
NTPP,DC -> DC
NTPPI,EQ -> NTPPI
NTPPI,TPP -> TPPI*|NTPPI|PON*|PODY*|PODZ
NTPPI,TPPI -> NTPPI
NTPPI,NTPP -> EQ|TPP|TPPI|NTPP|NTPPI|PON|PODY|PODZ
NTPPI,NTPPI -> NTPPI
NTPPI,PON -> TPPI|NTPPI|PON|PODY|PODZ
NTPPI,PODY -> PODZ
NTPPI,PODZ -> PODZ
NTPPI,ECN -> TPPI*|NTPPI|PON*|PODY*|PODZ
NTPPI,ECD -> PODZ
NTPPI,DC -> TPPI|NTPPI|PON|PODY|PODZ|ECN|ECD|DC
PON,EQ -> PON
PON,TPP -> TPP|NTPP|PON|PODY|PODZ
PON,TPPI -> TPPI|NTPPI|PON|ECN|DC
PON,NTPP -> TPP|NTPP|PON|PODY|PODZ
PON,NTPPI -> TPPI|NTPPI|PON|ECN|DC
PON,PON -> EQ|TPP|TPPI|NTPP|NTPPI|PON|PODY|PODZ|ECN|ECD|DC
PON,PODY -> TPP|NTPP|PON|PODY|PODZ
PON,PODZ -> TPP|NTPP|PON|PODY|PODZ
PON,ECN -> TPPI|NTPPI|PON|ECN|DC
PON,ECD -> PON
PON,DC -> TPPI|NTPPI|PON|ECN|DC
PODY,EQ -> PODY
PODY,TPP -> PODY|PODZ
PODY,TPPI -> TPPI*|NTPPI|PON*|PODY|ECN|ECD
PODY,NTPP -> PODZ
PODY,NTPPI -> TPPI*|NTPPI|PON*|ECN*|DC
PODY,PON -> TPPI|NTPPI|PON|PODY|PODZ
PODY,PODY -> EQ|TPP|TPPI|PON*|PODY*|PODZ
PODY,PODZ -> TPP*|NTPP|PON*|PODY*|PODZ
PODY,ECN -> TPPI|NTPPI
PODY,ECD -> TPPI
PODY,DC -> NTPPI
PODZ,EQ -> PODZ
PODZ,TPP -> PODZ
PODZ,TPPI -> TPPI*|NTPPI|PON*|PODY*|PODZ
PODZ,NTPP -> PODZ
PODZ,NTPPI -> TPPI|NTPPI|PON|PODY|PODZ|ECN|ECD|DC
PODZ,PON -> TPPI|NTPPI|PON|PODY|PODZ
PODZ,PODY -> TPPI*|NTPPI|PON*|PODY*|PODZ
PODZ,PODZ -> EQ|TPP|TPPI|NTPP|NTPPI|PON|PODY|PODZ
PODZ,ECN -> NTPPI
PODZ,ECD -> NTPPI
PODZ,DC -> NTPPI
ECN,EQ -> ECN
ECN,TPP -> TPP*|NTPP|PON*|PODY|ECN|ECD
ECN,TPPI -> ECN|DC
ECN,NTPP -> TPP*|NTPP|PON*|PODY*|PODZ
ECN,NTPPI -> DC
ECN,PON -> TPP|NTPP|PON|ECN|DC
ECN,PODY -> TPP|NTPP
ECN,PODZ -> NTPP
ECN,ECN -> EQ|TPP|TPPI|PON*|ECN*|DC
ECN,ECD -> TPP
ECN,DC -> TPPI*|NTPPI|PON*|ECN*|DC
ECD,EQ -> ECD
ECD,TPP -> PODY
ECD,TPPI -> ECN
ECD,NTPP -> PODZ
ECD,NTPPI -> DC
ECD,PON -> PON
ECD,PODY -> TPP
ECD,PODZ -> NTPP
ECD,ECN -> TPPI
ECD,ECD -> EQ
ECD,DC -> NTPPI
DC,EQ -> DC
DC,TPP -> TPP*|NTPP|PON*|ECN*|DC
DC,TPPI -> DC
DC,NTPP -> TPP|NTPP|PON|PODY|PODZ|ECN|ECD|DC
DC,NTPPI -> DC
DC,PON -> TPP|NTPP|PON|ECN|DC
DC,PODY -> NTPP
DC,PODZ -> NTPP
DC,ECN -> TPP*|NTPP|PON*|ECN*|DC
DC,ECD -> NTPP
DC,DC -> EQ|TPP|TPPI|NTPP|NTPPI|PON|ECN|DC
)";

inline const CompTable& golden_table() {
  static const CompTable table = table_from_string(std::string(kGoldenTableText));
  return table;
}

}  // namespace rcc11
