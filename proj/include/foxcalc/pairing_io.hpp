#pragma once

#include "foxcalc/fox_pairing.hpp"

#include <string>
#include <string_view>

namespace fox {

// Text format:
//   foxpairing v1
//   alphabet <r> <name1> ... <namer>
//   coeff <Q|Z|F2>
//   eta <name_i> <name_j> = <ring element>     (r^2 lines, row-major)
//   # metadata: <text>                         (optional, one per line)
std::string serialize_pairing(const FoxPairing& p);
FoxPairing deserialize_pairing(std::string_view text);

FoxPairing read_pairing_file(const std::string& path);
void write_pairing_file(const std::string& path, const FoxPairing& p);

}  // namespace fox
