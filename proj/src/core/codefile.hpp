#pragma once

#include <string>

#include "core/code_system.hpp"

namespace udc {

// Code-system file format. Plain text:
//
//   # comment
//   name T2-MO        (optional)
//   d 6
//   code 3 4 7 ...
//   code 8 9 16 ...
//
// A JSON object {"name": ..., "d": ..., "codes": [[...], ...]} with the same
// fields is accepted interchangeably (detected by a leading '{').
CodeSystem parse_code_file(const std::string& text);

std::string serialize_code_system(const CodeSystem& sys);
std::string serialize_code_system_json(const CodeSystem& sys);

} // namespace udc
