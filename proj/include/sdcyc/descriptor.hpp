#pragma once

#include <string>

#include <json.hpp>

#include "sdcyc/fqmatrix.hpp"
#include "sdcyc/gray.hpp"
#include "sdcyc/ideals.hpp"

namespace sdcyc {

using Json = nlohmann::json;

// Wire format of a code. Component indices are 1-based on the wire:
// {"n", "m", "k", "modulus": "0x..", "components": [{"j", "shape", "i", "t", "s", "omega": ["0x.."]}]}
Json label_to_json(const IdealLabel& label, unsigned m);
IdealLabel label_from_json(const Json& j, unsigned m);
Json code_to_json(const CyclicCode& code);
// Structural parse only; validate_code checks ranges against an instance.
CyclicCode code_from_json(const Json& j);
CyclicCode code_from_string(const std::string& text);

std::string modulus_to_hex(std::uint64_t modulus);
std::uint64_t modulus_from_hex(const std::string& hex);

Json factor_to_json(const Instance& inst);
// Rows as hex-packed polynomials (m bits per entry, entry c at bits [c m, (c+1) m)).
Json matrix_to_json(const FqMatrix& g, unsigned m);
std::string matrix_to_grid(const FqMatrix& g);
Json weights_to_json(const WeightDist& wd);

}  // namespace sdcyc
