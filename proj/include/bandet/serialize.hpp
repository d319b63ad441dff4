#pragma once

// JSON forms used by the CLI. Integers are always decimal strings so that
// consumers with 53-bit numbers never lose precision:
//   Integer      "-42"
//   Poly         ["1", "-2", "1"]          (index = power of b; zero is [])
//   BandSpec     {"n": 4, "k": 2, "l": 1, "a": "1", "b": "0"}
//   CensusRow    {"n": 10, "per": "488592", "det": "-4", "even": "...", "odd": "..."}
//   Permutation  [1, 4, 2, 3]

#include <json.hpp>

#include "bandet/band.hpp"
#include "bandet/perm.hpp"
#include "bandet/ring.hpp"

namespace bandet {

nlohmann::json to_json(const RingElement& x);
/// Throws InvalidArgumentError on anything but a decimal string or an
/// array of decimal strings.
RingElement ring_from_json(const nlohmann::json& j);

Integer parse_integer(const std::string& text);

nlohmann::json to_json(const BandSpec& spec);
BandSpec band_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CensusRow& row);
CensusRow census_row_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Permutation& perm);

}  // namespace bandet
