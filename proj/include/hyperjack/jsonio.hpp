#pragma once

#include <map>
#include <optional>
#include <string>

#include "hyperjack/hyperdet.hpp"
#include "hyperjack/identities.hpp"

namespace hyperjack {

// JSON conventions used across the library:
//   Rational        "p/q", or "p" when the denominator is 1
//   Partition       [3,3,1]
//   LaurentPoly     [{"exponents": [2,0], "coeff": "1"}, ...]
//   SymFunc         {"basis": "m", "terms": [{"partition": [2,1], "coeff": "3/2"}]}
//   Tensor file     {"order": 2, "dim": 2, "ring": "rational"|"symfunc",
//                    "entries": [row-major ring elements, last index fastest]}
// Reports are documented in README.md and kept byte-deterministic apart from
// the optional timing fields.

std::string to_json(const LaurentPoly& f, int indent = -1);
std::string to_json(const SymFunc& f, int indent = -1);
std::string coeff_map_to_json(const std::map<Partition, Rational>& coeffs, int indent = -1);
std::string report_to_json(const IdentityReport& rep, bool include_timings = true,
                           int indent = -1);

GridConfig grid_config_from_json(const std::string& text);
GridConfig grid_config_from_file(const std::string& path);

struct LoadedTensor {
  std::string ring;  // "rational" or "symfunc"
  std::optional<HyperTensor<Rational>> rational;
  std::optional<HyperTensor<SymFunc>> symfunc;
};

LoadedTensor tensor_from_file(const std::string& path);

}  // namespace hyperjack
