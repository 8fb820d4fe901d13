#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hermlat/io.hpp"

namespace support {

inline hermlat::HermLattice lat(const hermlat::Field& f, const std::string& text) {
  return hermlat::parse_lattice(f, text);
}

inline hermlat::AlgMatrix gram(const hermlat::Field& f, const std::string& text) { return lat(f, text).gram(); }

// Vectors compared as sets of flattened coordinates.
inline std::vector<hermlat::IntVector> as_set(const std::vector<hermlat::CoordVector>& xs) {
  std::vector<hermlat::IntVector> out;
  for (const auto& x : xs) out.push_back(hermlat::expand(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace support
