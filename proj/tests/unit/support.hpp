#pragma once

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "alcove/alcove.hpp"
#include "oracles.hpp"

namespace test {

inline alcove::ApartmentPoint pt(const std::string& csv) { return alcove::ApartmentPoint::parse(csv); }

inline alcove::RootDatum datum(const std::string& name) {
  return alcove::build_root_datum(alcove::RootSystemType::parse(name));
}

inline oracle::Coords coords(const alcove::ApartmentPoint& p) { return p.coords(); }
inline alcove::ApartmentPoint point(const oracle::Coords& c) { return alcove::ApartmentPoint(c); }

/// Uniform random point of (1/den) Z^d in [-span, span]^d.
inline oracle::Coords random_coords(std::mt19937_64& rng, int d, long den, long span) {
  std::uniform_int_distribution<long> num(-span * den, span * den);
  oracle::Coords out(d);
  for (auto& c : out) {
    c = oracle::Q(num(rng), den);
    c.canonicalize();
  }
  return out;
}

inline const std::vector<std::string>& small_types() {
  static const std::vector<std::string> t{"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"};
  return t;
}

}  // namespace test
