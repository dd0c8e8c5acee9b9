#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "alcove/rational.hpp"

namespace alcove {

/// A point x of the apartment, stored by its simple-root values t_i = alpha_i(x).
/// Equivalently, coordinates in the basis of fundamental coweights.
class ApartmentPoint {
 public:
  ApartmentPoint() = default;
  explicit ApartmentPoint(std::vector<Rational> coords);

  static ApartmentPoint origin(std::size_t rank);
  /// Parses fraction strings, one per coordinate.
  static ApartmentPoint parse(const std::vector<std::string>& coords);
  /// Parses a comma-separated list such as "1/2,0,3".
  static ApartmentPoint parse(const std::string& csv);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_origin() const;
  std::vector<std::string> to_strings() const;
  std::string to_string() const;

  friend bool operator==(const ApartmentPoint& a, const ApartmentPoint& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const ApartmentPoint& a, const ApartmentPoint& b);

 private:
  std::vector<Rational> coords_;
};

}  // namespace alcove
