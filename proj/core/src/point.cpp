#include "alcove/point.hpp"

#include <sstream>

#include "alcove/errors.hpp"

namespace alcove {

ApartmentPoint::ApartmentPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  for (auto& c : coords_) c.canonicalize();
}

ApartmentPoint ApartmentPoint::origin(std::size_t rank) { return ApartmentPoint(std::vector<Rational>(rank, Rational(0))); }

ApartmentPoint ApartmentPoint::parse(const std::vector<std::string>& coords) {
  std::vector<Rational> values;
  values.reserve(coords.size());
  for (const auto& c : coords) values.push_back(parse_rational(c));
  return ApartmentPoint(std::move(values));
}

ApartmentPoint ApartmentPoint::parse(const std::string& csv) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    parts.push_back(b == std::string::npos ? std::string{} : item.substr(b, e - b + 1));
  }
  if (parts.empty()) throw ValidationError(ValidationCode::kParse, "empty coordinate list");
  return parse(parts);
}

bool ApartmentPoint::is_origin() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

std::vector<std::string> ApartmentPoint::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(alcove::to_string(c));
  return out;
}

std::string ApartmentPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += alcove::to_string(coords_[i]);
  }
  return out + ")";
}

std::strong_ordering operator<=>(const ApartmentPoint& a, const ApartmentPoint& b) {
  const std::size_t n = std::min(a.coords_.size(), b.coords_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a.coords_[i], b.coords_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.coords_.size() <=> b.coords_.size();
}

}  // namespace alcove
