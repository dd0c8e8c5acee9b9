#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alcove/point.hpp"
#include "alcove/rational.hpp"

namespace alcove {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// An irreducible reduced root system type, e.g. E8. Construction validates the rank.
class RootSystemType {
 public:
  /// Throws ValidationError(kInvalidType) for combinations such as B1, D3, E5, F3.
  RootSystemType(Family family, int rank);

  /// Accepts "G2", "e8", "A12".
  static RootSystemType parse(std::string_view name);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;

 private:
  Family family_;
  int rank_;
};

/// Coordinates of a root in the simple-root basis.
struct Root {
  std::vector<int> coeffs;

  int height() const;
  bool is_positive() const;
  Root operator-() const;
  std::string to_string() const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// Immutable combinatorial data of one irreducible root system, Bourbaki numbering.
///
/// Roots are indexed so that positive root k sits at index k of roots() and its
/// negative at index k + |positive_roots()|. Positive roots are ordered by height,
/// then lexicographically on coefficients.
class RootDatum {
 public:
  const RootSystemType& type() const { return type_; }
  int rank() const { return type_.rank(); }

  /// <alpha_i, alpha_j^vee> for 0-based i, j.
  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank() + j)]; }
  std::vector<std::vector<int>> cartan_matrix() const;

  std::span<const Root> positive_roots() const { return {roots_.data(), num_positive_}; }
  std::span<const Root> roots() const { return roots_; }
  std::size_t num_positive_roots() const { return num_positive_; }

  /// Coefficients c of the highest root alpha_0.
  const std::vector<int>& highest_root_coeffs() const { return highest_; }
  /// Coefficients c' of 2 rho, the sum of the positive roots.
  const std::vector<int>& two_rho_coeffs() const { return two_rho_; }
  /// <alpha_j, alpha_0^vee>; the affine reflection in the wall alpha_0 = 1 uses these.
  const std::vector<int>& highest_coroot_pairing() const { return highest_pairing_; }
  /// lcm of the marks c_i; every vertex lies in (1/lcm) Z^d.
  int marks_lcm() const { return marks_lcm_; }
  /// Sorted distinct denominators {1, c_1, ..., c_d} of vertex coordinates.
  const std::vector<int>& vertex_denominators() const { return denominators_; }

  std::optional<std::size_t> root_index(const std::vector<int>& coeffs) const;
  /// <a, b^vee> computed from the invariant form.
  Rational coroot_pairing(const Root& a, const Root& b) const;

 private:
  friend RootDatum build_root_datum(const RootSystemType& type);
  explicit RootDatum(RootSystemType type) : type_(type) {}

  RootSystemType type_;
  std::vector<int> cartan_;
  std::vector<Rational> form_;  // (alpha_i, alpha_j), short roots normalized to length^2 = 2
  std::vector<Root> roots_;
  std::size_t num_positive_ = 0;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<int> highest_;
  std::vector<int> two_rho_;
  std::vector<int> highest_pairing_;
  std::vector<int> denominators_;
  int marks_lcm_ = 1;
};

/// Builds the datum by closing the simple roots under root strings.
RootDatum build_root_datum(const RootSystemType& type);

/// Sum_i coeffs_i * t_i. Throws ValidationError(kDimensionMismatch).
Rational eval_root(const RootDatum& datum, const Root& root, const ApartmentPoint& point);

/// Degrees of the Weyl group, ascending, from the dual partition of the root heights.
std::vector<int> weyl_degrees(const RootDatum& datum);

/// Every type with the given family and rank range that passes validation.
std::vector<RootSystemType> all_types_up_to_rank(int max_classical_rank, bool include_exceptional = true);

}  // namespace alcove
