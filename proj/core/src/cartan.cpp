#include "alcove/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

#include "alcove/errors.hpp"

namespace alcove {

namespace {

bool rank_allowed(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B:
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

std::string type_name(Family family, int rank) { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

// Bourbaki Cartan matrix, entry (i, j) = <alpha_i, alpha_j^vee>, 0-based.
std::vector<int> make_cartan(Family family, int n) {
  std::vector<int> a(static_cast<std::size_t>(n * n), 0);
  auto at = [&](int i, int j) -> int& { return a[static_cast<std::size_t>(i * n + j)]; };
  auto link = [&](int i, int j) { at(i, j) = at(j, i) = -1; };
  for (int i = 0; i < n; ++i) at(i, i) = 2;
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      at(n - 2, n - 1) = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      at(n - 1, n - 2) = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      link(0, 2);
      link(2, 3);
      link(1, 3);
      for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      at(1, 2) = -2;  // alpha_1, alpha_2 long
      break;
    case Family::G:
      link(0, 1);
      at(1, 0) = -3;  // alpha_1 short
      break;
  }
  return a;
}

}  // namespace

RootSystemType::RootSystemType(Family family, int rank) : family_(family), rank_(rank) {
  if (!rank_allowed(family, rank)) {
    std::string msg = "invalid root system type " + type_name(family, rank);
    if (family == Family::D && rank == 3) msg += " (use A3)";
    throw ValidationError(ValidationCode::kInvalidType, msg);
  }
}

RootSystemType RootSystemType::parse(std::string_view name) {
  if (name.size() < 2) throw ValidationError(ValidationCode::kInvalidType, "invalid root system type '" + std::string(name) + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(name.front())));
  if (std::string_view("ABCDEFG").find(f) == std::string_view::npos) {
    throw ValidationError(ValidationCode::kInvalidType, "unknown family in '" + std::string(name) + "'");
  }
  int rank = 0;
  const auto digits = name.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ValidationError(ValidationCode::kInvalidType, "invalid rank in '" + std::string(name) + "'");
  }
  return RootSystemType(static_cast<Family>(f), rank);
}

std::string RootSystemType::name() const { return type_name(family_, rank_); }

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

bool Root::is_positive() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; });
}

Root Root::operator-() const {
  Root out{coeffs};
  for (auto& c : out.coeffs) c = -c;
  return out;
}

std::string Root::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coeffs[i]);
  }
  return out + "]";
}

std::vector<std::vector<int>> RootDatum::cartan_matrix() const {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(rank()), std::vector<int>(static_cast<std::size_t>(rank())));
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cartan(i, j);
  }
  return m;
}

std::optional<std::size_t> RootDatum::root_index(const std::vector<int>& coeffs) const {
  const auto it = index_.find(coeffs);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Rational RootDatum::coroot_pairing(const Root& a, const Root& b) const {
  const auto n = static_cast<std::size_t>(rank());
  auto form = [&](const Root& x, const Root& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x.coeffs[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y.coeffs[j] != 0) s += form_[i * n + j] * x.coeffs[i] * y.coeffs[j];
      }
    }
    return s;
  };
  Rational out = 2 * form(a, b) / form(b, b);
  out.canonicalize();
  return out;
}

RootDatum build_root_datum(const RootSystemType& type) {
  RootDatum datum(type);
  const int n = type.rank();
  const auto un = static_cast<std::size_t>(n);
  datum.cartan_ = make_cartan(type.family(), n);

  // Squared lengths from A_ij l_j = A_ji l_i along the (connected) Dynkin diagram.
  std::vector<Rational> len(un, Rational(0));
  len[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j || datum.cartan(i, j) == 0) continue;
        if (len[static_cast<std::size_t>(i)] == 0 && len[static_cast<std::size_t>(j)] != 0) {
          len[static_cast<std::size_t>(i)] = Rational(datum.cartan(i, j)) * len[static_cast<std::size_t>(j)] / datum.cartan(j, i);
          changed = true;
        }
      }
    }
  }
  const Rational shortest = *std::min_element(len.begin(), len.end());
  datum.form_.resize(un * un);
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j) {
      datum.form_[i * un + j] = Rational(datum.cartan(static_cast<int>(i), static_cast<int>(j))) * (len[j] * 2 / shortest) / 2;
      datum.form_[i * un + j].canonicalize();
    }
  }

  // Closure under root strings: beta + alpha_i is a root iff q = p - <beta, alpha_i^vee> > 0,
  // where p is the length of the downward alpha_i-string through beta.
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (std::size_t i = 0; i < un; ++i) {
    std::vector<int> e(un, 0);
    e[i] = 1;
    known.insert(e);
    layer.push_back(e);
  }
  std::vector<std::vector<int>> positives = layer;
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        int pairing = 0;
        for (int k = 0; k < n; ++k) pairing += beta[static_cast<std::size_t>(k)] * datum.cartan(k, i);
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[static_cast<std::size_t>(i)] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          std::vector<int> up = beta;
          up[static_cast<std::size_t>(i)] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) known.insert(r);
    positives.insert(positives.end(), layer.begin(), layer.end());
  }
  std::vector<Root> pos;
  pos.reserve(positives.size());
  for (auto& c : positives) pos.push_back(Root{std::move(c)});
  std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
    const int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coeffs < b.coeffs;
  });

  datum.num_positive_ = pos.size();
  datum.roots_ = pos;
  for (const auto& r : pos) datum.roots_.push_back(-r);
  for (std::size_t k = 0; k < datum.roots_.size(); ++k) datum.index_.emplace(datum.roots_[k].coeffs, k);

  datum.highest_ = pos.back().coeffs;
  datum.two_rho_.assign(un, 0);
  for (const auto& r : pos) {
    for (std::size_t i = 0; i < un; ++i) datum.two_rho_[i] += r.coeffs[i];
  }
  const Root& theta = pos.back();
  datum.highest_pairing_.resize(un);
  for (std::size_t j = 0; j < un; ++j) {
    std::vector<int> e(un, 0);
    e[j] = 1;
    const Rational p = datum.coroot_pairing(Root{e}, theta);
    datum.highest_pairing_[j] = static_cast<int>(to_long(floor(p)));
  }
  std::set<int> dens{1};
  for (int c : datum.highest_) {
    dens.insert(c);
    datum.marks_lcm_ = std::lcm(datum.marks_lcm_, c);
  }
  datum.denominators_.assign(dens.begin(), dens.end());
  return datum;
}

Rational eval_root(const RootDatum& datum, const Root& root, const ApartmentPoint& point) {
  const auto n = static_cast<std::size_t>(datum.rank());
  if (root.coeffs.size() != n || point.dim() != n) {
    throw ValidationError(ValidationCode::kDimensionMismatch,
                          "rank " + std::to_string(n) + " root evaluated at a point of dimension " + std::to_string(point.dim()));
  }
  Rational s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (root.coeffs[i] != 0) s += root.coeffs[i] * point[i];
  }
  return s;
}

std::vector<int> weyl_degrees(const RootDatum& datum) {
  std::map<int, int> per_height;
  for (const auto& r : datum.positive_roots()) ++per_height[r.height()];
  // per_height is a partition (nonincreasing in height); its dual gives the exponents.
  std::vector<int> exponents;
  for (int j = 1;; ++j) {
    int m = 0;
    for (const auto& [h, count] : per_height) {
      if (count >= j) ++m;
    }
    if (m == 0) break;
    exponents.push_back(m);
  }
  std::vector<int> degrees;
  for (int e : exponents) degrees.push_back(e + 1);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::vector<RootSystemType> all_types_up_to_rank(int max_classical_rank, bool include_exceptional) {
  std::vector<RootSystemType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int r = 1; r <= max_classical_rank; ++r) {
      if (rank_allowed(f, r)) out.emplace_back(f, r);
    }
  }
  if (include_exceptional) {
    for (int r : {6, 7, 8}) out.emplace_back(Family::E, r);
    out.emplace_back(Family::F, 4);
    out.emplace_back(Family::G, 2);
  }
  return out;
}

}  // namespace alcove
