#include "vortex/chambers.hpp"

#include <algorithm>
#include <set>

namespace vortex {

void ModuliInput::validate() const {
  if (rank < 2) throw InvalidInput("rank must be >= 2, got " + std::to_string(rank));
  if (genus < 2) throw InvalidInput("genus must be >= 2, got " + std::to_string(genus));
  if (low_degree() && !allow_low_degree) {
    throw InvalidInput("degree " + std::to_string(degree) + " must exceed R(2g-2) = " +
                       std::to_string(rank * (2 * genus - 2)) + " (pass allow_low_degree to override)");
  }
}

Rational TauScale::to_tau_hat(const Rational& tau) const {
  if (scale <= Rational(0)) throw InvalidInput("tau scale must be positive");
  return tau * scale;
}

Rational TauScale::to_tau(const Rational& tau_hat) const {
  if (scale <= Rational(0)) throw InvalidInput("tau scale must be positive");
  return tau_hat / scale;
}

std::string to_string(WallKind kind) {
  switch (kind) {
    case WallKind::min: return "min";
    case WallKind::interior: return "interior";
    case WallKind::max: return "max";
  }
  return "interior";
}

std::pair<Rational, Rational> tau_line(const ModuliInput& input) {
  input.validate();
  return {Rational(input.degree, input.rank), Rational(input.degree, input.rank - 1)};
}

std::vector<Wall> critical_values(int rank, int degree) {
  if (rank < 2) throw InvalidInput("rank must be >= 2");
  const Rational lo(degree, rank);
  const Rational hi(degree, rank - 1);
  std::set<Rational> values{lo, hi};
  for (int q = 1; q <= rank - 1; ++q) {
    // p/q in [lo, hi]  <=>  ceil(q*lo) <= p <= floor(q*hi)
    const BigInt first = (lo * Rational(q)).ceil();
    const BigInt last = (hi * Rational(q)).floor();
    for (BigInt p = first; p <= last; ++p) values.insert(Rational(p, q));
  }
  std::vector<Wall> walls;
  walls.reserve(values.size());
  for (const auto& v : values) {
    WallKind kind = WallKind::interior;
    if (v == lo) kind = WallKind::min;
    if (v == hi) kind = WallKind::max;
    walls.push_back({v, kind});
  }
  return walls;
}

std::vector<Wall> critical_values(const ModuliInput& input) {
  input.validate();
  return critical_values(input.rank, input.degree);
}

std::optional<Wall> find_wall(const ModuliInput& input, const Rational& value) {
  for (auto& w : critical_values(input)) {
    if (w.value == value) return w;
  }
  return std::nullopt;
}

std::vector<Chamber> enumerate_chambers(int rank, int degree) {
  const auto walls = critical_values(rank, degree);
  std::vector<Chamber> out;
  for (std::size_t i = 0; i + 1 < walls.size(); ++i) out.push_back({walls[i].value, walls[i + 1].value});
  return out;
}

std::vector<Chamber> enumerate_chambers(const ModuliInput& input) {
  input.validate();
  return enumerate_chambers(input.rank, input.degree);
}

int dim_pairs_moduli(const ModuliInput& input) {
  input.validate();
  const int r = input.rank;
  const int dim = input.degree + (r * r - r) * (input.genus - 1);
  return input.fixed_det ? dim - input.genus : dim;
}

int dim_master(const ModuliInput& input) { return dim_pairs_moduli(input) + 1; }

Rational moment_value(const Rational& section_energy, const Rational& slope, int rank) {
  if (section_energy < Rational(0)) throw InvalidInput("section energy must be non-negative");
  if (rank < 1) throw InvalidInput("rank must be positive");
  return section_energy / Rational(rank) + slope;
}

}  // namespace vortex
