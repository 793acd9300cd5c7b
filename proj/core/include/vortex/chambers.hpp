#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vortex/exactmath.hpp"

namespace vortex {

/// Problem instance: rank R, degree d, genus g of the underlying bundle.
///
/// The standing assumptions are R >= 2, g >= 2 and d > R(2g-2). The last one
/// can be waived with allow_low_degree; reports then carry a warning and the
/// Riemann-Roch based anchors refuse to run.
struct ModuliInput {
  int rank = 2;
  int degree = 0;
  int genus = 2;
  bool fixed_det = false;
  bool allow_low_degree = false;

  /// Throws InvalidInput.
  void validate() const;
  /// d <= R(2g-2), i.e. outside the standing degree assumption.
  bool low_degree() const { return degree <= rank * (2 * genus - 2); }

  friend bool operator==(const ModuliInput&, const ModuliInput&) = default;
};

/// Converts between the raw parameter tau and the normalized tau_hat = tau * scale,
/// where scale = Vol(Sigma) / 4pi. Every other interface speaks tau_hat.
struct TauScale {
  Rational scale{1};

  Rational to_tau_hat(const Rational& tau) const;
  Rational to_tau(const Rational& tau_hat) const;
};

enum class WallKind { min, interior, max };

std::string to_string(WallKind kind);

/// A critical value of the moment map.
struct Wall {
  Rational value;
  WallKind kind = WallKind::interior;

  friend bool operator==(const Wall&, const Wall&) = default;
};

/// Open interval between two consecutive walls.
struct Chamber {
  Rational lower;
  Rational upper;

  bool contains(const Rational& tau_hat) const { return lower < tau_hat && tau_hat < upper; }
  Rational midpoint() const { return (lower + upper) / Rational(2); }

  friend bool operator==(const Chamber&, const Chamber&) = default;
};

/// The closed range [d/R, d/(R-1)] of the moment map.
std::pair<Rational, Rational> tau_line(const ModuliInput& input);

/// Every p/q in [d/R, d/(R-1)] with 1 <= q <= R-1, plus both endpoints, sorted.
std::vector<Wall> critical_values(const ModuliInput& input);
/// Same set computed from rank and degree alone (no genus or degree assumption).
std::vector<Wall> critical_values(int rank, int degree);

/// Looks up a value among critical_values(input).
std::optional<Wall> find_wall(const ModuliInput& input, const Rational& value);

std::vector<Chamber> enumerate_chambers(const ModuliInput& input);
std::vector<Chamber> enumerate_chambers(int rank, int degree);

/// Complex dimension of the moduli of tau-stable pairs for generic tau:
/// d + (R^2 - R)(g - 1), less g with fixed determinant.
int dim_pairs_moduli(const ModuliInput& input);

/// Complex dimension of the master space: one more than dim_pairs_moduli.
int dim_master(const ModuliInput& input);

/// Moment map level section_energy/R + slope, with section_energy the
/// normalized |phi|^2/4pi. Throws InvalidInput for negative energy.
Rational moment_value(const Rational& section_energy, const Rational& slope, int rank);

}  // namespace vortex
