#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vortex/chambers.hpp"
#include "vortex/exactmath.hpp"
#include "vortex/strata.hpp"

namespace vortex {

/// Morse data of one stratum at an interior wall. Numerical fields are empty
/// for signatures with more than one stable block.
struct StratumCodims {
  StratumSignature signature;
  std::optional<int> dim_z;
  std::optional<int> p_plus;
  std::optional<int> p_minus;
  /// Fiber of P(W+) -> Z is P^{p_minus - 1}; fiber of P(W-) -> Z is P^{p_plus - 1}.
  std::optional<int> fiber_plus;
  std::optional<int> fiber_minus;
  std::optional<bool> consistency_ok;
  std::string note;
};

struct WallReport {
  Wall wall;
  int dim_master = 0;
  std::vector<StratumCodims> strata;
  std::vector<std::string> smoothness_notes;
};

/// Throws InvalidInput at a boundary wall.
WallReport wall_report(const ModuliInput& input, const Wall& wall);

struct CodimWitness {
  Wall wall;
  int r_s = 0;
};

struct CodimBoundReport {
  bool holds = true;
  int min_p_minus = 0;
  int min_p_plus = 0;
  std::vector<CodimWitness> min_p_minus_at;
  std::vector<CodimWitness> min_p_plus_at;
  /// One line per (wall, R_s) where p+ < 2 or p- < 2.
  std::vector<std::string> violations;
};

/// Checks p+ >= 2 and p- >= 2 over every interior wall and admissible R_s.
/// Rank 2 is excluded (InvalidInput).
CodimBoundReport check_codim_bound(const ModuliInput& input);

/// P_X + P_C (t^2 + t^4 + ... + t^{2(codim-1)}).
IntPolynomial blowup_poincare(const IntPolynomial& p_x, const IntPolynomial& p_c, int codim);

/// Rank 2: P(B below the wall) - P(B above the wall) = P_Z (t^{2p-} - t^{2p+}) / (1 - t^2).
IntPolynomial wall_crossing_delta(const ModuliInput& input, const Wall& wall);

struct ChainStep {
  Chamber chamber;
  IntPolynomial poincare;
};

struct ChainDelta {
  Wall wall;
  IntPolynomial delta;
};

struct ChainReport {
  /// Top chamber first.
  std::vector<ChainStep> chambers;
  std::vector<ChainDelta> deltas;
  std::optional<IntPolynomial> bottom_moduli_poincare;
  std::vector<std::string> warnings;
};

/// Rank-2 Poincare polynomials of every chamber, descending from the top.
/// Throws InternalError if a chamber polynomial fails validation.
ChainReport chamber_chain(const ModuliInput& input);

/// Poincare polynomial of M(2,d) (or fixed determinant), extracted from the bottom chamber.
/// Throws InvalidInput with "coprimality gate" for even d.
IntPolynomial solve_bottom_moduli(const ModuliInput& input);

struct EndpointModel {
  std::string base;
  int fiber_dimension = 0;
  std::optional<int> base_dimension;
  std::optional<int> total_dimension;
  std::string description;
};

struct EndpointReport {
  EndpointModel bottom;
  EndpointModel top;
  bool coprime_gate = false;
  std::vector<std::string> notes;
  std::vector<std::string> warnings;
};

EndpointReport endpoint_descriptors(const ModuliInput& input);

}  // namespace vortex
