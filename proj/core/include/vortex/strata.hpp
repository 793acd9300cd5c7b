#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vortex/chambers.hpp"
#include "vortex/exactmath.hpp"

namespace vortex {

/// Numerical label (d_phi, R_phi, {R_1, ..., R_n}) of a fixed-point stratum.
///
/// The section-carrying summand has degree d_phi and rank R_phi; the other
/// summands are stable bundles of ranks R_i, all of slope equal to the wall.
/// Ranks form a multiset and are kept sorted in non-increasing order.
struct StratumSignature {
  int d_phi = 0;
  int r_phi = 0;
  std::vector<int> ranks;

  StratumSignature() = default;
  StratumSignature(int d_phi, int r_phi, std::vector<int> ranks);

  /// Degrees d_i = R_i * wall. Throws InvalidInput when one is not integral.
  std::vector<int> summand_degrees(const Rational& wall) const;
  int block_count() const { return static_cast<int>(ranks.size()); }
  std::string to_string() const;

  friend bool operator==(const StratumSignature&, const StratumSignature&) = default;
};

/// Deterministic order: by r_phi, then d_phi, then ranks (larger parts first).
bool operator<(const StratumSignature& a, const StratumSignature& b);

/// A symbolic description of a component of the fixed-point set.
struct FixedPointDescriptor {
  StratumSignature signature;
  std::optional<int> dimension;
  std::optional<IntPolynomial> poincare;
  std::string description;
};

enum class SignatureFilter {
  none,       ///< the literal numerical constraints only
  geometric,  ///< additionally d_phi >= 0 when R_phi = 1
};

/// All numerically admissible signatures at a critical value. Throws
/// InvalidInput when the wall is not one of critical_values(input).
std::vector<StratumSignature> enumerate_signatures(const ModuliInput& input, const Wall& wall,
                                                   SignatureFilter filter = SignatureFilter::geometric);

struct SignatureCheck {
  bool ok = true;
  /// Names the first failed condition; empty when ok.
  std::string diagnostic;
};

SignatureCheck validate_signature(const ModuliInput& input, const Wall& wall, const StratumSignature& sig);

/// Dimension of a two-block stratum Z(d_phi, R_phi, R_s) at an interior wall.
/// Throws Unsupported for n > 1 and InvalidInput at boundary walls.
int stratum_dimension(const ModuliInput& input, const Wall& wall, const StratumSignature& sig);

/// Codimension p_- of the unstable stratum W^-(d_phi, R_phi, R_s) in the master space.
int codim_minus(const ModuliInput& input, const Wall& wall, int r_s);
/// Codimension p_+ of the stable stratum W^+(d_phi, R_phi, R_s) in the master space.
int codim_plus(const ModuliInput& input, const Wall& wall, int r_s);

enum class LevelEnd { min, max };

/// Semistable-bundle moduli M(R, d) at the minimum and M(R-1, d) at the maximum.
FixedPointDescriptor extreme_level(const ModuliInput& input, LevelEnd end);

/// Poincare polynomial of the n-th symmetric product of a genus-g curve:
/// coefficient of x^n in (1+xt)^{2g} / ((1-x)(1-xt^2)).
IntPolynomial sym_poincare(int n, int g);
/// (1+t)^{2g}
IntPolynomial jac_poincare(int g);
/// 1 + t^2 + ... + t^{2n}
IntPolynomial proj_poincare(int n);

/// Rank-2 interior wall: Z = Sym^{d - wall} x Jacobian (the Jacobian factor
/// drops with fixed determinant).
FixedPointDescriptor fixed_point_poincare(const ModuliInput& input, const Wall& wall);

}  // namespace vortex
