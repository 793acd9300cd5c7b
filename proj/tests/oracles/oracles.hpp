#pragma once

// Independent reference computations used only by the tests. Everything here
// works on plain 64-bit integers and avoids the library's own arithmetic.

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Poly = std::vector<std::int64_t>;  // coefficient of t^i at index i
using Frac = std::pair<std::int64_t, std::int64_t>;  // reduced p/q, q > 0

Poly trim(Poly p);
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
std::int64_t eval(const Poly& p, std::int64_t t);

/// Walls by brute-force scan with cross-multiplied comparisons.
std::vector<Frac> walls(int rank, int degree);

struct Sig {
  int d_phi;
  int r_phi;
  std::vector<int> ranks;  // non-increasing
  bool operator==(const Sig&) const = default;
};

enum class End { min, interior, max };

/// Exhaustive search over a box of (d_phi, R_phi, partition) checked
/// against the admissibility constraints in integer form.
std::vector<Sig> signatures(int rank, int degree, Frac wall, End kind, bool geometric);

/// Coefficient of x^n in (1+xt)^{2g} / ((1-x)(1-x t^2)) via truncated bivariate series.
Poly sym(int n, int g);

/// Rank-2 odd-degree Poincare polynomial from the Harder-Narasimhan recursion,
/// evaluated with truncated power series. fixed_det removes the Jacobian factor.
Poly harder_narasimhan_rank2(int degree, int genus, bool fixed_det);

/// Blow-up on both sides of the rank-2 flip diamond: returns P(below) - P(above)
/// for a center with Poincare polynomial pz and codimensions p_minus, p_plus.
Poly flip_delta(const Poly& pz, int p_minus, int p_plus);

}  // namespace oracle
