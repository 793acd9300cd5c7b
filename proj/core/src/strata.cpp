#include "vortex/strata.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace vortex {

StratumSignature::StratumSignature(int d_phi_, int r_phi_, std::vector<int> ranks_)
    : d_phi(d_phi_), r_phi(r_phi_), ranks(std::move(ranks_)) {
  std::sort(ranks.begin(), ranks.end(), std::greater<>());
}

std::vector<int> StratumSignature::summand_degrees(const Rational& wall) const {
  std::vector<int> out;
  out.reserve(ranks.size());
  for (int r : ranks) {
    const Rational di = wall * Rational(r);
    if (!di.is_integer()) {
      throw InvalidInput("summand of rank " + std::to_string(r) + " has non-integral degree " + di.to_string());
    }
    out.push_back(di.to_int());
  }
  return out;
}

std::string StratumSignature::to_string() const {
  std::ostringstream os;
  os << "(" << d_phi << "," << r_phi << ",{";
  for (std::size_t i = 0; i < ranks.size(); ++i) os << (i ? "," : "") << ranks[i];
  os << "})";
  return os.str();
}

bool operator<(const StratumSignature& a, const StratumSignature& b) {
  if (a.r_phi != b.r_phi) return a.r_phi < b.r_phi;
  if (a.d_phi != b.d_phi) return a.d_phi < b.d_phi;
  return std::lexicographical_compare(a.ranks.begin(), a.ranks.end(), b.ranks.begin(), b.ranks.end(),
                                      std::greater<>());
}

namespace {

// Partitions of total into parts divisible by step, parts non-increasing.
void partitions_into_multiples(int total, int step, int max_part, std::vector<int>& current,
                               std::vector<std::vector<int>>& out) {
  if (total == 0) {
    if (!current.empty()) out.push_back(current);
    return;
  }
  for (int part = std::min(total, max_part); part >= step; --part) {
    if (part % step != 0) continue;
    current.push_back(part);
    partitions_into_multiples(total - part, step, part, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<int>> partitions_into_multiples(int total, int step) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  partitions_into_multiples(total, step, total, current, out);
  return out;
}

Wall require_critical(const ModuliInput& input, const Wall& wall) {
  auto found = find_wall(input, wall.value);
  if (!found) throw InvalidInput(wall.value.to_string() + " is not a critical value");
  return *found;
}

int wall_denominator(const Rational& v) { return static_cast<int>(v.denominator()); }

}  // namespace

std::vector<StratumSignature> enumerate_signatures(const ModuliInput& input, const Wall& wall_in,
                                                   SignatureFilter filter) {
  const Wall wall = require_critical(input, wall_in);
  const int R = input.rank;
  const int q = wall_denominator(wall.value);
  std::vector<StratumSignature> out;

  switch (wall.kind) {
    case WallKind::min:
      for (auto& parts : partitions_into_multiples(R, q)) out.emplace_back(0, 0, parts);
      break;
    case WallKind::max:
      for (auto& parts : partitions_into_multiples(R - 1, q)) out.emplace_back(0, 1, parts);
      break;
    case WallKind::interior:
      for (int r_phi = 1; r_phi <= R - 1; ++r_phi) {
        const Rational d_phi = Rational(input.degree) - wall.value * Rational(R - r_phi);
        if (!d_phi.is_integer()) continue;
        const Rational phi_slope = d_phi / Rational(r_phi);
        if (!(phi_slope < wall.value)) continue;
        if (r_phi >= 2 && !(wall.value < d_phi / Rational(r_phi - 1))) continue;
        if (filter == SignatureFilter::geometric && r_phi == 1 && d_phi < Rational(0)) continue;
        for (auto& parts : partitions_into_multiples(R - r_phi, q)) out.emplace_back(d_phi.to_int(), r_phi, parts);
      }
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

SignatureCheck validate_signature(const ModuliInput& input, const Wall& wall_in, const StratumSignature& sig) {
  auto fail = [](std::string msg) { return SignatureCheck{false, std::move(msg)}; };
  const auto found = find_wall(input, wall_in.value);
  if (!found) return fail("wall " + wall_in.value.to_string() + " is not a critical value");
  const Wall wall = *found;
  const int R = input.rank;
  const Rational& tau = wall.value;

  if (sig.ranks.empty() || std::any_of(sig.ranks.begin(), sig.ranks.end(), [](int r) { return r <= 0; })) {
    return fail("(ii): ranks must be a non-empty list of positive integers");
  }
  if (wall.kind == WallKind::min && (sig.d_phi != 0 || sig.r_phi != 0)) {
    return fail("(a): at the minimum wall d_phi = R_phi = 0");
  }
  if (wall.kind == WallKind::max && (sig.d_phi != 0 || sig.r_phi != 1)) {
    return fail("(b): at the maximum wall d_phi = 0 and R_phi = 1");
  }
  if (wall.kind == WallKind::interior && (sig.r_phi < 1 || sig.r_phi > R - 1)) {
    return fail("(ii): R_phi = " + std::to_string(sig.r_phi) + " outside [1, R-1]");
  }

  // (i)
  const Rational quotient_slope(BigInt(input.degree - sig.d_phi), BigInt(R - sig.r_phi));
  if (quotient_slope != tau) {
    return fail("(i): (d-d_phi)/(R-R_phi) = " + quotient_slope.to_string() + " != " + tau.to_string());
  }
  for (int r : sig.ranks) {
    if (!(tau * Rational(r)).is_integer()) {
      return fail("(i): d_i = " + std::to_string(r) + "*" + tau.to_string() + " is not an integer");
    }
  }
  // (ii)
  const int total = std::accumulate(sig.ranks.begin(), sig.ranks.end(), 0);
  if (total != R - sig.r_phi) {
    return fail("(ii): sum of R_i = " + std::to_string(total) + " != R-R_phi = " + std::to_string(R - sig.r_phi));
  }
  // (iii)
  if (sig.r_phi >= 1) {
    const Rational phi_slope(BigInt(sig.d_phi), BigInt(sig.r_phi));
    if (!(phi_slope < tau)) {
      return fail("(iii): d_phi/R_phi = " + phi_slope.to_string() + " is not < " + tau.to_string());
    }
    if (sig.r_phi >= 2) {
      const Rational upper(BigInt(sig.d_phi), BigInt(sig.r_phi - 1));
      if (!(tau < upper)) {
        return fail("(iii): " + tau.to_string() + " is not < d_phi/(R_phi-1) = " + upper.to_string());
      }
    }
  }
  if (sig.r_phi == 1 && sig.d_phi < 0) {
    return fail("geometric filter: a line bundle with a nonzero section has degree >= 0, got d_phi = " +
                std::to_string(sig.d_phi));
  }
  return {};
}

int stratum_dimension(const ModuliInput& input, const Wall& wall_in, const StratumSignature& sig) {
  const Wall wall = require_critical(input, wall_in);
  if (wall.kind != WallKind::interior) {
    throw InvalidInput("stratum_dimension needs an interior wall; use extreme_level at the ends");
  }
  if (sig.block_count() != 1) {
    throw Unsupported("n-block dimension formula not available (n = " + std::to_string(sig.block_count()) + ")");
  }
  if (auto check = validate_signature(input, wall, sig); !check.ok) throw InvalidInput(check.diagnostic);

  const int R = input.rank;
  const int g = input.genus;
  const int rs = sig.ranks.front();
  const Rational dim = Rational(input.degree) - wall.value * Rational(rs) + Rational(1) +
                       Rational((R - rs - 1) * (R - rs) * (g - 1)) + Rational(rs * rs * (g - 1));
  const int value = dim.to_int();
  return input.fixed_det ? value - g : value;
}

namespace {

void check_codim_args(const ModuliInput& input, const Wall& wall_in, int r_s) {
  const Wall wall = require_critical(input, wall_in);
  if (wall.kind != WallKind::interior) throw InvalidInput("codimensions are defined at interior walls only");
  if (r_s < 1 || r_s > input.rank - 1) {
    throw InvalidInput("R_s = " + std::to_string(r_s) + " outside [1, R-1]");
  }
}

int require_integral(const Rational& v) {
  if (!v.is_integer()) throw InvalidInput("signature/wall mismatch: codimension " + v.to_string() + " not integral");
  return v.to_int();
}

}  // namespace

int codim_minus(const ModuliInput& input, const Wall& wall, int r_s) {
  check_codim_args(input, wall, r_s);
  const int R = input.rank;
  const Rational v = (Rational(input.degree) - wall.value * Rational(R - 1)) * Rational(r_s) +
                     Rational(r_s * (R - r_s - 1) * (input.genus - 1));
  return require_integral(v);
}

int codim_plus(const ModuliInput& input, const Wall& wall, int r_s) {
  check_codim_args(input, wall, r_s);
  const int R = input.rank;
  const Rational v = (Rational(R) * wall.value - Rational(input.degree)) * Rational(r_s) +
                     Rational(r_s * (R - r_s) * (input.genus - 1));
  return require_integral(v);
}

FixedPointDescriptor extreme_level(const ModuliInput& input, LevelEnd end) {
  input.validate();
  const int r = end == LevelEnd::min ? input.rank : input.rank - 1;
  const int g = input.genus;
  FixedPointDescriptor desc;
  desc.signature = end == LevelEnd::min ? StratumSignature(0, 0, {input.rank}) : StratumSignature(0, 1, {r});
  desc.description = std::string(input.fixed_det ? "M_L(" : "M(") + std::to_string(r) + "," +
                     std::to_string(input.degree) + ")";
  if (std::gcd(r, input.degree) == 1) {
    const int dim = r * r * (g - 1) + 1;
    desc.dimension = input.fixed_det ? dim - g : dim;
  }
  return desc;
}

IntPolynomial sym_poincare(int n, int g) {
  if (n < 0) throw InvalidInput("symmetric power must be >= 0");
  if (g < 0) throw InvalidInput("genus must be >= 0");
  // sum over k of C(2g,k) t^k (1 + t^2 + ... + t^{2(n-k)})
  std::vector<BigInt> coeffs(static_cast<std::size_t>(2 * n) + 1);
  BigInt binom = 1;
  for (int k = 0; k <= std::min(n, 2 * g); ++k) {
    for (int j = 0; j <= n - k; ++j) coeffs[static_cast<std::size_t>(k + 2 * j)] += binom;
    binom = binom * (2 * g - k) / (k + 1);
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial jac_poincare(int g) {
  if (g < 0) throw InvalidInput("genus must be >= 0");
  IntPolynomial p{1};
  const IntPolynomial one_plus_t{1, 1};
  for (int i = 0; i < 2 * g; ++i) p *= one_plus_t;
  return p;
}

IntPolynomial proj_poincare(int n) {
  if (n < 0) throw InvalidInput("projective dimension must be >= 0");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(2 * n) + 1);
  for (int i = 0; i <= n; ++i) coeffs[static_cast<std::size_t>(2 * i)] = 1;
  return IntPolynomial(std::move(coeffs));
}

FixedPointDescriptor fixed_point_poincare(const ModuliInput& input, const Wall& wall_in) {
  if (input.rank != 2) throw Unsupported("fixed-point Poincare polynomials are available for rank 2 only");
  const Wall wall = require_critical(input, wall_in);
  if (wall.kind != WallKind::interior) throw InvalidInput("fixed_point_poincare needs an interior wall");
  const int tau = wall.value.to_int();
  const int n = input.degree - tau;
  const int g = input.genus;

  FixedPointDescriptor desc;
  desc.signature = StratumSignature(n, 1, {1});
  desc.poincare = sym_poincare(n, g);
  desc.dimension = n;
  desc.description = "Sym^" + std::to_string(n) + "(Sigma)";
  if (!input.fixed_det) {
    *desc.poincare *= jac_poincare(g);
    *desc.dimension += g;
    desc.description += " x J_" + std::to_string(tau);
  }
  return desc;
}

}  // namespace vortex
