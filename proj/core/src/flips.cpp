#include "vortex/flips.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace vortex {

namespace {

Wall require_interior(const ModuliInput& input, const Wall& wall_in) {
  const auto found = find_wall(input, wall_in.value);
  if (!found) throw InvalidInput(wall_in.value.to_string() + " is not a critical value");
  if (found->kind != WallKind::interior) {
    throw InvalidInput("wall " + found->value.to_string() + " is a boundary wall (" + to_string(found->kind) + ")");
  }
  return *found;
}

void require_rank_two(const ModuliInput& input, const char* what) {
  if (input.rank != 2) throw Unsupported(std::string(what) + " is available for rank 2 only");
}

void require_anchor_degree(const ModuliInput& input) {
  if (input.low_degree()) {
    throw InvalidInput("Riemann-Roch anchors need d > R(2g-2); refusing under allow_low_degree");
  }
}

std::string describe(const Chamber& c) { return "(" + c.lower.to_string() + ", " + c.upper.to_string() + ")"; }

struct Chain {
  std::vector<ChainStep> chambers;
  std::vector<ChainDelta> deltas;
};

Chain compute_chain(const ModuliInput& input) {
  require_rank_two(input, "the Poincare chain");
  input.validate();
  require_anchor_degree(input);

  const int d = input.degree;
  const int g = input.genus;
  const int expected_degree = 2 * dim_pairs_moduli(input);

  IntPolynomial current = proj_poincare(d + g - 2);
  if (!input.fixed_det) current *= jac_poincare(g);

  auto chambers = enumerate_chambers(input);
  std::reverse(chambers.begin(), chambers.end());

  Chain chain;
  for (std::size_t i = 0; i < chambers.size(); ++i) {
    if (i > 0) {
      const Wall wall = *find_wall(input, chambers[i].upper);
      IntPolynomial delta = wall_crossing_delta(input, wall);
      current += delta;
      chain.deltas.push_back({wall, std::move(delta)});
    }
    if (!is_palindromic(current, expected_degree) || current.degree() != expected_degree ||
        !current.is_nonnegative()) {
      throw InternalError("chamber " + describe(chambers[i]) + " failed validation: " + current.to_string());
    }
    chain.chambers.push_back({chambers[i], current});
  }
  return chain;
}

IntPolynomial bottom_from_chain(const ModuliInput& input, const Chain& chain) {
  if (input.degree % 2 == 0) {
    throw InvalidInput("coprimality gate: d = " + std::to_string(input.degree) + " is even");
  }
  const int h0 = input.degree + 2 * (1 - input.genus);
  try {
    return exact_div(chain.chambers.back().poincare, proj_poincare(h0 - 1));
  } catch (const NotDivisible& e) {
    throw InternalError("bottom chamber is not divisible by P(P^" + std::to_string(h0 - 1) +
                        "), remainder " + e.remainder().to_string());
  }
}

}  // namespace

WallReport wall_report(const ModuliInput& input, const Wall& wall_in) {
  const Wall wall = require_interior(input, wall_in);
  WallReport report;
  report.wall = wall;
  report.dim_master = dim_master(input);

  for (auto& sig : enumerate_signatures(input, wall)) {
    StratumCodims s;
    s.signature = sig;
    if (sig.block_count() == 1) {
      const int r_s = sig.ranks.front();
      s.dim_z = stratum_dimension(input, wall, sig);
      s.p_plus = codim_plus(input, wall, r_s);
      s.p_minus = codim_minus(input, wall, r_s);
      s.fiber_plus = *s.p_plus - 1;
      s.fiber_minus = *s.p_minus - 1;
      s.consistency_ok = *s.dim_z + *s.p_plus + *s.p_minus == report.dim_master;
    } else {
      s.note = "dimension unavailable (n = " + std::to_string(sig.block_count()) + ")";
    }
    report.strata.push_back(std::move(s));
  }

  if (input.rank == 2) {
    const std::string half = Rational(input.degree, 2).to_string();
    report.smoothness_notes.push_back("master space is smooth away from the level " + half);
    if (input.degree % 2 == 1) {
      report.smoothness_notes.push_back("d odd: at most Z2 quotient singularities along the level " + half);
    }
  }
  return report;
}

CodimBoundReport check_codim_bound(const ModuliInput& input) {
  if (input.rank <= 2) throw InvalidInput("the codimension bound is stated for R > 2");
  CodimBoundReport report;
  bool first = true;
  auto track = [&first](int value, int& best, std::vector<CodimWitness>& at, const CodimWitness& w) {
    if (first || value < best) {
      best = value;
      at.clear();
    }
    if (value == best) at.push_back(w);
  };

  for (const auto& wall : critical_values(input)) {
    if (wall.kind != WallKind::interior) continue;
    std::set<int> r_s_values;
    for (const auto& sig : enumerate_signatures(input, wall)) {
      if (sig.block_count() == 1) r_s_values.insert(sig.ranks.front());
    }
    for (int r_s : r_s_values) {
      const int pm = codim_minus(input, wall, r_s);
      const int pp = codim_plus(input, wall, r_s);
      const CodimWitness w{wall, r_s};
      if (first) {
        report.min_p_minus = pm;
        report.min_p_plus = pp;
      }
      track(pm, report.min_p_minus, report.min_p_minus_at, w);
      track(pp, report.min_p_plus, report.min_p_plus_at, w);
      first = false;
      if (pm < 2 || pp < 2) {
        report.holds = false;
        report.violations.push_back("wall " + wall.value.to_string() + ", R_s = " + std::to_string(r_s) +
                                    ": p- = " + std::to_string(pm) + ", p+ = " + std::to_string(pp));
      }
    }
  }
  return report;
}

IntPolynomial blowup_poincare(const IntPolynomial& p_x, const IntPolynomial& p_c, int codim) {
  if (codim < 1) throw InvalidInput("blow-up codimension must be >= 1");
  IntPolynomial series;
  for (int k = 1; k <= codim - 1; ++k) series += IntPolynomial::monomial(1, 2 * k);
  return p_x + p_c * series;
}

IntPolynomial wall_crossing_delta(const ModuliInput& input, const Wall& wall_in) {
  require_rank_two(input, "wall_crossing_delta");
  const Wall wall = require_interior(input, wall_in);
  const int p_minus = codim_minus(input, wall, 1);
  const int p_plus = codim_plus(input, wall, 1);
  const IntPolynomial p_z = *fixed_point_poincare(input, wall).poincare;
  const IntPolynomial numerator = IntPolynomial::monomial(1, 2 * p_minus) - IntPolynomial::monomial(1, 2 * p_plus);
  return p_z * exact_div(numerator, IntPolynomial{1, 0, -1});
}

ChainReport chamber_chain(const ModuliInput& input) {
  Chain chain = compute_chain(input);
  ChainReport report;
  if (input.degree % 2 == 0) {
    report.warnings.push_back("d even: the level d/2 is excluded; the chain stops at the lowest interior wall and "
                              "the bottom-moduli extraction is gated off");
  } else {
    report.bottom_moduli_poincare = bottom_from_chain(input, chain);
  }
  report.chambers = std::move(chain.chambers);
  report.deltas = std::move(chain.deltas);
  return report;
}

IntPolynomial solve_bottom_moduli(const ModuliInput& input) {
  require_rank_two(input, "solve_bottom_moduli");
  if (input.degree % 2 == 0) {
    throw InvalidInput("coprimality gate: d = " + std::to_string(input.degree) + " is even");
  }
  return bottom_from_chain(input, compute_chain(input));
}

EndpointReport endpoint_descriptors(const ModuliInput& input) {
  input.validate();
  const int R = input.rank;
  const int d = input.degree;
  const int g = input.genus;
  EndpointReport report;

  const auto low = extreme_level(input, LevelEnd::min);
  const auto high = extreme_level(input, LevelEnd::max);

  auto model = [](const FixedPointDescriptor& base, int fiber) {
    EndpointModel m;
    m.base = base.description;
    m.fiber_dimension = fiber;
    m.base_dimension = base.dimension;
    if (base.dimension) m.total_dimension = *base.dimension + fiber;
    m.description = "P^" + std::to_string(fiber) + "-bundle over " + base.description;
    return m;
  };
  report.bottom = model(low, d + R * (1 - g) - 1);
  report.top = model(high, d + (R - 1) * (g - 1) - 1);

  report.coprime_gate = std::gcd(d, R) == 1 && std::gcd(d, R - 1) == 1;
  report.notes.push_back("bottom: projectivized direct image of the universal bundle over " + low.description);
  report.notes.push_back("top: projectivized Ext^1(U, O) over " + high.description);
  if (R > 2) report.notes.push_back("all chamber moduli are birational to one another");
  if (!report.coprime_gate) {
    report.warnings.push_back("coprimality gate fails: gcd(d,R) = " + std::to_string(std::gcd(d, R)) +
                              ", gcd(d,R-1) = " + std::to_string(std::gcd(d, R - 1)));
  }
  if (input.low_degree()) {
    report.warnings.push_back("d <= R(2g-2): Riemann-Roch fiber dimensions may not be constant");
  }
  return report;
}

}  // namespace vortex
