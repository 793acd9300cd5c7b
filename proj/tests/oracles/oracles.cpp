#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace oracle {

Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trim(out);
}

Poly sub(const Poly& a, const Poly& b) {
  Poly nb = b;
  for (auto& c : nb) c = -c;
  return add(a, nb);
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(out);
}

std::int64_t eval(const Poly& p, std::int64_t t) {
  std::int64_t v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * t + *it;
  return v;
}

namespace {

bool less(const Frac& a, const Frac& b) { return a.first * b.second < b.first * a.second; }

Frac reduce(std::int64_t p, std::int64_t q) {
  const std::int64_t g = std::gcd(std::llabs(p), q);
  return {p / g, q / g};
}

void all_partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    all_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

// Truncated power series multiplication.
Poly smul(const Poly& a, const Poly& b, std::size_t n) {
  Poly out(n, 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly power(const Poly& a, int e, std::size_t n) {
  Poly out{1};
  for (int i = 0; i < e; ++i) out = smul(out, a, n);
  out.resize(n, 0);
  return out;
}

// 1 / (1 - t^k) truncated.
Poly geometric(int k, std::size_t n) {
  Poly out(n, 0);
  for (std::size_t i = 0; i < n; i += static_cast<std::size_t>(k)) out[i] = 1;
  return out;
}

}  // namespace

std::vector<Frac> walls(int rank, int degree) {
  std::vector<Frac> out{reduce(degree, rank), reduce(degree, rank - 1)};
  for (int q = 1; q <= rank - 1; ++q) {
    for (std::int64_t p = -std::abs(degree) * q - 1; p <= std::abs(degree) * q + 1; ++p) {
      // d/R <= p/q <= d/(R-1)
      if (p * rank >= static_cast<std::int64_t>(degree) * q && p * (rank - 1) <= static_cast<std::int64_t>(degree) * q) {
        out.push_back(reduce(p, q));
      }
    }
  }
  std::sort(out.begin(), out.end(), less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Sig> signatures(int rank, int degree, Frac wall, End kind, bool geometric_filter) {
  const auto [p, q] = wall;
  std::vector<Sig> out;
  const int box = std::abs(degree) + rank * static_cast<int>(std::llabs(p)) + 2;
  for (int r_phi = 0; r_phi <= rank; ++r_phi) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    if (rank - r_phi >= 1) all_partitions(rank - r_phi, rank - r_phi, cur, parts);
    for (int d_phi = -box; d_phi <= box; ++d_phi) {
      for (const auto& ranks : parts) {
        bool ok = true;
        for (int r : ranks) ok = ok && (r * p) % q == 0;
        if (kind == End::min) {
          ok = ok && d_phi == 0 && r_phi == 0;
        } else if (kind == End::max) {
          ok = ok && d_phi == 0 && r_phi == 1;
        } else {
          ok = ok && r_phi >= 1 && r_phi <= rank - 1;
          ok = ok && static_cast<std::int64_t>(degree - d_phi) * q == p * (rank - r_phi);
          ok = ok && static_cast<std::int64_t>(d_phi) * q < p * r_phi;
          if (r_phi >= 2) ok = ok && p * (r_phi - 1) < static_cast<std::int64_t>(d_phi) * q;
          if (geometric_filter && r_phi == 1) ok = ok && d_phi >= 0;
        }
        if (ok) out.push_back({d_phi, r_phi, ranks});
      }
    }
  }
  return out;
}

Poly sym(int n, int g) {
  // a[i][j] = coefficient of x^i t^j
  const int tmax = 2 * n + 1;
  std::vector<Poly> a(static_cast<std::size_t>(n) + 1, Poly(static_cast<std::size_t>(tmax), 0));
  a[0][0] = 1;
  auto times = [&](auto&& factor_terms) {
    std::vector<Poly> b(a.size(), Poly(static_cast<std::size_t>(tmax), 0));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j < tmax; ++j) {
        if (a[i][j] == 0) continue;
        for (auto [di, dj, c] : factor_terms)
          if (i + di <= n && j + dj < tmax) b[i + di][j + dj] += a[i][j] * c;
      }
    a = std::move(b);
  };
  struct Term {
    int di, dj;
    std::int64_t c;
  };
  for (int k = 0; k < 2 * g; ++k) times(std::vector<Term>{{0, 0, 1}, {1, 1, 1}});
  std::vector<Term> geo_x, geo_xt2;
  for (int i = 0; i <= n; ++i) {
    geo_x.push_back({i, 0, 1});
    geo_xt2.push_back({i, 2 * i, 1});
  }
  times(geo_x);
  times(geo_xt2);
  return trim(a[static_cast<std::size_t>(n)]);
}

Poly harder_narasimhan_rank2(int degree, int genus, bool fixed_det) {
  if (degree % 2 == 0) throw std::invalid_argument("odd degree only");
  const int g = genus;
  const std::size_t n = static_cast<std::size_t>(2 * (4 * g - 3) + 8 * g + 8);
  const Poly one_t = {1, 1};
  const Poly one_t3 = {1, 0, 0, 1};

  // Equivariant series of the stable stratum.
  Poly total = smul(power(one_t, 2 * g, n), power(one_t3, 2 * g, n), n);
  total = smul(total, geometric(2, n), n);
  total = smul(total, geometric(2, n), n);
  total = smul(total, geometric(4, n), n);

  // Unstable strata L1 + L2 with deg L1 = d1 > d/2.
  const Poly lines = smul(smul(power(one_t, 4 * g, n), geometric(2, n), n), geometric(2, n), n);
  for (int d1 = (degree + 1) / 2;; ++d1) {
    const int shift = 2 * (2 * d1 - degree + g - 1);
    if (shift >= static_cast<int>(n)) break;
    for (std::size_t i = 0; i + static_cast<std::size_t>(shift) < n; ++i) total[i + shift] -= lines[i];
  }
  total = smul(total, {1, 0, -1}, n);

  if (fixed_det) {
    // divide by (1+t)^{2g}: multiply by sum (-t)^k
    Poly inv(n, 0);
    for (std::size_t i = 0; i < n; ++i) inv[i] = (i % 2 == 0) ? 1 : -1;
    total = smul(total, power(inv, 2 * g, n), n);
  }
  // The answer is a polynomial of degree 2 dim; the tail must vanish.
  const std::size_t dim = static_cast<std::size_t>(4 * g - 3 - (fixed_det ? g : 0));
  for (std::size_t i = 2 * dim + 1; i < n; ++i) {
    if (total[i] != 0) throw std::logic_error("Harder-Narasimhan series did not terminate");
  }
  return trim(total);
}

Poly flip_delta(const Poly& pz, int p_minus, int p_plus) {
  auto proj = [](int k) {
    Poly p(static_cast<std::size_t>(2 * k) + 1, 0);
    for (int i = 0; i <= k; ++i) p[static_cast<std::size_t>(2 * i)] = 1;
    return p;
  };
  auto exceptional = [](int codim) {  // t^2 + ... + t^{2(codim-1)}
    Poly p(static_cast<std::size_t>(2 * codim), 0);
    for (int i = 1; i < codim; ++i) p[static_cast<std::size_t>(2 * i)] = 1;
    return trim(p);
  };
  // Resolution over the chamber above: center P(W+) = Z x P^{p_minus-1} of codim p_plus.
  const Poly from_above = mul(mul(pz, proj(p_minus - 1)), exceptional(p_plus));
  // Resolution over the chamber below: center Z x P^{p_plus-1} of codim p_minus.
  const Poly from_below = mul(mul(pz, proj(p_plus - 1)), exceptional(p_minus));
  return sub(from_above, from_below);
}

}  // namespace oracle
