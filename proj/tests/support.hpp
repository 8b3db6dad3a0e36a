#pragma once

// Shared oracles and fixtures for the test binaries. The oracles never call
// into the library for the value being checked; root sets come from the
// textbook epsilon-coordinate models.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "weylspecht/rootsys.hpp"
#include "weylspecht/specht.hpp"
#include "weylspecht/subsystem.hpp"
#include "weylspecht/weyl.hpp"

namespace oracle {

using Vec = std::vector<long>;

// Simple roots in epsilon coordinates, scaled by `scale` so every entry is an
// integer (F4 uses half-integers). The Gram matrix is dot / scale^2.
struct Model {
  std::vector<Vec> simples;
  std::set<Vec> roots;
  long scale = 1;
};

inline Vec unit(int dim, int i, long v = 1) {
  Vec e(dim, 0);
  e[i] = v;
  return e;
}

inline Vec plus(Vec a, const Vec& b, long k = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
  return a;
}

inline long dot(const Vec& a, const Vec& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0L);
}

inline Model epsilon_model(char series, int n) {
  Model m;
  auto both_signs = [&](const Vec& v) {
    m.roots.insert(v);
    m.roots.insert(plus(Vec(v.size(), 0), v, -1));
  };
  switch (series) {
    case 'A': {
      for (int i = 0; i < n; ++i) m.simples.push_back(plus(unit(n + 1, i), unit(n + 1, i + 1), -1));
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) both_signs(plus(unit(n + 1, i), unit(n + 1, j), -1));
      break;
    }
    case 'B':
    case 'C':
    case 'D': {
      for (int i = 0; i + 1 < n; ++i) m.simples.push_back(plus(unit(n, i), unit(n, i + 1), -1));
      if (series == 'B') m.simples.push_back(unit(n, n - 1));
      if (series == 'C') m.simples.push_back(unit(n, n - 1, 2));
      if (series == 'D') m.simples.push_back(plus(unit(n, n - 2), unit(n, n - 1)));
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          both_signs(plus(unit(n, i), unit(n, j), -1));
          both_signs(plus(unit(n, i), unit(n, j)));
        }
        if (series == 'B') both_signs(unit(n, i));
        if (series == 'C') both_signs(unit(n, i, 2));
      }
      break;
    }
    case 'G': {
      // Inside the plane x + y + z = 0.
      m.simples = {{1, -1, 0}, {-2, 1, 1}};
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          both_signs(plus(unit(3, i), unit(3, j), -1));
          const int k = 3 - i - j;
          both_signs(plus(plus(unit(3, i, 2), unit(3, j), -1), unit(3, k), -1));
        }
      }
      break;
    }
    case 'F': {
      m.scale = 2;
      m.simples = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
          both_signs(plus(unit(4, i, 2), unit(4, j, 2), -1));
          both_signs(plus(unit(4, i, 2), unit(4, j, 2)));
        }
        both_signs(unit(4, i, 2));
      }
      for (int mask = 0; mask < 16; ++mask) {
        Vec v(4);
        for (int i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
        m.roots.insert(v);
      }
      break;
    }
  }
  return m;
}

inline Vec to_epsilon(const Model& m, const weylspecht::Root& r) {
  Vec v(m.simples.front().size(), 0);
  for (std::size_t i = 0; i < r.rank(); ++i) v = plus(v, m.simples[i], r[i]);
  return v;
}

inline unsigned long long factorial(int n) { return n <= 1 ? 1ULL : n * factorial(n - 1); }

// |W| from the classical formulas.
inline unsigned long long group_order(char series, int n) {
  switch (series) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (1ULL << n) * factorial(n);
    case 'D': return (1ULL << (n - 1)) * factorial(n);
    case 'G': return 12;
    case 'F': return 1152;
    default: return 0;
  }
}

// Rank by fraction-free (Bareiss) elimination over Z.
inline std::size_t bareiss_rank(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<mpz_class>> a;
  for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
  if (a.empty()) return 0;
  const std::size_t m = a.size(), n = a.front().size();
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

inline mpz_class bareiss_det(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<mpz_class>> a;
  for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
  const std::size_t n = a.size();
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * prev;
}

// Plain Gaussian elimination mod a small prime.
inline std::size_t rank_mod_p(std::vector<std::vector<long>> rows, long p) {
  for (auto& r : rows)
    for (auto& x : r) x = ((x % p) + p) % p;
  if (rows.empty()) return 0;
  const std::size_t m = rows.size(), n = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && rows[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(rows[piv], rows[rank]);
    long inv = 1;
    while (inv * rows[rank][col] % p != 1) ++inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const long f = rows[i][col] * inv % p;
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = ((rows[i][j] - f * rows[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle

namespace fixtures {

// A pair (Psi, Psi') given by generating roots; simples are canonicalised.
struct Instance {
  std::string type;
  std::vector<weylspecht::Root> psi;
  std::vector<weylspecht::Root> psi_prime;
};

// All pairs of disjoint subsystems generated by at most two positive roots.
inline std::vector<Instance> small_pairs(const weylspecht::RootSystem& phi) {
  using namespace weylspecht;
  std::vector<std::vector<Root>> gens{{}};
  const auto pos = phi.roots().first(phi.positive_count());
  for (std::size_t i = 0; i < pos.size(); ++i) {
    gens.push_back({pos[i]});
    for (std::size_t j = i + 1; j < pos.size(); ++j) gens.push_back({pos[i], pos[j]});
  }
  std::vector<Subsystem> subs;
  for (const auto& g : gens) {
    Subsystem s = subsystem_generated(phi, std::span<const Root>(g));
    if (std::none_of(subs.begin(), subs.end(), [&](const Subsystem& t) {
          return std::ranges::equal(t.roots(), s.roots());
        })) {
      subs.push_back(std::move(s));
    }
  }
  std::vector<Instance> out;
  for (const auto& a : subs) {
    for (const auto& b : subs) {
      if (a.intersects(b)) continue;
      out.push_back({phi.label(), a.simple_roots(), b.simple_roots()});
    }
  }
  return out;
}

inline const Instance kA3{"A3", {{1, 0, 0}, {0, 0, 1}}, {{1, 1, 0}}};
inline const Instance kG2{"G2", {{1, 0}}, {{0, 1}, {3, 1}}};
inline const Instance kD4a{"D4", {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}, {{1, 1, 1, 0}}};
inline const Instance kD4b{"D4", {{1, 0, 0, 0}, {0, 1, 0, 0}}, {{0, 0, 0, 1}, {0, 1, 1, 0}}};

inline std::vector<Instance> named_instances() { return {kA3, kG2, kD4a, kD4b}; }

// The module points into the group and root system, so keep all three together.
struct Built {
  explicit Built(const Instance& inst)
      : phi(weylspecht::build_root_system(inst.type)),
        group(weylspecht::generate_group(phi)),
        module(group, weylspecht::closure_from_simples(phi, inst.psi),
               weylspecht::closure_from_simples(phi, inst.psi_prime)) {}
  weylspecht::RootSystem phi;
  weylspecht::WeylGroup group;
  weylspecht::TabloidModule module;
};

inline std::unique_ptr<Built> build(const Instance& inst) { return std::make_unique<Built>(inst); }

}  // namespace fixtures
