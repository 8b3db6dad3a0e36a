#include "weylspecht/subsystem.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "weylspecht/exactlin.hpp"

namespace weylspecht {

namespace {

std::vector<RootId> to_ids(const RootSystem& phi, std::span<const Root> roots) {
  std::vector<RootId> ids;
  ids.reserve(roots.size());
  for (const Root& r : roots) ids.push_back(phi.id_of(r));
  return ids;
}

std::vector<RootId> closure_ids(const RootSystem& phi, std::span<const RootId> gens) {
  std::vector<bool> member(phi.size(), false);
  std::vector<RootId> found;
  auto add = [&](RootId r) {
    if (!member[r]) {
      member[r] = true;
      found.push_back(r);
    }
  };
  for (RootId g : gens) {
    add(g);
    add(phi.negation(g));
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (RootId g : gens) add(phi.reflect(g, found[i]));
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::size_t rank_over_q(const RootSystem& phi, std::span<const RootId> ids) {
  using namespace exactlin;
  const Field q = Field::rationals();
  std::vector<SparseVector> rows;
  for (RootId id : ids) {
    const auto coords = phi.root(id).coords();
    std::vector<long> values(coords.begin(), coords.end());
    rows.push_back(SparseVector::from_integers(q, values));
  }
  return row_reduce(static_cast<std::size_t>(phi.rank()), q, rows).rank();
}

std::vector<std::vector<int>> cartan_of(const std::vector<std::vector<Rational>>& gram) {
  const std::size_t n = gram.size();
  std::vector<std::vector<int>> c(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational x = 2 * gram[i][j] / gram[i][i];
      if (x.get_den() != 1) throw std::logic_error("non-integral Cartan entry");
      c[i][j] = static_cast<int>(x.get_num().get_si());
    }
  }
  return c;
}

bool isomorphic(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (a[i][j] != b[perm[i]][perm[j]]) {
          match = false;
          break;
        }
      }
    }
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

std::vector<Root> Subsystem::simple_roots() const {
  std::vector<Root> out;
  for (RootId id : simples_) out.push_back(phi_->root(id));
  return out;
}

std::string Subsystem::label() const { return format_label(types_); }

bool Subsystem::intersects(const Subsystem& other) const {
  return std::any_of(roots_.begin(), roots_.end(), [&](RootId r) { return other.contains(r); });
}

Subsystem closure_from_simples(const RootSystem& phi, std::span<const RootId> simples) {
  for (RootId j : simples) {
    if (j >= phi.size()) throw std::invalid_argument("root id out of range");
    if (!phi.is_positive(j)) {
      throw std::invalid_argument("simple root " + format_root(phi, j) + " is not positive");
    }
  }
  if (rank_over_q(phi, simples) != simples.size()) {
    throw std::invalid_argument("simple roots are linearly dependent");
  }

  Subsystem psi;
  psi.phi_ = &phi;
  psi.simples_.assign(simples.begin(), simples.end());
  psi.roots_ = closure_ids(phi, simples);
  psi.member_.assign(phi.size(), false);
  for (RootId r : psi.roots_) psi.member_[r] = true;

  std::vector<RootId> canonical = simple_system_of(phi, psi.roots_);
  std::vector<RootId> given(simples.begin(), simples.end());
  std::sort(given.begin(), given.end());
  if (canonical != given) {
    throw std::invalid_argument("roots do not form a simple system of the subsystem they generate");
  }

  // Dynkin graph components, discovered in J order.
  const std::size_t n = psi.simples_.size();
  std::vector<int> component(n, -1);
  int count = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    std::vector<std::size_t> stack{start};
    component[start] = count;
    std::vector<RootId> members;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (component[j] < 0 && sgn(phi.inner_product(psi.simples_[i], psi.simples_[j])) != 0) {
          component[j] = count;
          stack.push_back(j);
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (component[i] == count) members.push_back(psi.simples_[i]);
    }
    psi.types_.push_back(classify_component(phi, members));
    psi.components_.push_back(std::move(members));
    ++count;
  }
  std::sort(psi.types_.begin(), psi.types_.end(), [](const CartanType& a, const CartanType& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    return a.series < b.series;
  });
  return psi;
}

Subsystem closure_from_simples(const RootSystem& phi, std::span<const Root> simples) {
  return closure_from_simples(phi, to_ids(phi, simples));
}

Subsystem subsystem_generated(const RootSystem& phi, std::span<const RootId> gens) {
  return closure_from_simples(phi, simple_system_of(phi, closure_ids(phi, gens)));
}

Subsystem subsystem_generated(const RootSystem& phi, std::span<const Root> gens) {
  return subsystem_generated(phi, to_ids(phi, gens));
}

std::vector<RootId> simple_system_of(const RootSystem& phi, std::span<const RootId> roots) {
  std::vector<bool> member(phi.size(), false);
  for (RootId r : roots) member.at(r) = true;
  for (RootId a : roots) {
    if (!member[phi.negation(a)]) throw std::invalid_argument("root set is not negation-stable");
    for (RootId b : roots) {
      if (!member[phi.reflect(a, b)]) throw std::invalid_argument("root set is not reflection-closed");
    }
  }
  std::vector<RootId> positives;
  for (RootId r : roots) {
    if (phi.is_positive(r)) positives.push_back(r);
  }
  std::sort(positives.begin(), positives.end());
  std::set<Root> sums;
  for (std::size_t i = 0; i < positives.size(); ++i) {
    for (std::size_t j = i + 1; j < positives.size(); ++j) {
      sums.insert(phi.root(positives[i]) + phi.root(positives[j]));
    }
  }
  std::vector<RootId> simple;
  for (RootId r : positives) {
    if (!sums.contains(phi.root(r))) simple.push_back(r);
  }
  return simple;
}

std::vector<Root> simple_system_of(const RootSystem& phi, std::span<const Root> roots) {
  std::vector<Root> out;
  for (RootId id : simple_system_of(phi, to_ids(phi, roots))) out.push_back(phi.root(id));
  return out;
}

Subsystem orthogonal_complement(const Subsystem& psi) {
  const RootSystem& phi = psi.ambient();
  std::vector<RootId> orthogonal;
  for (RootId r = 0; r < phi.size(); ++r) {
    const bool perp = std::all_of(psi.simples().begin(), psi.simples().end(),
                                  [&](RootId j) { return sgn(phi.inner_product(r, j)) == 0; });
    if (perp) orthogonal.push_back(r);
  }
  return closure_from_simples(phi, simple_system_of(phi, orthogonal));
}

CartanType classify_component(const RootSystem& phi, std::span<const RootId> simples) {
  const int r = static_cast<int>(simples.size());
  if (r == 0) throw std::invalid_argument("empty component");
  std::vector<std::vector<Rational>> gram(r, std::vector<Rational>(r));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) gram[i][j] = phi.inner_product(simples[i], simples[j]);
  }
  const auto cartan = cartan_of(gram);

  std::vector<CartanType> candidates{{'A', r}};
  if (r >= 2) candidates.push_back({'B', r});
  if (r >= 3) candidates.push_back({'C', r});
  if (r >= 4) candidates.push_back({'D', r});
  if (r >= 6 && r <= 8) candidates.push_back({'E', r});
  if (r == 4) candidates.push_back({'F', 4});
  if (r == 2) candidates.push_back({'G', 2});
  for (const CartanType& type : candidates) {
    if (isomorphic(cartan, cartan_of(simple_gram(type)))) return type;
  }
  throw std::logic_error("simple system does not match any finite Dynkin type");
}

std::string format_label(std::span<const CartanType> input) {
  if (input.empty()) return "empty";
  std::vector<CartanType> types(input.begin(), input.end());
  std::sort(types.begin(), types.end(), [](const CartanType& a, const CartanType& b) {
    return a.rank != b.rank ? a.rank > b.rank : a.series < b.series;
  });
  std::string out;
  for (std::size_t i = 0; i < types.size();) {
    std::size_t j = i;
    while (j < types.size() && types[j] == types[i]) ++j;
    if (!out.empty()) out += '+';
    if (j - i > 1) out += std::to_string(j - i);
    out += types[i].to_string();
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------------------

Normalizer normalizer(const Subsystem& psi, const WeylGroup& group) {
  Normalizer result;
  std::vector<bool> in_j(psi.ambient().size(), false);
  for (RootId j : psi.simples()) in_j[j] = true;
  for (ElementId id = 0; id < group.order(); ++id) {
    const GroupElement& w = group.element(id);
    const bool stabilizes = std::all_of(psi.roots().begin(), psi.roots().end(),
                                        [&](RootId r) { return psi.contains(w(r)); });
    if (!stabilizes) continue;
    result.of_subsystem.push_back(id);
    if (std::all_of(psi.simples().begin(), psi.simples().end(), [&](RootId j) { return in_j[w(j)]; })) {
      result.of_simples.push_back(id);
    }
  }
  return result;
}

std::vector<ElementId> ids_in(const WeylGroup& group, std::span<const GroupElement> elements) {
  std::vector<ElementId> ids;
  ids.reserve(elements.size());
  for (const auto& g : elements) ids.push_back(group.id_of(g));
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<ElementId> intersect_ids(std::span<const ElementId> a, std::span<const ElementId> b) {
  std::vector<ElementId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<ElementId> reflection_subgroup(const Subsystem& psi, const WeylGroup& group) {
  const auto gens = psi.simple_roots();
  return ids_in(group, subgroup_generated(psi.ambient(), gens, group.order()));
}

std::vector<ElementId> distinguished_reps(const Subsystem& psi, const WeylGroup& group) {
  const RootSystem& phi = psi.ambient();
  std::vector<ElementId> reps;
  for (ElementId id = 0; id < group.order(); ++id) {
    const GroupElement& w = group.element(id);
    if (std::all_of(psi.simples().begin(), psi.simples().end(),
                    [&](RootId j) { return phi.is_positive(w(j)); })) {
      reps.push_back(id);
    }
  }
  return reps;
}

std::vector<ElementId> normalizer_reps(const Subsystem& psi, const WeylGroup& group) {
  // w N(Psi) is determined by the root set w(Psi); enumeration order is
  // breadth-first, so the first hit per coset has minimal length.
  std::set<std::vector<RootId>> seen;
  std::vector<ElementId> reps;
  for (ElementId id = 0; id < group.order(); ++id) {
    if (seen.insert(image(group.element(id), psi.roots())).second) reps.push_back(id);
  }
  return reps;
}

}  // namespace weylspecht
