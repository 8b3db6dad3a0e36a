#include "weylspecht/verify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace weylspecht {

namespace {

bool trivial_intersection(std::span<const ElementId> a, std::span<const ElementId> b) {
  const auto common = intersect_ids(a, b);
  return common.size() == 1 && common.front() == 0;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

void require_disjoint(const Subsystem& psi, const Subsystem& psi_prime) {
  if (psi.intersects(psi_prime)) {
    throw std::invalid_argument("Psi' is not contained in Phi \\ Psi");
  }
}

bool is_useful_system(const WeylGroup& group, const Subsystem& psi, const Subsystem& psi_prime) {
  require_disjoint(psi, psi_prime);
  if (!trivial_intersection(reflection_subgroup(psi, group), reflection_subgroup(psi_prime, group))) {
    return false;
  }
  return trivial_intersection(reflection_subgroup(orthogonal_complement(psi), group),
                              reflection_subgroup(orthogonal_complement(psi_prime), group));
}

bool is_useful_subsystem(const WeylGroup& group, const Subsystem& psi, const Subsystem& psi_prime) {
  require_disjoint(psi, psi_prime);
  if (!trivial_intersection(normalizer(psi, group).of_subsystem, reflection_subgroup(psi_prime, group))) {
    return false;
  }
  return trivial_intersection(reflection_subgroup(orthogonal_complement(psi), group),
                              reflection_subgroup(orthogonal_complement(psi_prime), group));
}

std::optional<ElementId> sign_involution_witness(const WeylGroup& group, const Subsystem& psi,
                                                 const Subsystem& psi_prime) {
  const auto common =
      intersect_ids(normalizer(psi, group).of_subsystem, reflection_subgroup(psi_prime, group));
  for (ElementId w : common) {
    if (w != group.identity() && group.multiply(w, w) == group.identity() && group.sign(w) < 0) {
      return w;
    }
  }
  return std::nullopt;
}

GoodnessReport is_good_subsystem(const TabloidModule& module) {
  GoodnessReport report;
  const Subsystem& psi = module.psi();
  const Subsystem& psi_prime = module.psi_prime();
  if (psi.intersects(psi_prime)) {
    report.reason = "Psi' meets Psi";
    return report;
  }
  report.useful = is_useful_subsystem(module.group(), psi, psi_prime);
  if (!report.useful) {
    report.reason = "not a useful sub-system";
    return report;
  }
  const auto coeffs = polytabloid_coefficients(module, module.group().identity());
  for (std::size_t t = 0; t < module.dimension(); ++t) {
    const Tabloid& tab = module.tabloids()[t];
    const bool disjoint = std::none_of(tab.key.begin(), tab.key.end(),
                                       [&](RootId r) { return psi_prime.contains(r); });
    if (disjoint && !coeffs.contains(t)) report.witnesses.push_back(tab.rep);
  }
  report.good = report.witnesses.empty();
  if (!report.good) report.reason = "some tabloid with d(Psi) disjoint from Psi' is missing";
  return report;
}

SubspaceBasis cyclic_submodule(const TabloidModule& module, const std::vector<SparseVector>& seeds) {
  const RootSystem& phi = module.root_system();
  const Field field = seeds.empty() ? Field::rationals() : seeds.front().field();
  std::vector<GroupElement> generators;
  for (int i = 1; i <= phi.rank(); ++i) generators.push_back(simple_reflection(phi, i));

  SubspaceBasis span(module.dimension(), field);
  std::vector<SparseVector> pending;
  for (const auto& v : seeds) {
    if (span.insert(v)) pending.push_back(v);
  }
  for (std::size_t i = 0; i < pending.size(); ++i) {
    for (const auto& g : generators) {
      SparseVector image = module.act(g, pending[i]);
      if (span.insert(image)) pending.push_back(std::move(image));
    }
  }
  return span;
}

Dichotomy classify_submodule(const SpechtModuleData& s, const SubspaceBasis& u) {
  if (exactlin::is_subspace(s.basis, u)) return Dichotomy::kContainsS;
  for (const auto& x : u.rows()) {
    for (const auto& y : s.basis.rows()) {
      if (!bilinear_form(x, y).is_zero()) return Dichotomy::kViolation;
    }
  }
  return Dichotomy::kInsidePerp;
}

ProbeReport submodule_theorem_probe(const SpechtModuleData& s, std::size_t trials, std::uint64_t seed) {
  ProbeReport report;
  report.seed = seed;
  report.trials = trials;
  const std::size_t n = s.module->dimension();
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(trial)));
    std::vector<long> coeffs(n);
    for (auto& c : coeffs) c = static_cast<long>(rng() % 7) - 3;
    const SparseVector v = SparseVector::from_integers(s.field, coeffs);
    switch (classify_submodule(s, cyclic_submodule(*s.module, {v}))) {
      case Dichotomy::kContainsS:
        ++report.contains_s;
        break;
      case Dichotomy::kInsidePerp:
        ++report.inside_perp;
        break;
      case Dichotomy::kViolation:
        ++report.violations;
        report.violating_trials.push_back(trial);
        break;
    }
  }
  return report;
}

bool quotient_irreducibility_probe(const SpechtModuleData& s) {
  const SubspaceBasis rad = radical(s);
  if (s.dimension() == rad.rank()) return true;
  for (const auto& b : s.basis.rows()) {
    const SubspaceBasis u = exactlin::sum(cyclic_submodule(*s.module, {b}), rad);
    if (u.rank() != rad.rank() && u.rank() != s.dimension()) return false;
  }
  return true;
}

}  // namespace weylspecht
