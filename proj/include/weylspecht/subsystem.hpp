#pragma once

// Reflection subsystems Psi of a root system, their simple systems J, Dynkin
// classification, orthogonal complements, normalizers and the coset
// transversals D_Psi (minimal reps of W(Psi)) and E_Psi (reps of N(Psi)).

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "weylspecht/rootsys.hpp"
#include "weylspecht/weyl.hpp"

namespace weylspecht {

class Subsystem {
 public:
  const RootSystem& ambient() const noexcept { return *phi_; }

  // Sorted root ids.
  std::span<const RootId> roots() const noexcept { return roots_; }
  // The simple system J, in the caller's order.
  std::span<const RootId> simples() const noexcept { return simples_; }
  std::vector<Root> simple_roots() const;
  // Connected parts of the Dynkin graph on J, each listed in J order.
  const std::vector<std::vector<RootId>>& components() const noexcept { return components_; }
  // Sorted by decreasing rank, then series.
  const std::vector<CartanType>& component_types() const noexcept { return types_; }
  // "2A1", "A3+A1", "empty".
  std::string label() const;

  std::size_t size() const noexcept { return roots_.size(); }
  bool empty() const noexcept { return roots_.empty(); }
  bool contains(RootId r) const { return member_.at(r); }
  bool intersects(const Subsystem& other) const;

  friend bool operator==(const Subsystem& a, const Subsystem& b) {
    return a.roots_ == b.roots_ && a.simples_ == b.simples_;
  }

 private:
  friend Subsystem closure_from_simples(const RootSystem& phi, std::span<const RootId> simples);

  const RootSystem* phi_ = nullptr;
  std::vector<RootId> roots_;
  std::vector<RootId> simples_;
  std::vector<bool> member_;
  std::vector<std::vector<RootId>> components_;
  std::vector<CartanType> types_;
};

// Smallest reflection-closed set containing J. J must consist of positive,
// linearly independent roots forming a simple system of that closure;
// std::invalid_argument otherwise. The ambient system must outlive the result.
Subsystem closure_from_simples(const RootSystem& phi, std::span<const RootId> simples);
Subsystem closure_from_simples(const RootSystem& phi, std::span<const Root> simples);

// Closure of an arbitrary set of roots, packaged with its canonical simple
// system.
Subsystem subsystem_generated(const RootSystem& phi, std::span<const RootId> gens);
Subsystem subsystem_generated(const RootSystem& phi, std::span<const Root> gens);

// Positive roots of a closed, negation-stable set S that are not the sum of two
// positive roots of S, in root-id order. Throws std::invalid_argument when S
// is not closed.
std::vector<RootId> simple_system_of(const RootSystem& phi, std::span<const RootId> roots);
std::vector<Root> simple_system_of(const RootSystem& phi, std::span<const Root> roots);

// All roots orthogonal to every root of psi.
Subsystem orthogonal_complement(const Subsystem& psi);

// Type of a connected simple system, found by Cartan-matrix isomorphism.
CartanType classify_component(const RootSystem& phi, std::span<const RootId> simples);
std::string format_label(std::span<const CartanType> types);

struct Normalizer {
  std::vector<ElementId> of_subsystem;  // N(Psi) = {w : w Psi = Psi}
  std::vector<ElementId> of_simples;    // N(J) = {w : w J = J}
};

// Element ids refer to `group`, listed in the group's enumeration order.
Normalizer normalizer(const Subsystem& psi, const WeylGroup& group);
// W(Psi), generated by the reflections in J.
std::vector<ElementId> reflection_subgroup(const Subsystem& psi, const WeylGroup& group);
// D_Psi = {w : w(j) > 0 for all j in J}.
std::vector<ElementId> distinguished_reps(const Subsystem& psi, const WeylGroup& group);
// E_Psi: the first element of each left coset w N(Psi) in enumeration order,
// i.e. a minimal-length representative.
std::vector<ElementId> normalizer_reps(const Subsystem& psi, const WeylGroup& group);

// Ids (sorted) of `elements` inside `group`.
std::vector<ElementId> ids_in(const WeylGroup& group, std::span<const GroupElement> elements);
// Sorted intersection of two sorted id lists.
std::vector<ElementId> intersect_ids(std::span<const ElementId> a, std::span<const ElementId> b);

}  // namespace weylspecht
