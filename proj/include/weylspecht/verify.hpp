#pragma once

// Predicates on pairs (Psi, Psi') and theorem-level checks on the resulting
// modules. Every predicate is decided by brute force over the enumerated
// group.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylspecht/specht.hpp"

namespace weylspecht {

// Throws std::invalid_argument unless Psi' lies in Phi \ Psi.
void require_disjoint(const Subsystem& psi, const Subsystem& psi_prime);

// W(J) n W(J') = 1 and W(J^perp) n W(J'^perp) = 1.
bool is_useful_system(const WeylGroup& group, const Subsystem& psi, const Subsystem& psi_prime);
// N(Psi) n W(Psi') = 1 and W(Psi^perp) n W(Psi'^perp) = 1.
bool is_useful_subsystem(const WeylGroup& group, const Subsystem& psi, const Subsystem& psi_prime);

// An element of N(Psi) n W(Psi') of order two with sign -1, first in
// enumeration order. Its existence forces e_{J,J'} = 0.
std::optional<ElementId> sign_involution_witness(const WeylGroup& group, const Subsystem& psi,
                                                 const Subsystem& psi_prime);

struct GoodnessReport {
  bool good = false;
  bool useful = false;
  std::string reason;
  // d in E_Psi with d(Psi) n Psi' empty whose tabloid is missing from e_{J,J'}.
  std::vector<ElementId> witnesses;
};

GoodnessReport is_good_subsystem(const TabloidModule& module);

// Smallest W-invariant subspace of M^Psi containing the given vectors.
SubspaceBasis cyclic_submodule(const TabloidModule& module, const std::vector<SparseVector>& seeds);

enum class Dichotomy { kContainsS, kInsidePerp, kViolation };
// S <= U, or U <= S^perp.
Dichotomy classify_submodule(const SpechtModuleData& s, const SubspaceBasis& u);

struct ProbeReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t contains_s = 0;
  std::size_t inside_perp = 0;
  std::size_t violations = 0;
  std::vector<std::size_t> violating_trials;
};

// Per trial: a pseudorandom vector with entries in [-3, 3] (seed derived from
// `seed` and the trial number), its cyclic submodule U, and the S/U check.
ProbeReport submodule_theorem_probe(const SpechtModuleData& s, std::size_t trials, std::uint64_t seed);

// Cyclic submodules spun from each echelon vector of S either cover S modulo
// the radical or sit inside the radical. Vacuously true when D = 0.
bool quotient_irreducibility_probe(const SpechtModuleData& s);

}  // namespace weylspecht
