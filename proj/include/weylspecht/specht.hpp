#pragma once

// The permutation module M^Psi on Delta*-tabloids, the signed column operator
// kappa, polytabloids e_{wJ,wJ'} and the submodule S^{Psi,Psi'} they span,
// together with the invariant form, the quotient D = S / (S n S^perp) and
// characters of the W-action.
//
// A tabloid {wJ; wJ'} is identified by the root set w(Psi): N(Psi) is exactly
// the setwise stabiliser of Psi, so two tableaux are row-equivalent iff they
// move Psi to the same set.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weylspecht/exactlin.hpp"
#include "weylspecht/subsystem.hpp"
#include "weylspecht/weyl.hpp"

namespace weylspecht {

using exactlin::Field;
using exactlin::Frame;
using exactlin::Matrix;
using exactlin::Scalar;
using exactlin::SparseVector;
using exactlin::SubspaceBasis;

struct Tabloid {
  std::vector<RootId> key;      // d(Psi), sorted
  ElementId rep = 0;            // d in E_Psi
  std::vector<RootId> rows;     // d(J), in J order
  std::vector<RootId> columns;  // d(J'), in J' order
};

// "{100,001;110}"
std::string format_tabloid(const RootSystem& phi, const Tabloid& t);

// One tabloid per coset in E_Psi, in enumeration order of the representatives.
std::vector<Tabloid> enumerate_tabloids(const Subsystem& psi, const Subsystem& psi_prime,
                                        const WeylGroup& group);

class TabloidModule {
 public:
  // psi_prime may be empty. The group (and its root system) must outlive the
  // module.
  TabloidModule(const WeylGroup& group, Subsystem psi, Subsystem psi_prime);

  const WeylGroup& group() const noexcept { return *group_; }
  const RootSystem& root_system() const noexcept { return group_->root_system(); }
  const Subsystem& psi() const noexcept { return psi_; }
  const Subsystem& psi_prime() const noexcept { return psi_prime_; }

  std::size_t dimension() const noexcept { return tabloids_.size(); }
  std::span<const Tabloid> tabloids() const noexcept { return tabloids_; }
  const Normalizer& normalizer() const noexcept { return normalizer_; }
  // E_Psi, aligned with tabloids().
  std::span<const ElementId> coset_reps() const noexcept { return reps_; }
  // W(Psi'), in group enumeration order.
  std::span<const ElementId> column_group() const noexcept { return column_group_; }

  // Index of {w J}.
  std::size_t tabloid_of(ElementId w) const { return tabloid_of_element_.at(w); }
  std::size_t tabloid_of(const GroupElement& w) const;
  std::size_t act(const GroupElement& w, std::size_t tabloid) const;
  SparseVector act(const GroupElement& w, const SparseVector& m) const;
  SparseVector basis_vector(std::size_t tabloid, Field field) const;

 private:
  const WeylGroup* group_;
  Subsystem psi_;
  Subsystem psi_prime_;
  Normalizer normalizer_;
  std::vector<ElementId> reps_;
  std::vector<Tabloid> tabloids_;
  std::map<std::vector<RootId>, std::size_t> index_;
  std::vector<std::size_t> tabloid_of_element_;
  std::vector<ElementId> column_group_;
};

// sum over sigma in W(Psi') of sign(sigma) * sigma . m
SparseVector apply_kappa(const TabloidModule& module, const SparseVector& m);

// Integer coefficients of e_{wJ,wJ'} = kappa_{wJ'} {wJ}, by tabloid index.
std::map<std::size_t, long> polytabloid_coefficients(const TabloidModule& module, ElementId w);
SparseVector polytabloid(const TabloidModule& module, ElementId w, Field field);

struct SpechtModuleData {
  const TabloidModule* module = nullptr;
  Field field;
  // (d, e_{dJ,dJ'}) for d in D_Psi'.
  std::vector<std::pair<ElementId, SparseVector>> generators;
  SubspaceBasis basis;
  // Set when requested: span over all of W equals the span over D_Psi'.
  std::optional<bool> cross_check;

  std::size_t dimension() const noexcept { return basis.rank(); }
};

SpechtModuleData build_specht_module(const TabloidModule& module, Field field,
                                     bool cross_check = false);
// Brute force: span of e_{wJ,wJ'} over every w in W.
SubspaceBasis span_over_group(const TabloidModule& module, Field field);

// Delta form on the tabloid basis.
Scalar bilinear_form(const SparseVector& a, const SparseVector& b);

struct QuotientDimensions {
  std::size_t specht = 0;   // dim S
  std::size_t radical = 0;  // dim S n S^perp
  std::size_t quotient = 0; // dim D
  friend bool operator==(const QuotientDimensions&, const QuotientDimensions&) = default;
};

SubspaceBasis radical(const SpechtModuleData& s);
QuotientDimensions quotient_dimension(const SpechtModuleData& s);

// Column j holds the coordinates of w . b_j. The first overload uses the
// echelon basis of s, the second an explicit basis of S (for example a list
// of generating polytabloids). Throws std::invalid_argument for a zero module.
Matrix matrix_of(const SpechtModuleData& s, const GroupElement& w);
Matrix matrix_of(const SpechtModuleData& s, const GroupElement& w, const Frame& basis);

Scalar character_value(const SpechtModuleData& s, const GroupElement& w);
// (1/|W|) sum_w psi(w) psi(w^-1). Characteristic zero only.
Rational character_norm(const SpechtModuleData& s);

}  // namespace weylspecht
