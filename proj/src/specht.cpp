#include "weylspecht/specht.hpp"

#include <stdexcept>

namespace weylspecht {

std::string format_tabloid(const RootSystem& phi, const Tabloid& t) {
  std::string out = "{";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i > 0) out += ',';
    out += format_root(phi, t.rows[i]);
  }
  out += ';';
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i > 0) out += ',';
    out += format_root(phi, t.columns[i]);
  }
  return out + "}";
}

std::vector<Tabloid> enumerate_tabloids(const Subsystem& psi, const Subsystem& psi_prime,
                                        const WeylGroup& group) {
  std::vector<Tabloid> out;
  for (ElementId d : normalizer_reps(psi, group)) {
    const GroupElement& w = group.element(d);
    Tabloid t;
    t.key = image(w, psi.roots());
    t.rep = d;
    for (RootId j : psi.simples()) t.rows.push_back(w(j));
    for (RootId j : psi_prime.simples()) t.columns.push_back(w(j));
    out.push_back(std::move(t));
  }
  return out;
}

TabloidModule::TabloidModule(const WeylGroup& group, Subsystem psi, Subsystem psi_prime)
    : group_(&group), psi_(std::move(psi)), psi_prime_(std::move(psi_prime)) {
  if (&psi_.ambient() != &group.root_system() || &psi_prime_.ambient() != &group.root_system()) {
    throw std::invalid_argument("subsystems and group belong to different root systems");
  }
  normalizer_ = weylspecht::normalizer(psi_, group);
  tabloids_ = enumerate_tabloids(psi_, psi_prime_, group);
  for (std::size_t t = 0; t < tabloids_.size(); ++t) {
    index_.emplace(tabloids_[t].key, t);
    reps_.push_back(tabloids_[t].rep);
  }
  tabloid_of_element_.reserve(group.order());
  for (ElementId w = 0; w < group.order(); ++w) {
    tabloid_of_element_.push_back(tabloid_of(group.element(w)));
  }
  column_group_ = reflection_subgroup(psi_prime_, group);
}

std::size_t TabloidModule::tabloid_of(const GroupElement& w) const {
  auto it = index_.find(image(w, psi_.roots()));
  if (it == index_.end()) throw std::logic_error("element does not map Psi onto a tabloid key");
  return it->second;
}

std::size_t TabloidModule::act(const GroupElement& w, std::size_t tabloid) const {
  auto it = index_.find(image(w, tabloids_.at(tabloid).key));
  if (it == index_.end()) throw std::logic_error("tabloid action left the tabloid set");
  return it->second;
}

SparseVector TabloidModule::act(const GroupElement& w, const SparseVector& m) const {
  if (m.dimension() != dimension()) throw std::invalid_argument("vector is not in M^Psi");
  SparseVector out(dimension(), m.field());
  for (const auto& [t, value] : m.entries()) out.set(act(w, t), value);
  return out;
}

SparseVector TabloidModule::basis_vector(std::size_t tabloid, Field field) const {
  return SparseVector::unit(dimension(), field, tabloid);
}

SparseVector apply_kappa(const TabloidModule& module, const SparseVector& m) {
  const WeylGroup& group = module.group();
  SparseVector out(module.dimension(), m.field());
  const Scalar one = Scalar::one(m.field());
  for (ElementId sigma : module.column_group()) {
    const Scalar s = group.sign(sigma) > 0 ? one : -one;
    out.add_scaled(s, module.act(group.element(sigma), m));
  }
  return out;
}

std::map<std::size_t, long> polytabloid_coefficients(const TabloidModule& module, ElementId w) {
  // kappa_{wJ'} {wJ} = sum_sigma s(sigma) (w sigma w^-1) {wJ} = sum_sigma s(sigma) {w sigma J}
  const WeylGroup& group = module.group();
  std::map<std::size_t, long> coeffs;
  for (ElementId sigma : module.column_group()) {
    const std::size_t t = module.tabloid_of(group.multiply(w, sigma));
    coeffs[t] += group.sign(sigma);
  }
  std::erase_if(coeffs, [](const auto& kv) { return kv.second == 0; });
  return coeffs;
}

SparseVector polytabloid(const TabloidModule& module, ElementId w, Field field) {
  SparseVector out(module.dimension(), field);
  for (const auto& [t, c] : polytabloid_coefficients(module, w)) out.set(t, Scalar(field, c));
  return out;
}

SpechtModuleData build_specht_module(const TabloidModule& module, Field field, bool cross_check) {
  SpechtModuleData s;
  s.module = &module;
  s.field = field;
  s.basis = SubspaceBasis(module.dimension(), field);
  for (ElementId d : distinguished_reps(module.psi_prime(), module.group())) {
    SparseVector e = polytabloid(module, d, field);
    s.basis.insert(e);
    s.generators.emplace_back(d, std::move(e));
  }
  if (cross_check) s.cross_check = span_over_group(module, field) == s.basis;
  return s;
}

SubspaceBasis span_over_group(const TabloidModule& module, Field field) {
  SubspaceBasis span(module.dimension(), field);
  for (ElementId w = 0; w < module.group().order(); ++w) span.insert(polytabloid(module, w, field));
  return span;
}

Scalar bilinear_form(const SparseVector& a, const SparseVector& b) { return exactlin::dot(a, b); }

SubspaceBasis radical(const SpechtModuleData& s) {
  return exactlin::intersect(s.basis, exactlin::form_complement(s.basis));
}

QuotientDimensions quotient_dimension(const SpechtModuleData& s) {
  QuotientDimensions dims;
  dims.specht = s.dimension();
  dims.radical = radical(s).rank();
  dims.quotient = dims.specht - dims.radical;
  return dims;
}

Matrix matrix_of(const SpechtModuleData& s, const GroupElement& w) {
  if (s.dimension() == 0) throw std::invalid_argument("matrix of the zero module");
  const std::size_t n = s.dimension();
  Matrix m(n, n, s.field);
  for (std::size_t j = 0; j < n; ++j) {
    const auto coords = s.basis.coordinates(s.module->act(w, s.basis.rows()[j]));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = coords[i];
  }
  return m;
}

Matrix matrix_of(const SpechtModuleData& s, const GroupElement& w, const Frame& basis) {
  if (s.dimension() == 0) throw std::invalid_argument("matrix of the zero module");
  if (basis.span() != s.basis) throw std::invalid_argument("frame does not span the module");
  const std::size_t n = basis.size();
  Matrix m(n, n, s.field);
  for (std::size_t j = 0; j < n; ++j) {
    const auto coords = basis.coordinates(s.module->act(w, basis.vectors()[j]));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = coords[i];
  }
  return m;
}

Scalar character_value(const SpechtModuleData& s, const GroupElement& w) {
  // Echelon coordinates are the pivot entries, so the diagonal entry for row
  // r is just (w . b_r)[pivot_r].
  Scalar trace = Scalar::zero(s.field);
  for (std::size_t r = 0; r < s.dimension(); ++r) {
    trace += s.module->act(w, s.basis.rows()[r]).at(s.basis.pivots()[r]);
  }
  return trace;
}

Rational character_norm(const SpechtModuleData& s) {
  if (!s.field.is_rational()) {
    throw std::domain_error("character norm needs characteristic zero");
  }
  const WeylGroup& group = s.module->group();
  std::vector<Scalar> values;
  values.reserve(group.order());
  for (const auto& w : group.elements()) values.push_back(character_value(s, w));
  Rational total = 0;
  for (ElementId w = 0; w < group.order(); ++w) {
    total += values[w].rational() * values[group.invert(w)].rational();
  }
  return total / static_cast<unsigned long>(group.order());
}

}  // namespace weylspecht
