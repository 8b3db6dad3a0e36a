#include "weylspecht/exactlin.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylspecht::exactlin {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t mod_reduce(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(const std::string& name) {
  if (name == "Q") return rationals();
  if (name.size() >= 2 && (name[0] == 'F' || name[0] == 'f')) {
    const std::string digits = name.substr(1);
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        digits.size() <= 10) {
      const unsigned long long p = std::stoull(digits);
      if (p < (1ull << 31)) return prime(static_cast<std::uint32_t>(p));
    }
  }
  throw std::invalid_argument("unknown field '" + name + "' (expected Q or F<prime>)");
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

// ---------------------------------------------------------------------------

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field.is_rational()) {
    value_ = Rational(value);
  } else {
    value_ = mod_reduce(mpz_class(value), field.characteristic());
  }
}

Scalar::Scalar(Field field, const Rational& value) : field_(field) {
  if (field.is_rational()) {
    value_ = value;
    return;
  }
  const std::uint32_t p = field.characteristic();
  const std::uint32_t den = mod_reduce(value.get_den(), p);
  if (den == 0) throw std::domain_error("denominator vanishes in " + field.name());
  const std::uint32_t num = mod_reduce(value.get_num(), p);
  value_ = static_cast<std::uint32_t>(
      static_cast<std::uint64_t>(num) * mod_pow(den, p - 2, p) % p);
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return sgn(*q) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q == 1;
  return std::get<std::uint32_t>(value_) == 1;
}

const Rational& Scalar::rational() const {
  if (!field_.is_rational()) throw std::logic_error("scalar is not rational");
  return std::get<Rational>(value_);
}

std::uint32_t Scalar::residue() const {
  if (field_.is_rational()) throw std::logic_error("scalar is rational, not a residue");
  return std::get<std::uint32_t>(value_);
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw std::domain_error("field mismatch: " + field_.name() + " vs " + other.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar result = *this;
  if (auto* q = std::get_if<Rational>(&result.value_)) {
    *q = -*q;
  } else {
    auto& r = std::get<std::uint32_t>(result.value_);
    if (r != 0) r = field_.characteristic() - r;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* q = std::get_if<Rational>(&value_)) {
    *q += std::get<Rational>(rhs.value_);
  } else {
    const std::uint64_t p = field_.characteristic();
    auto& r = std::get<std::uint32_t>(value_);
    r = static_cast<std::uint32_t>((std::uint64_t{r} + std::get<std::uint32_t>(rhs.value_)) % p);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* q = std::get_if<Rational>(&value_)) {
    *q *= std::get<Rational>(rhs.value_);
  } else {
    const std::uint64_t p = field_.characteristic();
    auto& r = std::get<std::uint32_t>(value_);
    r = static_cast<std::uint32_t>(std::uint64_t{r} * std::get<std::uint32_t>(rhs.value_) % p);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar result = *this;
  if (auto* q = std::get_if<Rational>(&result.value_)) {
    *q = 1 / *q;
  } else {
    const std::uint32_t p = field_.characteristic();
    result.value_ = mod_pow(std::get<std::uint32_t>(value_), p - 2, p);
  }
  return result;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->get_str();
  return std::to_string(std::get<std::uint32_t>(value_)) + " mod " +
         std::to_string(field_.characteristic());
}

// ---------------------------------------------------------------------------

SparseVector::SparseVector(std::size_t dimension, Field field)
    : dimension_(dimension), field_(field) {}

SparseVector SparseVector::unit(std::size_t dimension, Field field, std::size_t index) {
  SparseVector v(dimension, field);
  v.set(index, Scalar::one(field));
  return v;
}

SparseVector SparseVector::from_integers(Field field, std::span<const long> values) {
  SparseVector v(values.size(), field);
  for (std::size_t i = 0; i < values.size(); ++i) {
    Scalar s(field, values[i]);
    if (!s.is_zero()) v.entries_.emplace_back(i, std::move(s));
  }
  return v;
}

std::optional<std::size_t> SparseVector::leading_index() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.front().first;
}

Scalar SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return Scalar::zero(field_);
}

void SparseVector::set(std::size_t index, const Scalar& value) {
  if (index >= dimension_) throw std::out_of_range("sparse vector index out of range");
  if (value.field() != field_) throw std::domain_error("field mismatch in SparseVector::set");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  const bool present = it != entries_.end() && it->first == index;
  if (value.is_zero()) {
    if (present) entries_.erase(it);
  } else if (present) {
    it->second = value;
  } else {
    entries_.emplace(it, index, value);
  }
}

void SparseVector::require_compatible(const SparseVector& other) const {
  if (dimension_ != other.dimension_) throw std::invalid_argument("dimension mismatch");
  if (field_ != other.field_) throw std::domain_error("field mismatch");
}

SparseVector& SparseVector::add_scaled(const Scalar& factor, const SparseVector& other) {
  require_compatible(other);
  if (factor.is_zero() || other.entries_.empty()) return *this;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Scalar s = std::move(a->second);
      s += factor * b->second;
      if (!s.is_zero()) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  return *this;
}

SparseVector& SparseVector::scale(const Scalar& factor) {
  if (factor.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [index, value] : entries_) value *= factor;
  return *this;
}

SparseVector SparseVector::operator-() const {
  SparseVector result = *this;
  for (auto& [index, value] : result.entries_) value = -value;
  return result;
}

bool operator==(const SparseVector& a, const SparseVector& b) {
  return a.dimension_ == b.dimension_ && a.field_ == b.field_ && a.entries_ == b.entries_;
}

std::vector<Scalar> SparseVector::to_dense() const {
  std::vector<Scalar> dense(dimension_, Scalar::zero(field_));
  for (const auto& [index, value] : entries_) dense[index] = value;
  return dense;
}

std::string SparseVector::to_string() const {
  std::string out = "[";
  bool first = true;
  for (const auto& [index, value] : entries_) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(index) + ":" + value.to_string();
  }
  return out + "]";
}

Scalar dot(const SparseVector& a, const SparseVector& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("dimension mismatch in dot");
  if (a.field() != b.field()) throw std::domain_error("field mismatch in dot");
  Scalar total = Scalar::zero(a.field());
  auto x = a.entries().begin();
  auto y = b.entries().begin();
  while (x != a.entries().end() && y != b.entries().end()) {
    if (x->first < y->first) {
      ++x;
    } else if (y->first < x->first) {
      ++y;
    } else {
      total += x->second * y->second;
      ++x;
      ++y;
    }
  }
  return total;
}

// ---------------------------------------------------------------------------

SubspaceBasis::SubspaceBasis(std::size_t dimension, Field field)
    : dimension_(dimension), field_(field) {}

SubspaceBasis SubspaceBasis::full(std::size_t dimension, Field field) {
  SubspaceBasis basis(dimension, field);
  for (std::size_t i = 0; i < dimension; ++i) {
    basis.rows_.push_back(SparseVector::unit(dimension, field, i));
    basis.pivots_.push_back(i);
  }
  return basis;
}

void SubspaceBasis::require_compatible(const SparseVector& v) const {
  if (v.dimension() != dimension_) throw std::invalid_argument("dimension mismatch");
  if (v.field() != field_) throw std::domain_error("field mismatch");
}

SparseVector SubspaceBasis::reduce(SparseVector v) const {
  require_compatible(v);
  // Rows are fully reduced, so clearing pivot columns left to right never
  // reintroduces an earlier pivot.
  for (std::size_t r = 0; r < rows_.size() && !v.is_zero(); ++r) {
    const Scalar c = v.at(pivots_[r]);
    if (!c.is_zero()) v.add_scaled(-c, rows_[r]);
  }
  return v;
}

bool SubspaceBasis::contains(const SparseVector& v) const { return reduce(v).is_zero(); }

std::vector<Scalar> SubspaceBasis::coordinates(const SparseVector& v) const {
  if (!contains(v)) throw std::invalid_argument("vector is not in the subspace");
  std::vector<Scalar> coords;
  coords.reserve(rows_.size());
  for (std::size_t pivot : pivots_) coords.push_back(v.at(pivot));
  return coords;
}

bool SubspaceBasis::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  const std::size_t pivot = *v.leading_index();
  v.scale(v.entries().front().second.inverse());
  for (auto& row : rows_) {
    const Scalar c = row.at(pivot);
    if (!c.is_zero()) row.add_scaled(-c, v);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto offset = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + offset, std::move(v));
  return true;
}

bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
  return a.dimension_ == b.dimension_ && a.field_ == b.field_ && a.rows_ == b.rows_;
}

SubspaceBasis row_reduce(std::size_t dimension, Field field, std::span<const SparseVector> vectors) {
  SubspaceBasis basis(dimension, field);
  for (const auto& v : vectors) basis.insert(v);
  return basis;
}

SubspaceBasis row_reduce(std::span<const SparseVector> vectors) {
  if (vectors.empty()) throw std::invalid_argument("row_reduce: empty input needs a dimension");
  return row_reduce(vectors.front().dimension(), vectors.front().field(), vectors);
}

SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("dimension mismatch");
  if (a.field() != b.field()) throw std::domain_error("field mismatch");
  SubspaceBasis result = a;
  for (const auto& row : b.rows()) result.insert(row);
  return result;
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("dimension mismatch");
  if (a.field() != b.field()) throw std::domain_error("field mismatch");
  // Zassenhaus: reduce rows (a_i | a_i) and (b_j | 0); rows whose left half
  // vanishes carry a basis of the intersection in their right half.
  const std::size_t n = a.dimension();
  const Field field = a.field();
  SubspaceBasis joint(2 * n, field);
  for (const auto& row : a.rows()) {
    SparseVector doubled(2 * n, field);
    for (const auto& [i, value] : row.entries()) doubled.set(i, value);
    for (const auto& [i, value] : row.entries()) doubled.set(n + i, value);
    joint.insert(std::move(doubled));
  }
  for (const auto& row : b.rows()) {
    SparseVector padded(2 * n, field);
    for (const auto& [i, value] : row.entries()) padded.set(i, value);
    joint.insert(std::move(padded));
  }
  SubspaceBasis result(n, field);
  for (std::size_t r = 0; r < joint.rank(); ++r) {
    if (joint.pivots()[r] < n) continue;
    SparseVector right(n, field);
    for (const auto& [i, value] : joint.rows()[r].entries()) right.set(i - n, value);
    result.insert(std::move(right));
  }
  return result;
}

bool is_subspace(const SubspaceBasis& inner, const SubspaceBasis& outer) {
  return std::all_of(inner.rows().begin(), inner.rows().end(),
                     [&](const SparseVector& v) { return outer.contains(v); });
}

bool contains(const SubspaceBasis& a, const SparseVector& v) { return a.contains(v); }

SubspaceBasis form_complement(const SubspaceBasis& a, std::span<const Scalar> weights) {
  const std::size_t n = a.dimension();
  const Field field = a.field();
  SubspaceBasis constraints = a;
  if (!weights.empty()) {
    if (weights.size() != n) throw std::invalid_argument("form weights have wrong length");
    std::vector<SparseVector> weighted;
    for (const auto& row : a.rows()) {
      SparseVector w(n, field);
      for (const auto& [i, value] : row.entries()) w.set(i, value * weights[i]);
      weighted.push_back(std::move(w));
    }
    constraints = row_reduce(n, field, weighted);
  }
  // Null space of the constraint rows: one vector per free column.
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : constraints.pivots()) is_pivot[p] = true;
  SubspaceBasis result(n, field);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    SparseVector v = SparseVector::unit(n, field, f);
    for (std::size_t r = 0; r < constraints.rank(); ++r) {
      const Scalar c = constraints.rows()[r].at(f);
      if (!c.is_zero()) v.set(constraints.pivots()[r], -c);
    }
    result.insert(std::move(v));
  }
  return result;
}

// ---------------------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
  Scalar total = Scalar::zero(field_);
  for (std::size_t i = 0; i < rows_; ++i) total += (*this)(i, i);
  return total;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  if (a.field_ != b.field_) throw std::domain_error("field mismatch");
  Matrix c(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------------------

Frame::Frame(std::vector<SparseVector> vectors) : vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw std::invalid_argument("frame needs at least one vector");
  const std::size_t n = vectors_.front().dimension();
  const std::size_t k = vectors_.size();
  const Field field = vectors_.front().field();
  // Reduce (v_j | e_j); the right halves record each echelon row as a
  // combination of the original vectors.
  SubspaceBasis augmented(n + k, field);
  for (std::size_t j = 0; j < k; ++j) {
    if (vectors_[j].dimension() != n) throw std::invalid_argument("dimension mismatch");
    SparseVector row(n + k, field);
    for (const auto& [i, value] : vectors_[j].entries()) row.set(i, value);
    row.set(n + j, Scalar::one(field));
    augmented.insert(std::move(row));
  }
  span_ = SubspaceBasis(n, field);
  for (std::size_t r = 0; r < augmented.rank(); ++r) {
    if (augmented.pivots()[r] >= n) {
      throw std::invalid_argument("frame vectors are linearly dependent");
    }
    SparseVector left(n, field);
    std::vector<Scalar> combo(k, Scalar::zero(field));
    for (const auto& [i, value] : augmented.rows()[r].entries()) {
      if (i < n) {
        left.set(i, value);
      } else {
        combo[i - n] = value;
      }
    }
    span_.insert(std::move(left));
    transform_.push_back(std::move(combo));
  }
}

std::vector<Scalar> Frame::coordinates(const SparseVector& v) const {
  const std::vector<Scalar> echelon = span_.coordinates(v);
  const Field field = span_.field();
  std::vector<Scalar> result(vectors_.size(), Scalar::zero(field));
  for (std::size_t r = 0; r < echelon.size(); ++r) {
    if (echelon[r].is_zero()) continue;
    for (std::size_t j = 0; j < result.size(); ++j) result[j] += echelon[r] * transform_[r][j];
  }
  return result;
}

}  // namespace weylspecht::exactlin
