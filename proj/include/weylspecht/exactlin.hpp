#pragma once

// Exact linear algebra over Q and prime fields F_p.
//
// Vectors are sparse (index -> nonzero scalar). Subspaces are always held in
// reduced row-echelon form, so two SubspaceBasis objects describe the same
// subspace iff they compare equal.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace weylspecht::exactlin {

using Rational = mpq_class;

class Field {
 public:
  Field() = default;

  static Field rationals() noexcept { return Field(0); }
  // Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  // "Q", "F2", "F7", ...
  static Field parse(const std::string& name);

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }
  std::string name() const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

class Scalar {
 public:
  // Rational zero.
  Scalar() = default;
  Scalar(Field field, long value);
  // Throws std::domain_error when the denominator vanishes mod p.
  Scalar(Field field, const Rational& value);

  static Scalar zero(Field field) { return Scalar(field, 0L); }
  static Scalar one(Field field) { return Scalar(field, 1L); }

  Field field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Only valid in characteristic zero.
  const Rational& rational() const;
  // Only valid in characteristic p.
  std::uint32_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  // "p/q" (or "p" for integers) over Q, "k mod p" over F_p.
  std::string to_string() const;

 private:
  void require_same_field(const Scalar& other) const;

  Field field_;
  std::variant<Rational, std::uint32_t> value_;
};

class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVector() = default;
  SparseVector(std::size_t dimension, Field field);

  static SparseVector unit(std::size_t dimension, Field field, std::size_t index);
  static SparseVector from_integers(Field field, std::span<const long> values);

  std::size_t dimension() const noexcept { return dimension_; }
  Field field() const noexcept { return field_; }
  // Sorted by index; no stored zeros.
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t nonzeros() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }
  std::optional<std::size_t> leading_index() const;

  Scalar at(std::size_t index) const;
  void set(std::size_t index, const Scalar& value);

  // this += factor * other
  SparseVector& add_scaled(const Scalar& factor, const SparseVector& other);
  SparseVector& scale(const Scalar& factor);

  SparseVector operator-() const;
  SparseVector& operator+=(const SparseVector& rhs) { return add_scaled(Scalar::one(field_), rhs); }
  SparseVector& operator-=(const SparseVector& rhs) { return add_scaled(-Scalar::one(field_), rhs); }
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend bool operator==(const SparseVector& a, const SparseVector& b);

  std::vector<Scalar> to_dense() const;
  std::string to_string() const;

 private:
  void require_compatible(const SparseVector& other) const;

  std::size_t dimension_ = 0;
  Field field_;
  std::vector<Entry> entries_;
};

// Standard (delta) bilinear form: sum of products of matching coordinates.
Scalar dot(const SparseVector& a, const SparseVector& b);

class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  // The zero subspace of K^dimension.
  SubspaceBasis(std::size_t dimension, Field field);
  static SubspaceBasis full(std::size_t dimension, Field field);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  Field field() const noexcept { return field_; }
  const std::vector<SparseVector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  // Remainder of v after elimination against the rows.
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const;
  // Coordinates of v with respect to rows(); throws if v is not in the span.
  std::vector<Scalar> coordinates(const SparseVector& v) const;

  // Adds v to the span, keeping reduced echelon form. Returns true when the
  // rank grew.
  bool insert(SparseVector v);

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b);

 private:
  void require_compatible(const SparseVector& v) const;

  std::size_t dimension_ = 0;
  Field field_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivots_;
};

SubspaceBasis row_reduce(std::size_t dimension, Field field, std::span<const SparseVector> vectors);
// Dimension and field taken from the first vector; throws on empty input.
SubspaceBasis row_reduce(std::span<const SparseVector> vectors);

SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);
bool is_subspace(const SubspaceBasis& inner, const SubspaceBasis& outer);
bool contains(const SubspaceBasis& a, const SparseVector& v);

// {v : <v, a_i> = 0 for all basis vectors a_i} under the delta form, or under
// the diagonal form diag(weights) when weights is non-empty.
SubspaceBasis form_complement(const SubspaceBasis& a, std::span<const Scalar> weights = {});

// Dense square or rectangular matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field);
  static Matrix identity(std::size_t n, Field field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Field field() const noexcept { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Scalar trace() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

// Coordinates with respect to an arbitrary linearly independent family.
class Frame {
 public:
  // Throws std::invalid_argument if the vectors are dependent or empty.
  explicit Frame(std::vector<SparseVector> vectors);

  std::size_t size() const noexcept { return vectors_.size(); }
  const std::vector<SparseVector>& vectors() const noexcept { return vectors_; }
  const SubspaceBasis& span() const noexcept { return span_; }

  // c with v = sum_j c_j * vectors()[j]; throws if v is outside the span.
  std::vector<Scalar> coordinates(const SparseVector& v) const;

 private:
  std::vector<SparseVector> vectors_;
  SubspaceBasis span_;
  // transform_[r][j]: span_.rows()[r] = sum_j transform_[r][j] * vectors_[j]
  std::vector<std::vector<Scalar>> transform_;
};

}  // namespace weylspecht::exactlin
