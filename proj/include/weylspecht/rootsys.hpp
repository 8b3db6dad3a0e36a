#pragma once

// Crystallographic root systems stored in the simple-root basis.
//
// A root a_1 alpha_1 + ... + a_n alpha_n is held as its integer coefficient
// vector and printed in the compact digit form "a1a2...an" (a leading '-'
// negates the whole root). Inner products come from an exact rational Gram
// matrix of the simple roots.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "weylspecht/error.hpp"

namespace weylspecht {

using Rational = mpq_class;
using RootId = std::uint32_t;

inline constexpr int kMaxClassicalRank = 8;

struct CartanType {
  char series = 'A';  // A, B, C, D, E, F, G
  int rank = 1;

  // Accepts "A3", "a3", "A_3". Throws ParseError on malformed text; the
  // rank/series combination is validated by build_root_system.
  static CartanType parse(std::string_view text);
  std::string to_string() const;

  friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

class Root {
 public:
  Root() = default;
  explicit Root(std::vector<int> coords) : coords_(std::move(coords)) {}
  Root(std::initializer_list<int> coords) : coords_(coords) {}

  std::size_t rank() const noexcept { return coords_.size(); }
  std::span<const int> coords() const noexcept { return coords_; }
  int operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const noexcept;
  bool is_positive() const noexcept;  // first nonzero coordinate > 0

  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b) { return a + (-b); }

  friend auto operator<=>(const Root&, const Root&) = default;

 private:
  std::vector<int> coords_;
};

class RootSystem {
 public:
  const CartanType& type() const noexcept { return type_; }
  std::string label() const { return type_.to_string(); }
  int rank() const noexcept { return type_.rank; }

  std::size_t size() const noexcept { return roots_.size(); }
  std::size_t positive_count() const noexcept { return positive_count_; }
  std::span<const Root> roots() const noexcept { return roots_; }
  const Root& root(RootId id) const { return roots_.at(id); }
  bool is_positive(RootId id) const noexcept { return id < positive_count_; }
  RootId negation(RootId id) const noexcept {
    return id < positive_count_ ? id + static_cast<RootId>(positive_count_)
                                : id - static_cast<RootId>(positive_count_);
  }
  // alpha_i for 1 <= i <= rank.
  RootId simple_root(int i) const;

  std::optional<RootId> find(const Root& r) const;
  // Throws std::invalid_argument if r is not a root.
  RootId id_of(const Root& r) const;

  const std::vector<std::vector<Rational>>& gram() const noexcept { return gram_; }
  Rational inner_product(const Root& u, const Root& v) const;
  Rational inner_product(RootId u, RootId v) const;
  Rational norm2(RootId id) const { return inner_product(id, id); }

  // v - 2 (alpha, v) / (alpha, alpha) * alpha. Throws std::invalid_argument for
  // alpha = 0 and std::logic_error if the coefficient is not an integer.
  Root reflect(const Root& alpha, const Root& v) const;
  // Table lookup for roots of the system.
  RootId reflect(RootId alpha, RootId v) const noexcept {
    return reflection_table_[static_cast<std::size_t>(alpha) * roots_.size() + v];
  }

  // {label, rank, positive_count, gram, roots: [[a1, ..., an], ...]}. Gram
  // entries are integers where possible and "p/q" strings otherwise.
  nlohmann::json to_json() const;

 private:
  friend RootSystem build_root_system(const CartanType& type);

  CartanType type_;
  std::vector<std::vector<Rational>> gram_;
  std::vector<Root> roots_;
  std::size_t positive_count_ = 0;
  std::map<Root, RootId> index_;
  std::vector<RootId> reflection_table_;
};

// Supported: A_n, B_n, C_n (1 <= n <= 8), D_n (2 <= n <= 8), G2, F4.
// Throws ParseError for unknown series and std::out_of_range for bad ranks.
RootSystem build_root_system(const CartanType& type);
RootSystem build_root_system(std::string_view label);

// Gram matrix of the simple roots for any finite type, including E6-E8 which
// build_root_system does not construct.
std::vector<std::vector<Rational>> simple_gram(const CartanType& type);

enum class RootCheck { kStrict, kWarn, kNone };

// "110", "-100", or the comma form "1,-2,0" (optionally parenthesised).
Root parse_root(const RootSystem& phi, std::string_view text, RootCheck check = RootCheck::kStrict);
std::string format_root(const RootSystem& phi, const Root& r);
std::string format_root(const RootSystem& phi, RootId id);

// Comma-separated list of roots: "1000,0100,0001". Roots that need the comma
// form are written in parentheses: "(1,0,10),0100".
std::vector<Root> parse_root_list(const RootSystem& phi, std::string_view text,
                                  RootCheck check = RootCheck::kStrict);
std::string format_root_list(const RootSystem& phi, std::span<const Root> roots);

}  // namespace weylspecht
