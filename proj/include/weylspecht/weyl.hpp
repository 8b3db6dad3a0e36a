#pragma once

// The Weyl group W(Phi) realised as permutations of the root index set.
//
// Composition convention: compose(a, b) acts as "first b, then a", so the word
// tau_1 tau_2 tau_3 applies tau_3 first. Words use 1-based generator indices.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "weylspecht/error.hpp"
#include "weylspecht/rootsys.hpp"

namespace weylspecht {

using ElementId = std::size_t;
using Word = std::vector<int>;

inline constexpr std::size_t kDefaultGroupLimit = 100000;

class GroupElement {
 public:
  GroupElement() = default;
  // Throws std::invalid_argument unless perm is a bijection.
  explicit GroupElement(std::vector<RootId> perm);
  static GroupElement identity(std::size_t degree);

  std::size_t degree() const noexcept { return perm_.size(); }
  std::span<const RootId> perm() const noexcept { return perm_; }
  RootId operator()(RootId r) const { return perm_[r]; }
  bool is_identity() const noexcept;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<RootId> perm_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
Root apply(const RootSystem& phi, const GroupElement& w, const Root& r);
// Images of a set of roots, sorted.
std::vector<RootId> image(const GroupElement& w, std::span<const RootId> roots);

// tau_i, 1 <= i <= rank.
GroupElement simple_reflection(const RootSystem& phi, int i);
GroupElement reflection(const RootSystem& phi, RootId alpha);
GroupElement word_to_element(const RootSystem& phi, std::span<const int> word);

// "1 3 2" -> {1, 3, 2}; the empty string is the empty word.
Word parse_word(std::string_view text);
std::string format_word(std::span<const int> word);

// Number of positive roots sent to negative roots.
int length(const RootSystem& phi, const GroupElement& w);
int sign(const RootSystem& phi, const GroupElement& w);

class WeylGroup {
 public:
  const RootSystem& root_system() const noexcept { return *phi_; }
  std::size_t order() const noexcept { return elements_.size(); }

  std::span<const GroupElement> elements() const noexcept { return elements_; }
  const GroupElement& element(ElementId id) const { return elements_.at(id); }
  // Shortest word found by the breadth-first search; its length is the
  // Coxeter length of the element.
  const Word& reduced_word(ElementId id) const { return words_.at(id); }
  int length(ElementId id) const { return static_cast<int>(words_.at(id).size()); }
  int sign(ElementId id) const { return length(id) % 2 == 0 ? 1 : -1; }

  std::optional<ElementId> find(const GroupElement& g) const;
  ElementId id_of(const GroupElement& g) const;
  ElementId identity() const noexcept { return 0; }

  ElementId multiply(ElementId a, ElementId b) const { return id_of(compose(element(a), element(b))); }
  ElementId invert(ElementId a) const { return id_of(inverse(element(a))); }

 private:
  friend WeylGroup generate_group(const RootSystem& phi, std::size_t limit);

  const RootSystem* phi_ = nullptr;
  std::vector<GroupElement> elements_;
  std::vector<Word> words_;
  std::unordered_map<GroupElement, ElementId, GroupElementHash> index_;
};

// All of W(Phi) in breadth-first order over the simple reflections, identity
// first. The root system must outlive the returned group. Throws
// GroupLimitError when more than `limit` elements are found.
WeylGroup generate_group(const RootSystem& phi, std::size_t limit = kDefaultGroupLimit);

// Closure of {tau_gamma : gamma in gens}, identity first, breadth-first order.
std::vector<GroupElement> subgroup_generated(const RootSystem& phi, std::span<const Root> gens,
                                             std::size_t limit = kDefaultGroupLimit);

}  // namespace weylspecht
