#include "weylspecht/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace weylspecht {

GroupElement::GroupElement(std::vector<RootId> perm) : perm_(std::move(perm)) {
  std::vector<bool> hit(perm_.size(), false);
  for (RootId r : perm_) {
    if (r >= perm_.size() || hit[r]) throw std::invalid_argument("not a permutation");
    hit[r] = true;
  }
}

GroupElement GroupElement::identity(std::size_t degree) {
  GroupElement g;
  g.perm_.resize(degree);
  for (std::size_t i = 0; i < degree; ++i) g.perm_[i] = static_cast<RootId>(i);
  return g;
}

bool GroupElement::is_identity() const noexcept {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != i) return false;
  }
  return true;
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (RootId r : g.perm()) {
    h ^= r;
    h *= 1099511628211ull;
  }
  return h;
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("elements of different root systems");
  std::vector<RootId> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a(b(static_cast<RootId>(i)));
  return GroupElement(std::move(out));
}

GroupElement inverse(const GroupElement& a) {
  std::vector<RootId> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[a(static_cast<RootId>(i))] = static_cast<RootId>(i);
  return GroupElement(std::move(out));
}

Root apply(const RootSystem& phi, const GroupElement& w, const Root& r) {
  if (w.degree() != phi.size()) throw std::invalid_argument("element of a different root system");
  return phi.root(w(phi.id_of(r)));
}

std::vector<RootId> image(const GroupElement& w, std::span<const RootId> roots) {
  std::vector<RootId> out;
  out.reserve(roots.size());
  for (RootId r : roots) out.push_back(w(r));
  std::sort(out.begin(), out.end());
  return out;
}

GroupElement reflection(const RootSystem& phi, RootId alpha) {
  std::vector<RootId> perm(phi.size());
  for (RootId v = 0; v < phi.size(); ++v) perm[v] = phi.reflect(alpha, v);
  return GroupElement(std::move(perm));
}

GroupElement simple_reflection(const RootSystem& phi, int i) {
  if (i < 1 || i > phi.rank()) {
    throw std::out_of_range("generator index " + std::to_string(i) + " out of range for " +
                            phi.label());
  }
  return reflection(phi, phi.simple_root(i));
}

GroupElement word_to_element(const RootSystem& phi, std::span<const int> word) {
  GroupElement g = GroupElement::identity(phi.size());
  for (int i : word) g = compose(g, simple_reflection(phi, i));
  return g;
}

Word parse_word(std::string_view text) {
  Word word;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == ',') {
      ++i;
      continue;
    }
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || value < 1) {
      throw ParseError("malformed word '" + std::string(text) + "'");
    }
    word.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
    if (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != ',') {
      throw ParseError("malformed word '" + std::string(text) + "'");
    }
  }
  return word;
}

std::string format_word(std::span<const int> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(word[i]);
  }
  return out;
}

int length(const RootSystem& phi, const GroupElement& w) {
  int count = 0;
  for (RootId r = 0; r < phi.positive_count(); ++r) {
    if (!phi.is_positive(w(r))) ++count;
  }
  return count;
}

int sign(const RootSystem& phi, const GroupElement& w) { return length(phi, w) % 2 == 0 ? 1 : -1; }

std::optional<ElementId> WeylGroup::find(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId WeylGroup::id_of(const GroupElement& g) const {
  if (auto id = find(g)) return *id;
  throw std::invalid_argument("element is not in the group");
}

WeylGroup generate_group(const RootSystem& phi, std::size_t limit) {
  WeylGroup group;
  group.phi_ = &phi;
  std::vector<GroupElement> generators;
  for (int i = 1; i <= phi.rank(); ++i) generators.push_back(simple_reflection(phi, i));

  auto add = [&](GroupElement g, Word word) {
    if (group.elements_.size() >= limit) throw GroupLimitError(limit);
    group.index_.emplace(g, group.elements_.size());
    group.elements_.push_back(std::move(g));
    group.words_.push_back(std::move(word));
  };

  add(GroupElement::identity(phi.size()), {});
  // Right multiplication by generators: breadth-first discovery gives
  // shortest (hence reduced) words.
  for (ElementId current = 0; current < group.elements_.size(); ++current) {
    for (int i = 1; i <= phi.rank(); ++i) {
      GroupElement next = compose(group.elements_[current], generators[i - 1]);
      if (group.index_.contains(next)) continue;
      Word word = group.words_[current];
      word.push_back(i);
      add(std::move(next), std::move(word));
    }
  }
  return group;
}

std::vector<GroupElement> subgroup_generated(const RootSystem& phi, std::span<const Root> gens,
                                             std::size_t limit) {
  std::vector<GroupElement> generators;
  for (const Root& g : gens) generators.push_back(reflection(phi, phi.id_of(g)));

  std::vector<GroupElement> elements{GroupElement::identity(phi.size())};
  std::unordered_set<GroupElement, GroupElementHash> seen{elements.front()};
  for (std::size_t current = 0; current < elements.size(); ++current) {
    for (const auto& gen : generators) {
      GroupElement next = compose(elements[current], gen);
      if (seen.contains(next)) continue;
      if (elements.size() >= limit) throw GroupLimitError(limit);
      seen.insert(next);
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

}  // namespace weylspecht
