#include "weylspecht/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <iostream>
#include <set>
#include <stdexcept>

namespace weylspecht {

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw ParseError("bad root system label '" + std::string(text) + "'");
  const char series = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  std::string_view digits = text.substr(1);
  if (!digits.empty() && digits.front() == '_') digits.remove_prefix(1);
  int rank = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() ||
      std::string_view("ABCDEFG").find(series) == std::string_view::npos) {
    throw ParseError("bad root system label '" + std::string(text) + "'");
  }
  return CartanType{series, rank};
}

std::string CartanType::to_string() const { return std::string(1, series) + std::to_string(rank); }

bool Root::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

bool Root::is_positive() const noexcept {
  for (int c : coords_) {
    if (c != 0) return c > 0;
  }
  return false;
}

Root Root::operator-() const {
  std::vector<int> out(coords_);
  for (int& c : out) c = -c;
  return Root(std::move(out));
}

Root operator+(const Root& a, const Root& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("root length mismatch");
  std::vector<int> out(a.rank());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return Root(std::move(out));
}

// ---------------------------------------------------------------------------

std::vector<std::vector<Rational>> simple_gram(const CartanType& type) {
  const int n = type.rank;
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, 0));
  auto link = [&](int i, int j, Rational value) {
    g[i][j] = value;
    g[j][i] = value;
  };
  auto chain = [&](int upto) {
    for (int i = 0; i < n; ++i) g[i][i] = 2;
    for (int i = 0; i + 1 < upto; ++i) link(i, i + 1, -1);
  };
  switch (type.series) {
    case 'A':
      chain(n);
      break;
    case 'B':
      // alpha_i = e_i - e_{i+1}, alpha_n = e_n
      chain(n);
      g[n - 1][n - 1] = 1;
      break;
    case 'C':
      // alpha_n = 2 e_n
      chain(n);
      g[n - 1][n - 1] = 4;
      if (n >= 2) link(n - 2, n - 1, -2);
      break;
    case 'D':
      // alpha_n = e_{n-1} + e_n
      chain(n - 1);
      g[n - 1][n - 1] = 2;
      if (n >= 3) link(n - 3, n - 1, -1);
      break;
    case 'E':
      // Bourbaki numbering: 1-3-4-5-6-7-8 with 2 attached to 4.
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      // alpha_1 = e2-e3, alpha_2 = e3-e4, alpha_3 = e4, alpha_4 = (e1-e2-e3-e4)/2
      chain(n);
      g[2][2] = 1;
      g[3][3] = 1;
      link(2, 3, Rational(-1, 2));
      break;
    case 'G':
      // alpha_1 = e1-e2, alpha_2 = -2e1+e2+e3
      g[0][0] = 2;
      g[1][1] = 6;
      link(0, 1, -3);
      break;
    default:
      throw ParseError("unknown root system series '" + std::string(1, type.series) + "'");
  }
  return g;
}

namespace {

void validate_type(const CartanType& type) {
  const int n = type.rank;
  bool ok = false;
  switch (type.series) {
    case 'A':
    case 'B':
    case 'C':
      ok = n >= 1 && n <= kMaxClassicalRank;
      break;
    case 'D':
      ok = n >= 2 && n <= kMaxClassicalRank;
      break;
    case 'E':
      // Gram data exists (simple_gram) but the roots are not enumerated.
      throw std::out_of_range("root systems of type E are not constructed");
    case 'F':
      ok = n == 4;
      break;
    case 'G':
      ok = n == 2;
      break;
    default:
      throw ParseError("unknown root system series '" + std::string(1, type.series) + "'");
  }
  if (!ok) throw std::out_of_range("rank out of supported range for " + type.to_string());
}

}  // namespace

RootSystem build_root_system(const CartanType& type) {
  validate_type(type);
  const int n = type.rank;

  RootSystem phi;
  phi.type_ = type;
  phi.gram_ = simple_gram(type);

  // Cartan integers <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
  std::vector<std::vector<int>> cartan(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational c = 2 * phi.gram_[i][j] / phi.gram_[i][i];
      if (c.get_den() != 1) throw std::logic_error("non-crystallographic Gram matrix");
      cartan[i][j] = static_cast<int>(c.get_num().get_si());
    }
  }

  // Orbit of the simple roots under the simple reflections.
  std::set<Root> seen;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    Root r(std::move(e));
    if (seen.insert(r).second) queue.push_back(r);
  }
  while (!queue.empty()) {
    Root v = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      int c = 0;
      for (int j = 0; j < n; ++j) c += v[j] * cartan[i][j];
      if (c == 0) continue;
      std::vector<int> w(v.coords().begin(), v.coords().end());
      w[i] -= c;
      Root image(std::move(w));
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }

  std::vector<Root> positives;
  for (const Root& r : seen) {
    if (r.is_positive()) positives.push_back(r);
  }
  std::sort(positives.begin(), positives.end());
  phi.positive_count_ = positives.size();
  phi.roots_ = positives;
  for (const Root& r : positives) phi.roots_.push_back(-r);
  if (phi.roots_.size() != seen.size()) throw std::logic_error("root set is not negation-stable");

  for (RootId id = 0; id < phi.roots_.size(); ++id) phi.index_.emplace(phi.roots_[id], id);

  const std::size_t count = phi.roots_.size();
  phi.reflection_table_.resize(count * count);
  for (RootId a = 0; a < count; ++a) {
    for (RootId v = 0; v < count; ++v) {
      phi.reflection_table_[a * count + v] = phi.id_of(phi.reflect(phi.roots_[a], phi.roots_[v]));
    }
  }
  return phi;
}

RootSystem build_root_system(std::string_view label) {
  return build_root_system(CartanType::parse(label));
}

RootId RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank()) throw std::out_of_range("simple root index out of range");
  std::vector<int> e(rank(), 0);
  e[i - 1] = 1;
  return id_of(Root(std::move(e)));
}

std::optional<RootId> RootSystem::find(const Root& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RootId RootSystem::id_of(const Root& r) const {
  if (auto id = find(r)) return *id;
  throw std::invalid_argument("not a root of " + label() + ": " + format_root(*this, r));
}

Rational RootSystem::inner_product(const Root& u, const Root& v) const {
  const auto n = static_cast<std::size_t>(rank());
  if (u.rank() != n || v.rank() != n) throw std::invalid_argument("root length does not match rank");
  Rational total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] != 0) total += u[i] * v[j] * gram_[i][j];
    }
  }
  return total;
}

Rational RootSystem::inner_product(RootId u, RootId v) const {
  return inner_product(roots_.at(u), roots_.at(v));
}

Root RootSystem::reflect(const Root& alpha, const Root& v) const {
  if (alpha.is_zero()) throw std::invalid_argument("reflection in the zero vector");
  const Rational c = 2 * inner_product(alpha, v) / inner_product(alpha, alpha);
  if (c.get_den() != 1) throw std::logic_error("non-integral reflection coefficient");
  const long k = c.get_num().get_si();
  std::vector<int> out(v.coords().begin(), v.coords().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= static_cast<int>(k * alpha[i]);
  return Root(std::move(out));
}

nlohmann::json RootSystem::to_json() const {
  nlohmann::json gram = nlohmann::json::array();
  for (const auto& row : gram_) {
    nlohmann::json r = nlohmann::json::array();
    // Integers as numbers, anything else (F4, B_n) as "p/q".
    for (const auto& x : row) {
      if (x.get_den() == 1) {
        r.push_back(x.get_num().get_si());
      } else {
        r.push_back(x.get_str());
      }
    }
    gram.push_back(std::move(r));
  }
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& root : roots_) {
    roots.push_back(std::vector<int>(root.coords().begin(), root.coords().end()));
  }
  return {{"label", label()},
          {"rank", rank()},
          {"positive_count", positive_count_},
          {"gram", std::move(gram)},
          {"roots", std::move(roots)}};
}

// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token, std::string_view whole) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("malformed root '" + std::string(whole) + "'");
  }
  return value;
}

Root parse_coords(std::size_t rank, std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  if (text.empty()) throw ParseError("empty root");
  if (text.front() == '(') {
    if (text.back() != ')') throw ParseError("malformed root '" + std::string(whole) + "'");
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<int> coords;
  if (text.find(',') != std::string_view::npos || rank == 1) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      coords.push_back(parse_int(text.substr(start, comma - start), whole));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    int sign = 1;
    if (text.front() == '-') {
      sign = -1;
      text.remove_prefix(1);
    }
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw ParseError("malformed root '" + std::string(whole) + "'");
      coords.push_back(sign * (ch - '0'));
    }
  }
  if (coords.size() != rank) {
    throw ParseError("root '" + std::string(whole) + "' has " + std::to_string(coords.size()) +
                     " coordinates, expected " + std::to_string(rank));
  }
  return Root(std::move(coords));
}

void check_is_root(const RootSystem& phi, const Root& r, std::string_view text, RootCheck check) {
  if (check == RootCheck::kNone || phi.find(r)) return;
  const std::string message = "'" + std::string(text) + "' is not a root of " + phi.label();
  if (check == RootCheck::kStrict) throw ParseError(message);
  std::cerr << "warning: " << message << '\n';
}

bool fits_compact(const Root& r) {
  bool any_pos = false;
  bool any_neg = false;
  for (int c : r.coords()) {
    if (c > 9 || c < -9) return false;
    any_pos |= c > 0;
    any_neg |= c < 0;
  }
  return !(any_pos && any_neg);
}

}  // namespace

Root parse_root(const RootSystem& phi, std::string_view text, RootCheck check) {
  Root r = parse_coords(static_cast<std::size_t>(phi.rank()), text);
  check_is_root(phi, r, text, check);
  return r;
}

std::string format_root(const RootSystem& phi, const Root& r) {
  if (r.rank() != static_cast<std::size_t>(phi.rank())) {
    throw std::invalid_argument("root length does not match rank");
  }
  std::string out;
  if (fits_compact(r) && phi.rank() > 1) {
    const bool negative = !r.is_zero() && !r.is_positive();
    if (negative) out += '-';
    for (int c : r.coords()) out += static_cast<char>('0' + (negative ? -c : c));
    return out;
  }
  for (std::size_t i = 0; i < r.rank(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(r[i]);
  }
  return out;
}

std::string format_root(const RootSystem& phi, RootId id) { return format_root(phi, phi.root(id)); }

std::vector<Root> parse_root_list(const RootSystem& phi, std::string_view text, RootCheck check) {
  std::vector<Root> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (depth < 0) throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
      if (text[i] != ',' || depth > 0) continue;
    }
    if (depth != 0) throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
    const std::string_view token = trim(text.substr(start, i - start));
    if (token.empty()) throw ParseError("empty entry in root list '" + std::string(text) + "'");
    out.push_back(parse_root(phi, token, check));
    start = i + 1;
  }
  return out;
}

std::string format_root_list(const RootSystem& phi, std::span<const Root> roots) {
  std::string out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i > 0) out += ',';
    std::string one = format_root(phi, roots[i]);
    if (one.find(',') != std::string::npos) one = "(" + one + ")";
    out += one;
  }
  return out;
}

}  // namespace weylspecht
