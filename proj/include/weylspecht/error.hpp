#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylspecht {

// Malformed user input: labels, root strings, words.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A group enumeration grew past its configured element limit.
class GroupLimitError : public std::runtime_error {
 public:
  explicit GroupLimitError(std::size_t limit)
      : std::runtime_error("group enumeration exceeded the limit of " + std::to_string(limit) +
                           " elements"),
        limit_(limit) {}

  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

}  // namespace weylspecht
