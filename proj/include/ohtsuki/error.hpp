#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ohtsuki {

/// Malformed textual input. `position` is a byte offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ohtsuki
