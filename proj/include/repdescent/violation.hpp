#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace repdescent {

/// One failed identity, located by the index tuple it was checked at.
struct Violation {
  std::string rule;
  std::vector<std::size_t> at;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation& a, const Violation& b) {
    if (auto c = a.rule <=> b.rule; c != 0) return c;
    return a.at <=> b.at;
  }
};

std::string format_tuple(const std::vector<std::size_t>& at);

}  // namespace repdescent
