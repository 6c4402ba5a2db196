#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "znsum/cyclic_set.hpp"

namespace znsum {

/// Ascending comma-separated residues, e.g. "0,1,5". Empty set -> "".
inline std::string format_set(const CyclicSet& s) {
  std::string out;
  for (std::uint32_t e : s.elements()) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(e);
  }
  return out;
}

/// Parses a comma-separated list of non-negative integers, reduced mod n.
/// The empty string denotes the empty set.
inline CyclicSet parse_set(const std::string& text, std::uint32_t n) {
  CyclicSet out(n);
  std::size_t i = 0;
  const std::size_t len = text.size();
  auto skip_ws = [&] {
    while (i < len && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == len) return out;
  while (true) {
    skip_ws();
    std::size_t start = i;
    std::uint64_t value = 0;
    while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
      if (value > (1ull << 40)) throw std::invalid_argument("set literal element too large");
      ++i;
    }
    if (i == start) throw std::invalid_argument("set literal: expected a non-negative integer");
    out.insert(static_cast<std::int64_t>(value));
    skip_ws();
    if (i == len) break;
    if (text[i] != ',') throw std::invalid_argument("set literal: expected ','");
    ++i;
    if (i == len) throw std::invalid_argument("set literal: trailing ','");
  }
  return out;
}

}  // namespace znsum
