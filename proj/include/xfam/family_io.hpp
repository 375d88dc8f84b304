#pragma once

// Plain-text family files:
//
//   # optional comment
//   n=6 k=3
//   1,2,3
//   1,2,4
//
// Elements are 1-based and written in ascending order; members appear in
// canonical (mask) order. The empty set is written "{}".

#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "xfam/sets.hpp"

namespace xfam {

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

inline std::string to_text(const UniformFamily& f) {
  std::string out = "n=" + std::to_string(f.n()) + " k=" + std::to_string(f.k()) + "\n";
  for (Mask m : f) {
    out += format_set(m);
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline int parse_int(const std::string& tok, int line) {
  if (tok.empty()) throw ParseError(line, "empty number");
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "not a number: '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError(line, "not a number: '" + tok + "'");
  return v;
}

}  // namespace detail

inline UniformFamily parse_family(std::istream& in) {
  std::optional<int> n, k;
  std::vector<Mask> sets;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string s = detail::trim(raw);
    if (s.empty()) continue;
    if (!n) {
      std::istringstream hdr(s);
      std::string a, b, extra;
      hdr >> a >> b;
      if (a.rfind("n=", 0) != 0 || b.rfind("k=", 0) != 0 || (hdr >> extra))
        throw ParseError(line, "expected header 'n=<n> k=<k>'");
      n = detail::parse_int(a.substr(2), line);
      k = detail::parse_int(b.substr(2), line);
      if (*n < GroundSize::kMin || *n > GroundSize::kMax)
        throw ParseError(line, "n = " + std::to_string(*n) + " outside [2, 64]");
      if (*k < 0 || *k > *n) throw ParseError(line, "k = " + std::to_string(*k) + " outside [0, n]");
      continue;
    }
    Mask m = 0;
    if (s != "{}") {
      std::istringstream row(s);
      std::string tok;
      int prev = 0;
      while (std::getline(row, tok, ',')) {
        const int e = detail::parse_int(detail::trim(tok), line);
        if (e < 1 || e > *n) throw ParseError(line, "element " + std::to_string(e) + " outside [1, n]");
        if (e <= prev) throw ParseError(line, "elements must be strictly ascending");
        prev = e;
        m |= element_bit(e);
      }
    }
    if (popcount(m) != *k)
      throw ParseError(line, "set has " + std::to_string(popcount(m)) + " elements, expected " +
                                 std::to_string(*k));
    sets.push_back(m);
  }
  if (!n) throw ParseError(line, "missing header 'n=<n> k=<k>'");
  return UniformFamily(GroundSize(*n), *k, std::move(sets));
}

inline UniformFamily parse_family(const std::string& text) {
  std::istringstream in(text);
  return parse_family(in);
}

}  // namespace xfam
