#pragma once

// Plain-text and JSON renderings of Chow classes and integers.

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

#include "segre/chow.hpp"

namespace segre {

/// Integers that fit in int64 become JSON numbers, larger ones strings.
inline nlohmann::json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

inline nlohmann::json to_json(const ChowClass& u) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : u.terms()) {  // std::map order is lexicographic
    terms.push_back({{"exp", e}, {"coeff", bigint_to_json(c)}});
  }
  return {{"ambient", u.ambient().factor_dims()}, {"terms", terms}};
}

/// "24*h1^2*h2^3 + 11*h1^2*h2^2 + ..." : codimension descending (dimension
/// ascending), then exponent vectors descending.
inline std::string to_plain(const ChowClass& u) {
  if (u.is_zero()) return "0";
  std::vector<std::pair<Exponents, BigInt>> terms(u.terms().begin(), u.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (total(a.first) != total(b.first)) return total(a.first) > total(b.first);
    return a.first > b.first;
  });
  const bool single = u.ambient().num_factors() == 1;
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += single ? std::string("h") : "h" + std::to_string(j + 1);
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace segre
