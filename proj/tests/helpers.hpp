#pragma once

// Shared test utilities: parse shorthands and a tiny deterministic draw
// for exact randomized property checks.

#include <cstdint>
#include <string>
#include <vector>

#include "reflekt/linalg.hpp"

namespace testutil {

inline reflekt::Scalar S(const std::string& text) {
  return reflekt::Scalar::parse(text);
}

inline reflekt::Matrix M(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<reflekt::Scalar>> parsed;
  for (const auto& row : rows) {
    parsed.emplace_back();
    for (const auto& cell : row) parsed.back().push_back(S(cell));
  }
  return reflekt::Matrix::from_rows(parsed);
}

// xorshift64, fixed seed per test site; draws stay small so the exact
// arithmetic in property tests is cheap.
class Draw {
 public:
  explicit Draw(uint64_t seed) : state_(seed * 2654435769u + 1) {}

  uint64_t bits() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(bits() % static_cast<uint64_t>(hi - lo + 1));
  }

  reflekt::Rat rat() {
    int num = range(-9, 9);
    int den = range(1, 9);
    return reflekt::Rat(num, den);
  }

  reflekt::Rat rat_nonzero() {
    for (;;) {
      reflekt::Rat r = rat();
      if (r != 0) return r;
    }
  }

  // Random polynomial scalar in the given variables.
  reflekt::Scalar poly(const std::vector<int>& vars, int terms, int maxdeg) {
    reflekt::Scalar out(0);
    for (int t = 0; t < terms; ++t) {
      reflekt::Scalar mono(rat());
      for (int v : vars)
        mono *= reflekt::Scalar::variable(v, range(0, maxdeg));
      out += mono;
    }
    return out;
  }

  reflekt::Scalar poly_nonzero(const std::vector<int>& vars, int terms,
                               int maxdeg) {
    for (;;) {
      reflekt::Scalar p = poly(vars, terms, maxdeg);
      if (!p.is_zero()) return p;
    }
  }

  reflekt::Matrix matrix(int n, const std::vector<int>& vars) {
    reflekt::Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = poly(vars, 2, 2);
    return m;
  }

 private:
  uint64_t state_;
};

}  // namespace testutil
