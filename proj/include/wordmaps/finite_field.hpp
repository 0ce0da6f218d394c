#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "wordmaps/word.hpp"

namespace wordmaps {

/// 2x2 matrix over Z/p, entries in [0, p).
struct ModMatrix {
  std::array<int, 4> e{};
  int p = 2;

  ModMatrix() = default;
  ModMatrix(int a, int b, int c, int d, int prime);
  static ModMatrix identity(int prime) { return {1, 0, 0, 1, prime}; }

  int trace() const { return (e[0] + e[3]) % p; }
  int det() const;
  /// Adjugate, which is the inverse in SL(2, p).
  ModMatrix adjugate() const;
  ModMatrix negated() const;
  /// Base-p digits, unique per matrix.
  std::uint32_t code() const;
  friend ModMatrix operator*(const ModMatrix& x, const ModMatrix& y);
  friend bool operator==(const ModMatrix& x, const ModMatrix& y) { return x.e == y.e && x.p == y.p; }
};

/// All of SL(2, p) in a fixed order.
std::vector<ModMatrix> sl2_elements(int p);

/// Word value for images in SL(2, p).
ModMatrix evaluate_mod(const Word& w, const std::vector<ModMatrix>& images);

class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct TraceClassCoverage {
  int trace;
  std::size_t hit = 0;
  std::size_t total = 0;
};

/// Exhaustive image of the word map on SL(2, p) or PSL(2, p). Heuristic only:
/// it says nothing about characteristic zero.
struct FFImage {
  int p = 0;
  bool projective = false;
  std::size_t group_order = 0;
  std::size_t image_size = 0;
  std::size_t tuples = 0;
  bool full = false;
  std::vector<TraceClassCoverage> by_trace;  // in PSL, traces up to sign (smaller representative)
  std::vector<ModMatrix> missing;            // up to 16 elements outside the image
  bool contains(const ModMatrix& m) const;
  std::vector<std::uint32_t> image_codes;    // sorted
};

FFImage ff_image(const Word& w, int p, bool projective, std::uint64_t max_tuples = 50'000'000);

}  // namespace wordmaps
