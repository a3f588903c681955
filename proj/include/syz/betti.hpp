#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace syz {

/// Graded Betti numbers beta_{k,j}: k is the homological index, j the
/// internal degree. Zero entries are not stored.
class BettiTable {
public:
  std::uint64_t at(int k, int j) const;
  void add(int k, int j, std::uint64_t count = 1);
  void set(int k, int j, std::uint64_t count);

  const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  int max_index() const;
  /// Column sums per homological index 0..max_index().
  std::vector<std::uint64_t> totals() const;
  /// sum_k (-1)^k sum_j beta_{k,j} t^j as coefficients of t^0, t^1, ...
  /// Internal degrees must be non-negative.
  std::vector<std::int64_t> euler_polynomial() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

/// Removes trailing zero coefficients.
std::vector<std::int64_t> trim_polynomial(std::vector<std::int64_t> p);

} // namespace syz
