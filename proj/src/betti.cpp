#include "syz/betti.hpp"

#include <stdexcept>

namespace syz {

std::uint64_t BettiTable::at(int k, int j) const {
  auto it = entries_.find({k, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int k, int j, std::uint64_t count) {
  if (count != 0)
    entries_[{k, j}] += count;
}

void BettiTable::set(int k, int j, std::uint64_t count) {
  if (count == 0)
    entries_.erase({k, j});
  else
    entries_[{k, j}] = count;
}

int BettiTable::max_index() const {
  int m = -1;
  for (const auto& [key, v] : entries_)
    m = std::max(m, key.first);
  return m;
}

std::vector<std::uint64_t> BettiTable::totals() const {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(max_index() + 1), 0);
  for (const auto& [key, v] : entries_)
    out[static_cast<std::size_t>(key.first)] += v;
  return out;
}

std::vector<std::int64_t> BettiTable::euler_polynomial() const {
  std::vector<std::int64_t> out;
  for (const auto& [key, v] : entries_) {
    auto [k, j] = key;
    if (j < 0)
      throw std::domain_error("negative internal degree in Betti table");
    if (out.size() <= static_cast<std::size_t>(j))
      out.resize(static_cast<std::size_t>(j) + 1, 0);
    out[static_cast<std::size_t>(j)] += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(v);
  }
  return trim_polynomial(std::move(out));
}

std::vector<std::int64_t> trim_polynomial(std::vector<std::int64_t> p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
  return p;
}

} // namespace syz
