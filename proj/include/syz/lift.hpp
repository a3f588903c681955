#pragma once

#include "syz/algebra.hpp"
#include "syz/frame.hpp"
#include "syz/ordering.hpp"

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace syz {

enum class LiftAlgorithm { schreyer, reduce, hybrid, tree };

LiftAlgorithm parse_lift_algorithm(std::string_view name);
std::string lift_algorithm_name(LiftAlgorithm alg);

/// Subtree liftings keyed by the coefficient-1 module monomial they lift.
/// Safe for concurrent use; a racing second insert of a key is dropped.
class SubtreeCache {
public:
  std::optional<ModuleVector> find(const ModuleMonomial& key) const;
  /// Returns the stored value (the earlier one if the key was already present).
  ModuleVector insert(const ModuleMonomial& key, ModuleVector value);

  std::size_t size() const;
  std::uint64_t hits() const { return hits_.load(); }
  std::uint64_t expansions() const { return expansions_.load(); }
  void count_hit() { ++hits_; }
  void count_expansion() { ++expansions_; }

  /// Snapshot of all entries in unspecified order.
  std::vector<std::pair<ModuleMonomial, ModuleVector>> entries() const;

private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<ModuleMonomial, ModuleVector, ModuleMonomialHash> map_;
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<std::uint64_t> expansions_{0};
};

/// The generators f_1..f_r of one resolution step, living in F_level and
/// stored leading term first. Their syzygies live in F_{level+1}, which the
/// chain must already order (chain.depth() > level).
class LiftContext {
public:
  LiftContext(const PrimeField& field, const OrderingChain& chain, std::size_t level,
              std::span<const ModuleVector> generators);

  const PrimeField& field() const { return *field_; }
  const OrderingChain& chain() const { return *chain_; }
  std::size_t level() const { return level_; }
  std::size_t size() const { return gens_.size(); }
  const ModuleVector& generator(std::size_t i) const { return gens_[i]; }
  const ModuleMonomial& leading(std::size_t i) const { return leading_[i]; }
  std::span<const ModuleMonomial> leading_monomials() const { return leading_; }

  /// Smallest index whose leading monomial divides t, starting the search at `from`.
  std::optional<std::uint32_t> divisor(const ModuleMonomial& t, std::uint32_t from = 0) const;
  bool is_lower_order(const ModuleMonomial& t) const { return !divisor(t).has_value(); }

  /// Generator i sorted decreasingly under the ordering of F_level.
  const ModuleVector& sorted_generator(std::size_t i) const;

  /// sum of c m f_i over the terms of v, normalized under F_level.
  ModuleVector psi(const ModuleVector& v, StatCounters& counters) const;

  /// Splits g into (terms divisible by some leading monomial, lower order terms).
  std::pair<ModuleVector, ModuleVector> split_lot(const ModuleVector& g) const;

private:
  const PrimeField* field_;
  const OrderingChain* chain_;
  std::size_t level_;
  std::vector<ModuleVector> gens_;
  std::vector<ModuleMonomial> leading_;
  std::vector<std::vector<std::uint32_t>> by_comp_;
  mutable std::once_flag sorted_once_;
  mutable std::vector<ModuleVector> sorted_;
};

/// Lower order terms of g.
ModuleVector lot(const ModuleVector& g, const LiftContext& ctx);

/// The three liftings of a frame term s. Output: s first, followed by the
/// remaining terms in canonical order. Throws std::logic_error when no
/// admissible divisor exists (s is not a leading syzygy).
ModuleVector lift_reduce(const ModuleMonomial& s, const LiftContext& ctx, StatCounters& counters);
ModuleVector lift_hybrid(const ModuleMonomial& s, const LiftContext& ctx, StatCounters& counters);
ModuleVector lift_tree(const ModuleMonomial& s, const LiftContext& ctx, SubtreeCache& cache,
                       StatCounters& counters);

/// Subtree lifting of c * key. Looks the key up in the cache and computes
/// (and caches) it on a miss.
ModuleVector lift_subtree(const Term& t, const LiftContext& ctx, SubtreeCache& cache,
                          StatCounters& counters);

/// One lifting per frame term, in frame order. `threads` > 1 lifts terms
/// concurrently; the resulting vectors do not depend on the thread count.
std::vector<ModuleVector> syz_lift(const LiftContext& ctx, std::span<const ModuleMonomial> frame,
                                   LiftAlgorithm alg, StatCounters& counters,
                                   unsigned threads = 1, SubtreeCache* cache = nullptr);

/// Classical Schreyer syzygies: for each pair in a minimal generating set of
/// every colon module, the S-vector reduced to zero by standard reduction.
/// Ordered by component, then by decreasing cofactor.
std::vector<ModuleVector> syz_schreyer(const LiftContext& ctx, StatCounters& counters);

} // namespace syz
