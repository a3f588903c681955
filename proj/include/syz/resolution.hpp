#pragma once

#include "syz/algebra.hpp"
#include "syz/betti.hpp"
#include "syz/frame.hpp"
#include "syz/groebner.hpp"
#include "syz/lift.hpp"
#include "syz/linalg.hpp"
#include "syz/ordering.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace syz {

struct GradedFreeModule {
  std::vector<int> twists;
  std::size_t rank() const { return twists.size(); }
};

struct ResolveOptions {
  LiftAlgorithm alg = LiftAlgorithm::tree;
  /// Number of differentials to compute at most.
  std::size_t max_length = kUnbounded;
  ReorderPolicy reorder = ReorderPolicy::negdegrevlex;
  unsigned threads = 1;
};

/// Per-differential figures for phi_k, k >= 2.
struct LevelStats {
  std::size_t k = 0;
  std::size_t generators = 0;
  std::uint64_t terms = 0;
  double seconds = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_expansions = 0;
  StatCounters counters;
};

struct Resolution {
  PrimeField field{32003};
  BaseOrder order = BaseOrder::degrevlex;
  /// modules[k] is F_k.
  std::vector<GradedFreeModule> modules;
  /// differentials[k-1] lists the columns of phi_k: column c is phi_k(e_c) in
  /// F_{k-1}, its terms' components being row indices.
  std::vector<std::vector<ModuleVector>> differentials;
  StatCounters stats;
  std::vector<LevelStats> levels;
  bool graded = false;
  bool minimal = false;

  std::size_t length() const { return differentials.size(); }
  /// Terms in phi_2, phi_3, ...
  std::uint64_t n_terms() const;
  /// n_terms() divided by the number of matrix entries of phi_2, phi_3, ...
  double q_sparse() const;
};

/// Applies the sort used between resolution steps to generators living in
/// F_level. Returns the permutation (new[i] = old[perm[i]]).
std::vector<std::size_t> reorder_generators(std::vector<ModuleVector>& gens,
                                            std::vector<int>& degrees,
                                            const OrderingChain& chain, std::size_t level);

/// Free resolution of R^rank / <gens>. Non-homogeneous input is resolved as
/// well, but the result is flagged ungraded and the Betti operations refuse it.
Resolution resolve(std::span<const ModuleVector> gens, std::uint32_t rank, BaseOrder order,
                   const PrimeField& field, const ResolveOptions& options = {});

/// phi_k o phi_{k+1} = 0 for every k.
bool is_complex(const Resolution& res);
/// Every entry of phi_k is homogeneous of degree twist_k[c] - twist_{k-1}[r].
bool is_graded(const Resolution& res);
bool has_constant_entries(const Resolution& res);

BettiTable betti_nonminimal(const Resolution& res);
/// Constant strand of phi_k in degree j: rows are the degree-j basis elements
/// of F_{k-1}, columns those of F_k.
DenseMatrix constant_block(const Resolution& res, std::size_t k, int j);
BettiTable betti_minimal_from_nonminimal(const Resolution& res);

/// Removes unit entries by Gaussian elimination until none are left.
Resolution minimize(Resolution res);

} // namespace syz
