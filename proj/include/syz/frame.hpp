#pragma once

#include "syz/algebra.hpp"
#include "syz/betti.hpp"
#include "syz/groebner.hpp"
#include "syz/ordering.hpp"

#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace syz {

/// How generators are permuted between resolution steps.
///  negdegrevlex: every generator list (including the input basis) is sorted by
///                increasing degree, then decreasing leading-monomial image.
///  input:        only the input basis is sorted that way.
///  none:         lists are kept in the order they are produced.
enum class ReorderPolicy { negdegrevlex, none, input };

ReorderPolicy parse_reorder_policy(std::string_view name);

/// Minimal generators of one leading syzygy module.
struct FrameLevel {
  std::vector<ModuleMonomial> terms;
  /// (i, j) with terms[k] = m_{ji} e_i and j < i; j is the smallest such index.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> source_pairs;
  std::vector<int> degrees;

  std::size_t size() const { return terms.size(); }
  bool empty() const { return terms.empty(); }
};

/// Minimal generating set of the leading syzygy module of generators with
/// the given leading monomials. `degrees[i]` is the degree of the i-th
/// generator; frame degrees are deg(m) + degrees[i]. Output is sorted by
/// component, then by decreasing cofactor under `order`.
FrameLevel lead_syz(std::span<const ModuleMonomial> leading, std::span<const int> degrees,
                    BaseOrder order);

/// Permutation sorting leading monomials of F_level by increasing degree,
/// then decreasing F_0 image, then increasing component: new[i] = old[perm[i]].
std::vector<std::size_t> reorder_permutation(std::span<const ModuleMonomial> leading,
                                             std::span<const int> degrees,
                                             const OrderingChain& chain, std::size_t level);

void permute_level(FrameLevel& level, std::span<const std::size_t> perm);

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

struct SchreyerFrame {
  /// levels[k-1] holds the frame terms in F_k.
  std::vector<FrameLevel> levels;
  /// Chain extended by the leading monomials of G and of every nonempty level.
  OrderingChain chain{BaseOrder::degrevlex, 1};
};

/// Frame built from the leading monomials of G alone. Stops after an empty
/// level or after `max_levels` levels.
SchreyerFrame build_frame(const GroebnerBasis& G, std::size_t max_levels = kUnbounded,
                          ReorderPolicy policy = ReorderPolicy::negdegrevlex);

/// Non-minimal Betti numbers read off the frame. Throws std::domain_error for
/// a non-homogeneous basis.
BettiTable frame_betti(const SchreyerFrame& frame, const GroebnerBasis& G);

} // namespace syz
