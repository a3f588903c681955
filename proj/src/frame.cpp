#include "syz/frame.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace syz {

ReorderPolicy parse_reorder_policy(std::string_view name) {
  if (name == "negdegrevlex")
    return ReorderPolicy::negdegrevlex;
  if (name == "none")
    return ReorderPolicy::none;
  if (name == "input")
    return ReorderPolicy::input;
  throw std::invalid_argument("unknown reorder policy '" + std::string(name) + "'");
}

FrameLevel lead_syz(std::span<const ModuleMonomial> leading, std::span<const int> degrees,
                    BaseOrder order) {
  if (degrees.size() != leading.size())
    throw std::invalid_argument("lead_syz: degree list does not match");
  // Pairs with different components have lcm 0 and are skipped up front.
  std::vector<std::vector<std::uint32_t>> by_comp;
  for (std::uint32_t i = 0; i < leading.size(); ++i) {
    if (leading[i].comp >= by_comp.size())
      by_comp.resize(leading[i].comp + 1);
    by_comp[leading[i].comp].push_back(i);
  }

  struct Kept {
    Monomial cofactor;
    std::uint32_t i;
    std::uint32_t j;
  };
  std::vector<Kept> all;
  for (const auto& group : by_comp) {
    for (std::size_t a = 1; a < group.size(); ++a) {
      const std::uint32_t i = group[a];
      std::vector<Kept> kept;
      for (std::size_t b = 0; b < a; ++b) {
        const std::uint32_t j = group[b];
        const Monomial t = lcm(leading[j].mono, leading[i].mono) / leading[i].mono;
        bool divisible = false;
        for (const Kept& k : kept)
          if (k.cofactor.divides(t)) {
            divisible = true;
            break;
          }
        if (divisible)
          continue;
        std::erase_if(kept, [&](const Kept& k) { return t.divides(k.cofactor); });
        kept.push_back({t, i, j});
      }
      all.insert(all.end(), kept.begin(), kept.end());
    }
  }
  std::stable_sort(all.begin(), all.end(), [&](const Kept& a, const Kept& b) {
    if (a.i != b.i)
      return a.i < b.i;
    return cmp_base(a.cofactor, b.cofactor, order) > 0;
  });

  FrameLevel out;
  for (const Kept& k : all) {
    out.terms.push_back({k.cofactor, k.i});
    out.source_pairs.emplace_back(k.i, k.j);
    out.degrees.push_back(static_cast<int>(k.cofactor.degree()) + degrees[k.i]);
  }
  return out;
}

std::vector<std::size_t> reorder_permutation(std::span<const ModuleMonomial> leading,
                                             std::span<const int> degrees,
                                             const OrderingChain& chain, std::size_t level) {
  std::vector<Monomial> images;
  images.reserve(leading.size());
  for (const auto& m : leading)
    images.push_back(chain.image(level, m));
  std::vector<std::size_t> perm(leading.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (degrees[a] != degrees[b])
      return degrees[a] < degrees[b];
    auto c = cmp_base(images[a], images[b], chain.base());
    if (c != 0)
      return c > 0;
    return leading[a].comp < leading[b].comp;
  });
  return perm;
}

void permute_level(FrameLevel& level, std::span<const std::size_t> perm) {
  FrameLevel out;
  for (std::size_t p : perm) {
    out.terms.push_back(level.terms[p]);
    out.source_pairs.push_back(level.source_pairs[p]);
    out.degrees.push_back(level.degrees[p]);
  }
  level = std::move(out);
}

SchreyerFrame build_frame(const GroebnerBasis& G, std::size_t max_levels, ReorderPolicy policy) {
  if (G.size() == 0)
    throw std::invalid_argument("build_frame: empty basis");
  SchreyerFrame frame;
  frame.chain = OrderingChain(G.order, G.rank);
  std::vector<ModuleMonomial> leading = G.leading_monomials();
  std::vector<int> degrees = G.degrees();
  frame.chain.extend(leading);
  for (std::size_t k = 1; k <= max_levels; ++k) {
    FrameLevel level = lead_syz(leading, degrees, G.order);
    if (policy == ReorderPolicy::negdegrevlex && !level.empty())
      permute_level(level, reorder_permutation(level.terms, level.degrees, frame.chain, k));
    const bool done = level.empty();
    if (!done) {
      frame.chain.extend(level.terms);
      leading = level.terms;
      degrees = level.degrees;
    }
    frame.levels.push_back(std::move(level));
    if (done)
      break;
  }
  return frame;
}

BettiTable frame_betti(const SchreyerFrame& frame, const GroebnerBasis& G) {
  const std::vector<int> zero(G.rank, 0);
  for (const auto& g : G.generators)
    if (!is_homogeneous(g, zero))
      throw std::domain_error("Betti numbers need a homogeneous basis");
  BettiTable t;
  t.add(0, 0, G.rank);
  for (int d : G.degrees())
    t.add(1, d);
  for (std::size_t k = 0; k < frame.levels.size(); ++k)
    for (int d : frame.levels[k].degrees)
      t.add(static_cast<int>(k) + 2, d);
  return t;
}

} // namespace syz
