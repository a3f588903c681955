#pragma once

#include "syz/algebra.hpp"

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace syz {

enum class BaseOrder { degrevlex, lex };

/// "dp" / "lp". Throws std::invalid_argument on anything else.
BaseOrder parse_order_name(std::string_view name);
std::string order_name(BaseOrder order);

inline std::strong_ordering cmp_base(const Monomial& a, const Monomial& b, BaseOrder order) {
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  if (order == BaseOrder::degrevlex) {
    if (a.degree() != b.degree())
      return a.degree() <=> b.degree();
    for (std::size_t i = kMaxVariables; i-- > 0;)
      if (ea[i] != eb[i])
        return eb[i] <=> ea[i];
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (ea[i] != eb[i])
      return ea[i] <=> eb[i];
  return std::strong_ordering::equal;
}

/// A chain of module orderings: level 0 is the base ordering extended to
/// F_0 = R^s term-over-position (ties go to the smaller component), and level
/// k >= 1 is the ordering on F_k induced by the leading monomials of the
/// generators spanning the image of F_k in F_{k-1}.
///
/// Each level stores, per basis element, the image of its leading monomial
/// pushed all the way down to F_0 together with the component visited at
/// every intermediate level. An induced comparison then costs one base
/// comparison plus a component tiebreak walk.
class OrderingChain {
public:
  OrderingChain(BaseOrder base, std::uint32_t base_rank);

  BaseOrder base() const { return base_; }
  /// Number of induced levels; valid levels are 0..depth().
  std::size_t depth() const { return levels_.size(); }
  std::size_t rank(std::size_t level) const;

  /// Total order on monomials of F_level. Counts one monomial comparison per
  /// level visited. Throws std::out_of_range for a bad level or component.
  std::strong_ordering compare(std::size_t level, const ModuleMonomial& a, const ModuleMonomial& b,
                               StatCounters* counters = nullptr) const;

  /// The monomial of R that a monomial of F_level maps to under the leading
  /// monomials of all levels below.
  Monomial image(std::size_t level, const ModuleMonomial& a) const;

  /// Adds level depth()+1 whose basis elements have the given leading
  /// monomials in F_depth().
  void extend(std::span<const ModuleMonomial> leading);

private:
  struct Level {
    std::size_t rank = 0;
    std::vector<Monomial> images;
    // components[i * depth + t] is the component of the image of e_i at level t.
    std::vector<std::uint32_t> components;
  };

  void check(std::size_t level, const ModuleMonomial& a) const;

  BaseOrder base_;
  std::uint32_t base_rank_;
  std::vector<Level> levels_;
};

/// Returns `chain` extended by the leading monomials (under its top level) of
/// `generators`. Throws std::invalid_argument on a zero generator.
OrderingChain extend_chain(const OrderingChain& chain, std::span<const ModuleVector> generators);

/// Comparator adapter: a "greater" predicate for sorting in descending order.
struct DescendingAt {
  const OrderingChain* chain;
  std::size_t level;
  StatCounters* counters = nullptr;

  bool operator()(const ModuleMonomial& a, const ModuleMonomial& b) const {
    return chain->compare(level, a, b, counters) == std::strong_ordering::greater;
  }
  bool operator()(const Term& a, const Term& b) const {
    return (*this)(a.monomial(), b.monomial());
  }
};

/// Sorts terms strictly decreasing under the level ordering.
void normalize(ModuleVector& v, const OrderingChain& chain, std::size_t level,
               StatCounters* counters = nullptr);

bool is_normalized(const ModuleVector& v, const OrderingChain& chain, std::size_t level);

/// Sparse sum of two normalized vectors; counts additions, cancellations and
/// the comparisons of the merge.
ModuleVector vector_add(const ModuleVector& f, const ModuleVector& g, const OrderingChain& chain,
                        std::size_t level, const PrimeField& field, StatCounters& counters);

/// The maximal term. When `normalized` is set this is the first stored term.
/// Throws std::invalid_argument on the zero vector.
const Term& leading_term(const ModuleVector& f, const OrderingChain& chain, std::size_t level,
                         bool normalized = true);

} // namespace syz
