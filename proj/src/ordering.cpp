#include "syz/ordering.hpp"

#include <algorithm>
#include <stdexcept>

namespace syz {

BaseOrder parse_order_name(std::string_view name) {
  if (name == "dp")
    return BaseOrder::degrevlex;
  if (name == "lp")
    return BaseOrder::lex;
  throw std::invalid_argument("unknown ordering '" + std::string(name) + "' (expected dp or lp)");
}

std::string order_name(BaseOrder order) { return order == BaseOrder::degrevlex ? "dp" : "lp"; }

OrderingChain::OrderingChain(BaseOrder base, std::uint32_t base_rank)
    : base_(base), base_rank_(base_rank) {}

std::size_t OrderingChain::rank(std::size_t level) const {
  if (level == 0)
    return base_rank_;
  if (level > levels_.size())
    throw std::out_of_range("ordering level out of range");
  return levels_[level - 1].rank;
}

void OrderingChain::check(std::size_t level, const ModuleMonomial& a) const {
  if (level > levels_.size())
    throw std::out_of_range("ordering level out of range");
  if (a.comp >= rank(level))
    throw std::out_of_range("component out of range for ordering level");
}

std::strong_ordering OrderingChain::compare(std::size_t level, const ModuleMonomial& a,
                                            const ModuleMonomial& b, StatCounters* counters) const {
  check(level, a);
  check(level, b);
  if (counters)
    ++counters->n_monomial_cmp;
  if (level == 0) {
    auto c = cmp_base(a.mono, b.mono, base_);
    if (c != 0)
      return c;
    return b.comp <=> a.comp;
  }
  const Level& L = levels_[level - 1];
  auto c = cmp_base(a.mono * L.images[a.comp], b.mono * L.images[b.comp], base_);
  if (c != 0)
    return c;
  // Equal images in F_0: walk the component chain upwards. At F_0 the smaller
  // component wins, at every induced level the larger index wins.
  const std::uint32_t* ca = &L.components[a.comp * level];
  const std::uint32_t* cb = &L.components[b.comp * level];
  for (std::size_t t = 0; t < level; ++t) {
    if (counters && t > 0)
      ++counters->n_monomial_cmp;
    if (ca[t] != cb[t])
      return t == 0 ? cb[t] <=> ca[t] : ca[t] <=> cb[t];
  }
  if (counters && level > 0)
    ++counters->n_monomial_cmp;
  return a.comp <=> b.comp;
}

Monomial OrderingChain::image(std::size_t level, const ModuleMonomial& a) const {
  check(level, a);
  if (level == 0)
    return a.mono;
  return a.mono * levels_[level - 1].images[a.comp];
}

void OrderingChain::extend(std::span<const ModuleMonomial> leading) {
  const std::size_t below = levels_.size();
  const std::size_t stride = below + 1;
  Level next;
  next.rank = leading.size();
  next.images.reserve(leading.size());
  next.components.reserve(leading.size() * stride);
  for (const ModuleMonomial& lm : leading) {
    check(below, lm);
    if (below == 0) {
      next.images.push_back(lm.mono);
      next.components.push_back(lm.comp);
    } else {
      const Level& L = levels_[below - 1];
      next.images.push_back(lm.mono * L.images[lm.comp]);
      const std::uint32_t* c = &L.components[lm.comp * below];
      next.components.insert(next.components.end(), c, c + below);
      next.components.push_back(lm.comp);
    }
  }
  levels_.push_back(std::move(next));
}

OrderingChain extend_chain(const OrderingChain& chain, std::span<const ModuleVector> generators) {
  std::vector<ModuleMonomial> leading;
  leading.reserve(generators.size());
  for (const ModuleVector& g : generators) {
    if (g.is_zero())
      throw std::invalid_argument("extend_chain: zero generator");
    leading.push_back(leading_term(g, chain, chain.depth(), false).monomial());
  }
  OrderingChain out = chain;
  out.extend(leading);
  return out;
}

void normalize(ModuleVector& v, const OrderingChain& chain, std::size_t level,
               StatCounters* counters) {
  std::sort(v.terms.begin(), v.terms.end(), DescendingAt{&chain, level, counters});
}

bool is_normalized(const ModuleVector& v, const OrderingChain& chain, std::size_t level) {
  for (std::size_t i = 1; i < v.terms.size(); ++i)
    if (chain.compare(level, v.terms[i - 1].monomial(), v.terms[i].monomial()) !=
        std::strong_ordering::greater)
      return false;
  return true;
}

ModuleVector vector_add(const ModuleVector& f, const ModuleVector& g, const OrderingChain& chain,
                        std::size_t level, const PrimeField& field, StatCounters& counters) {
  ModuleVector out;
  out.terms.reserve(f.terms.size() + g.terms.size());
  auto a = f.terms.begin();
  auto b = g.terms.begin();
  while (a != f.terms.end() && b != g.terms.end()) {
    auto c = chain.compare(level, a->monomial(), b->monomial(), &counters);
    if (c == std::strong_ordering::greater) {
      out.terms.push_back(*a++);
    } else if (c == std::strong_ordering::less) {
      out.terms.push_back(*b++);
    } else {
      Coeff s = field.add(a->coeff, b->coeff);
      counters.count_add(s == 0);
      if (s != 0)
        out.terms.push_back({s, a->mono, a->comp});
      ++a;
      ++b;
    }
  }
  out.terms.insert(out.terms.end(), a, f.terms.end());
  out.terms.insert(out.terms.end(), b, g.terms.end());
  return out;
}

const Term& leading_term(const ModuleVector& f, const OrderingChain& chain, std::size_t level,
                         bool normalized) {
  if (f.is_zero())
    throw std::invalid_argument("leading term of the zero vector");
  if (normalized)
    return f.terms.front();
  const Term* best = &f.terms.front();
  for (const Term& t : f.terms)
    if (chain.compare(level, t.monomial(), best->monomial()) == std::strong_ordering::greater)
      best = &t;
  return *best;
}

} // namespace syz
