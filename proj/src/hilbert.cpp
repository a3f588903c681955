#include "syz/hilbert.hpp"

#include "syz/betti.hpp"

#include <algorithm>

namespace syz {

namespace {

using Poly = std::vector<std::int64_t>;

void add_shifted(Poly& acc, const Poly& p, std::size_t shift) {
  if (acc.size() < p.size() + shift)
    acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    acc[i + shift] += p[i];
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const Monomial& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& m) { return m.divides(g); }))
      out.push_back(g);
  return out;
}

Poly numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty())
    return {1};
  if (gens.front().is_one())
    return {};

  bool coprime = true;
  for (std::size_t a = 0; a < gens.size() && coprime; ++a)
    for (std::size_t b = a + 1; b < gens.size() && coprime; ++b)
      coprime = gens[a].coprime(gens[b]);
  if (coprime) {
    Poly p{1};
    for (const Monomial& g : gens) {
      Poly q(p.size() + g.degree(), 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[i] += p[i];
        q[i + g.degree()] -= p[i];
      }
      p = std::move(q);
    }
    return p;
  }

  // Pivot on the variable occurring in the most generators.
  std::size_t best = 0;
  std::size_t best_count = 0;
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    std::size_t count = 0;
    for (const Monomial& g : gens)
      count += g[v] > 0;
    if (count > best_count) {
      best = v;
      best_count = count;
    }
  }
  const Monomial x = Monomial::variable(best);

  // N(I) = N(I + (x)) + t N(I : x)
  std::vector<Monomial> sum{x};
  std::vector<Monomial> colon;
  for (const Monomial& g : gens) {
    if (g[best] == 0)
      sum.push_back(g);
    colon.push_back(g[best] > 0 ? g / x : g);
  }
  Poly out = numerator(std::move(sum));
  add_shifted(out, numerator(std::move(colon)), 1);
  return out;
}

} // namespace

std::vector<std::int64_t> hilbert_numerator(std::span<const Monomial> gens) {
  return trim_polynomial(numerator({gens.begin(), gens.end()}));
}

std::vector<std::int64_t> hilbert_numerator(std::span<const ModuleMonomial> lead, std::uint32_t rank) {
  std::vector<std::vector<Monomial>> per_comp(rank);
  for (const ModuleMonomial& m : lead)
    per_comp.at(m.comp).push_back(m.mono);
  Poly total;
  for (auto& gens : per_comp)
    add_shifted(total, numerator(std::move(gens)), 0);
  return trim_polynomial(total);
}

} // namespace syz
