#include "syz/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace syz {

namespace {

std::strong_ordering cmp0(const Term& a, const Term& b, BaseOrder order) {
  auto c = cmp_base(a.mono, b.mono, order);
  if (c != 0)
    return c;
  return b.comp <=> a.comp;
}

void sort0(std::vector<Term>& terms, BaseOrder order) {
  std::sort(terms.begin(), terms.end(),
            [order](const Term& a, const Term& b) { return cmp0(a, b, order) > 0; });
}

/// p - c * m * f for normalized p and f.
std::vector<Term> sub_multiple(std::span<const Term> p, Coeff c, const Monomial& m,
                               const ModuleVector& f, BaseOrder order, const PrimeField& field,
                               StatCounters& counters) {
  std::vector<Term> out;
  out.reserve(p.size() + f.terms.size());
  const Coeff minus_c = field.neg(c);
  std::size_t a = 0;
  std::size_t b = 0;
  counters.n_mult += f.terms.size();
  while (a < p.size() && b < f.terms.size()) {
    Term fb{field.mul(minus_c, f.terms[b].coeff), m * f.terms[b].mono, f.terms[b].comp};
    auto cmp = cmp0(p[a], fb, order);
    if (cmp > 0) {
      out.push_back(p[a++]);
    } else if (cmp < 0) {
      out.push_back(fb);
      ++b;
    } else {
      Coeff s = field.add(p[a].coeff, fb.coeff);
      counters.count_add(s == 0);
      if (s != 0)
        out.push_back({s, fb.mono, fb.comp});
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), p.begin() + static_cast<std::ptrdiff_t>(a), p.end());
  for (; b < f.terms.size(); ++b)
    out.push_back({field.mul(minus_c, f.terms[b].coeff), m * f.terms[b].mono, f.terms[b].comp});
  return out;
}

/// Reduces the leading term of p while some divisor applies.
std::vector<Term> top_reduce(std::vector<Term> p, std::span<const ModuleVector> divisors,
                             std::span<const char> active, BaseOrder order,
                             const PrimeField& field, StatCounters& counters) {
  while (!p.empty()) {
    const Term lt = p.front();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!active[i])
        continue;
      const Term& d = divisors[i].terms.front();
      if (d.comp == lt.comp && d.mono.divides(lt.mono)) {
        Coeff q = field.div(lt.coeff, d.coeff);
        p = sub_multiple(p, q, lt.mono / d.mono, divisors[i], order, field, counters);
        reduced = true;
        break;
      }
    }
    if (!reduced)
      break;
  }
  return p;
}

struct Pair {
  int degree;
  std::size_t i;
  std::size_t j;
  ModuleMonomial lcm;

  bool operator<(const Pair& o) const {
    if (degree != o.degree)
      return degree < o.degree;
    if (i != o.i)
      return i < o.i;
    return j < o.j;
  }
};

} // namespace

std::vector<ModuleMonomial> GroebnerBasis::leading_monomials() const {
  std::vector<ModuleMonomial> out;
  out.reserve(generators.size());
  for (const auto& g : generators)
    out.push_back(g.terms.front().monomial());
  return out;
}

std::vector<int> GroebnerBasis::degrees() const {
  std::vector<int> out;
  out.reserve(generators.size());
  for (const auto& g : generators)
    out.push_back(static_cast<int>(g.terms.front().mono.degree()));
  return out;
}

void make_monic(ModuleVector& v, BaseOrder order, std::uint32_t rank, const PrimeField& field) {
  for (const Term& t : v.terms)
    if (t.comp >= rank)
      throw std::invalid_argument("component out of range");
  sort0(v.terms, order);
  if (v.terms.empty() || v.terms.front().coeff == 1)
    return;
  Coeff inv = field.inv(v.terms.front().coeff);
  for (Term& t : v.terms)
    t.coeff = field.mul(t.coeff, inv);
}

std::optional<ScalarTerm> m_coeff(const GroebnerBasis& G, std::size_t i, std::size_t j,
                                  const PrimeField& field) {
  const Term& li = G.lead(i);
  const Term& lj = G.lead(j);
  if (li.comp != lj.comp)
    return std::nullopt;
  return ScalarTerm{field.inv(li.coeff), lcm(li.mono, lj.mono) / li.mono};
}

ModuleVector s_vector(const GroebnerBasis& G, std::size_t i, std::size_t j,
                      const PrimeField& field, StatCounters& counters) {
  auto mji = m_coeff(G, i, j, field);
  auto mij = m_coeff(G, j, i, field);
  if (!mji || !mij)
    throw std::invalid_argument("s_vector: leading monomials in different components");
  ModuleVector left = term_times_vector(*mji, G.generators[i], field, counters);
  auto out = sub_multiple(left.terms, mij->coeff, mij->mono, G.generators[j], G.order, field,
                          counters);
  if (!out.empty() && out.front().monomial() == left.terms.front().monomial())
    throw std::logic_error("s_vector: leading terms failed to cancel");
  return ModuleVector{std::move(out)};
}

Division divide_with_remainder(const ModuleVector& g, std::span<const ModuleVector> divisors,
                               BaseOrder order, std::uint32_t rank, const PrimeField& field,
                               StatCounters& counters) {
  for (const auto& d : divisors)
    if (d.is_zero())
      throw std::invalid_argument("divide_with_remainder: zero divisor");
  Division result;
  result.quotients.resize(divisors.size());
  std::vector<Term> p = g.terms;
  for (const Term& t : p)
    if (t.comp >= rank)
      throw std::invalid_argument("component out of range");
  sort0(p, order);
  std::size_t start = 0;
  while (start < p.size()) {
    const Term lt = p[start];
    std::size_t hit = divisors.size();
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Term& d = divisors[i].terms.front();
      if (d.comp == lt.comp && d.mono.divides(lt.mono)) {
        hit = i;
        break;
      }
    }
    if (hit == divisors.size()) {
      result.remainder.terms.push_back(lt);
      ++start;
      continue;
    }
    const Term& d = divisors[hit].terms.front();
    Coeff q = field.div(lt.coeff, d.coeff);
    Monomial m = lt.mono / d.mono;
    result.quotients[hit].terms.push_back({q, m, 0});
    p = sub_multiple(std::span<const Term>(p).subspan(start), q, m, divisors[hit], order, field,
                     counters);
    start = 0;
  }
  return result;
}

GroebnerBasis buchberger(std::span<const ModuleVector> generators, BaseOrder order,
                         std::uint32_t rank, const PrimeField& field, StatCounters* counters) {
  StatCounters local;
  StatCounters& ctr = counters ? *counters : local;

  std::vector<ModuleVector> basis;
  std::vector<char> active;
  std::set<Pair> pairs;

  auto update = [&](ModuleVector h) {
    const std::size_t hi = basis.size();
    const ModuleMonomial lh = h.terms.front().monomial();
    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active[g])
        continue;
      const ModuleMonomial lg = basis[g].terms.front().monomial();
      if (lg.comp != lh.comp)
        continue;
      Monomial l = lcm(lg.mono, lh.mono);
      fresh.push_back({static_cast<int>(l.degree()), g, hi, {l, lh.comp}});
    }
    // Chain criterion among the new pairs (Gebauer-Moeller).
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Pair& p = fresh[a];
      const bool coprime = basis[p.i].terms.front().mono.coprime(lh.mono);
      bool redundant = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < fresh.size() && !redundant; ++b)
          redundant = fresh[b].lcm.mono.divides(p.lcm.mono);
        for (std::size_t b = 0; b < kept.size() && !redundant; ++b)
          redundant = kept[b].lcm.mono.divides(p.lcm.mono);
      }
      if (!redundant)
        kept.push_back(p);
    }
    // Old pairs made redundant by h.
    for (auto it = pairs.begin(); it != pairs.end();) {
      const ModuleMonomial& l = it->lcm;
      bool drop = false;
      if (l.comp == lh.comp && lh.mono.divides(l.mono)) {
        const auto& li = basis[it->i].terms.front().mono;
        const auto& lj = basis[it->j].terms.front().mono;
        drop = !(lcm(li, lh.mono) == l.mono) && !(lcm(lj, lh.mono) == l.mono);
      }
      it = drop ? pairs.erase(it) : std::next(it);
    }
    // Product criterion.
    for (const Pair& p : kept)
      if (!basis[p.i].terms.front().mono.coprime(lh.mono))
        pairs.insert(p);
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g] && basis[g].terms.front().comp == lh.comp &&
          lh.mono.divides(basis[g].terms.front().mono))
        active[g] = 0;
    basis.push_back(std::move(h));
    active.push_back(1);
  };

  for (const ModuleVector& f : generators) {
    ModuleVector h = f;
    make_monic(h, order, rank, field);
    if (h.is_zero())
      continue;
    h.terms = top_reduce(std::move(h.terms), basis, active, order, field, ctr);
    if (h.is_zero())
      continue;
    make_monic(h, order, rank, field);
    update(std::move(h));
  }

  while (!pairs.empty()) {
    Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    const ModuleVector& fi = basis[p.i];
    const ModuleVector& fj = basis[p.j];
    const Term& li = fi.terms.front();
    const Term& lj = fj.terms.front();
    ModuleVector left = term_times_vector({1, p.lcm.mono / li.mono}, fi, field, ctr);
    auto s = sub_multiple(left.terms, 1, p.lcm.mono / lj.mono, fj, order, field, ctr);
    s = top_reduce(std::move(s), basis, active, order, field, ctr);
    if (s.empty())
      continue;
    ModuleVector h{std::move(s)};
    make_monic(h, order, rank, field);
    update(std::move(h));
  }

  // Interreduce the minimal elements.
  std::vector<ModuleVector> minimal;
  for (std::size_t g = 0; g < basis.size(); ++g)
    if (active[g])
      minimal.push_back(basis[g]);
  GroebnerBasis out;
  out.rank = rank;
  out.order = order;
  out.reduced = true;
  for (std::size_t g = 0; g < minimal.size(); ++g) {
    std::vector<ModuleVector> others;
    for (std::size_t o = 0; o < minimal.size(); ++o)
      if (o != g)
        others.push_back(minimal[o]);
    ModuleVector tail{std::vector<Term>(minimal[g].terms.begin() + 1, minimal[g].terms.end())};
    auto div = divide_with_remainder(tail, others, order, rank, field, ctr);
    ModuleVector r;
    r.terms.push_back(minimal[g].terms.front());
    r.terms.insert(r.terms.end(), div.remainder.terms.begin(), div.remainder.terms.end());
    make_monic(r, order, rank, field);
    out.generators.push_back(std::move(r));
  }
  std::stable_sort(out.generators.begin(), out.generators.end(),
                   [order](const ModuleVector& a, const ModuleVector& b) {
                     const Term& la = a.terms.front();
                     const Term& lb = b.terms.front();
                     if (la.mono.degree() != lb.mono.degree())
                       return la.mono.degree() < lb.mono.degree();
                     return cmp0(la, lb, order) > 0;
                   });
  return out;
}

bool is_groebner(const GroebnerBasis& G, const PrimeField& field) {
  StatCounters scratch;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (G.lead(i).comp != G.lead(j).comp)
        continue;
      auto s = s_vector(G, i, j, field, scratch);
      auto div = divide_with_remainder(s, G.generators, G.order, G.rank, field, scratch);
      if (!div.remainder.is_zero())
        return false;
    }
  return true;
}

} // namespace syz
