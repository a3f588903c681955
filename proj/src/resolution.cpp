#include "syz/resolution.hpp"

#include <chrono>
#include <stdexcept>
#include <unordered_map>

namespace syz {

namespace {

void require_graded(const Resolution& res) {
  if (!res.graded)
    throw std::domain_error("Betti numbers need a graded (homogeneous) resolution");
}

using TermMap = std::unordered_map<ModuleMonomial, Coeff, ModuleMonomialHash>;

void accumulate(TermMap& acc, const ModuleMonomial& m, Coeff c, const PrimeField& field) {
  auto [it, fresh] = acc.try_emplace(m, c);
  if (fresh)
    return;
  it->second = field.add(it->second, c);
  if (it->second == 0)
    acc.erase(it);
}

std::vector<Term> to_terms(const TermMap& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc)
    out.push_back({c, m.mono, m.comp});
  canonical_sort(out);
  return out;
}

} // namespace

std::uint64_t Resolution::n_terms() const {
  std::uint64_t n = 0;
  for (std::size_t k = 1; k < differentials.size(); ++k)
    for (const auto& col : differentials[k])
      n += col.size();
  return n;
}

double Resolution::q_sparse() const {
  double entries = 0;
  for (std::size_t k = 2; k < modules.size() && k <= differentials.size(); ++k)
    entries += double(modules[k].rank()) * double(modules[k - 1].rank());
  return entries == 0 ? 0.0 : double(n_terms()) / entries;
}

std::vector<std::size_t> reorder_generators(std::vector<ModuleVector>& gens,
                                            std::vector<int>& degrees,
                                            const OrderingChain& chain, std::size_t level) {
  std::vector<ModuleMonomial> leading;
  leading.reserve(gens.size());
  for (const auto& g : gens)
    leading.push_back(leading_term(g, chain, level).monomial());
  auto perm = reorder_permutation(leading, degrees, chain, level);
  std::vector<ModuleVector> g2;
  std::vector<int> d2;
  for (std::size_t p : perm) {
    g2.push_back(std::move(gens[p]));
    d2.push_back(degrees[p]);
  }
  gens = std::move(g2);
  degrees = std::move(d2);
  return perm;
}

Resolution resolve(std::span<const ModuleVector> gens, std::uint32_t rank, BaseOrder order,
                   const PrimeField& field, const ResolveOptions& options) {
  if (rank == 0)
    throw std::invalid_argument("resolve: rank must be positive");
  if (options.max_length == 0)
    throw std::invalid_argument("resolve: maximal length must be positive");
  Resolution res;
  res.field = field;
  res.order = order;
  const std::vector<int> zero(rank, 0);
  res.graded = true;
  for (const auto& g : gens) {
    for (const Term& t : g.terms)
      if (t.comp >= rank)
        throw std::invalid_argument("resolve: component out of range");
    res.graded = res.graded && is_homogeneous(g, zero);
  }
  res.modules.push_back({zero});

  GroebnerBasis G = buchberger(gens, order, rank, field);
  if (G.size() == 0) {
    res.minimal = res.graded;
    return res;
  }
  std::vector<int> degrees = G.degrees();
  if (options.reorder != ReorderPolicy::none)
    reorder_generators(G.generators, degrees, OrderingChain(order, rank), 0);

  const std::size_t frame_levels =
      options.max_length == kUnbounded ? kUnbounded : options.max_length - 1;
  SchreyerFrame frame = build_frame(G, frame_levels, options.reorder);
  res.modules.push_back({degrees});
  res.differentials.push_back(G.generators);

  for (std::size_t t = 0; t < frame.levels.size() && !frame.levels[t].empty(); ++t) {
    const FrameLevel& level = frame.levels[t];
    const auto start = std::chrono::steady_clock::now();
    LiftContext ctx(field, frame.chain, t, res.differentials.back());
    SubtreeCache cache;
    StatCounters ctr;
    auto syz = syz_lift(ctx, level.terms, options.alg, ctr, options.threads, &cache);
    LevelStats ls;
    ls.k = t + 2;
    ls.generators = syz.size();
    for (const auto& s : syz)
      ls.terms += s.size();
    ls.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ls.cache_hits = cache.hits();
    ls.cache_expansions = cache.expansions();
    ls.counters = ctr;
    res.levels.push_back(ls);
    res.stats += ctr;
    res.differentials.push_back(std::move(syz));
    res.modules.push_back({level.degrees});
  }
  res.stats.n_terms = res.n_terms();
  res.minimal = res.graded && !has_constant_entries(res);
  return res;
}

bool is_complex(const Resolution& res) {
  const PrimeField& field = res.field;
  for (std::size_t k = 1; k < res.differentials.size(); ++k) {
    const auto& lower = res.differentials[k - 1];
    for (const auto& col : res.differentials[k]) {
      TermMap acc;
      for (const Term& t : col.terms) {
        if (t.comp >= lower.size())
          return false;
        for (const Term& u : lower[t.comp].terms)
          accumulate(acc, {t.mono * u.mono, u.comp}, field.mul(t.coeff, u.coeff), field);
      }
      if (!acc.empty())
        return false;
    }
  }
  return true;
}

bool is_graded(const Resolution& res) {
  for (std::size_t k = 1; k <= res.differentials.size(); ++k) {
    const auto& cols = res.differentials[k - 1];
    const auto& src = res.modules[k].twists;
    const auto& dst = res.modules[k - 1].twists;
    if (cols.size() != src.size())
      return false;
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const Term& t : cols[c].terms)
        if (t.comp >= dst.size() || int(t.mono.degree()) + dst[t.comp] != src[c])
          return false;
  }
  return true;
}

bool has_constant_entries(const Resolution& res) {
  for (const auto& cols : res.differentials)
    for (const auto& col : cols)
      for (const Term& t : col.terms)
        if (t.mono.is_one())
          return true;
  return false;
}

BettiTable betti_nonminimal(const Resolution& res) {
  require_graded(res);
  BettiTable t;
  for (std::size_t k = 0; k < res.modules.size(); ++k)
    for (int j : res.modules[k].twists)
      t.add(static_cast<int>(k), j);
  return t;
}

DenseMatrix constant_block(const Resolution& res, std::size_t k, int j) {
  require_graded(res);
  if (k == 0 || k > res.differentials.size())
    throw std::out_of_range("constant_block: no such differential");
  const auto& src = res.modules[k].twists;
  const auto& dst = res.modules[k - 1].twists;
  std::vector<std::ptrdiff_t> row_of(dst.size(), -1);
  std::size_t rows = 0;
  for (std::size_t r = 0; r < dst.size(); ++r)
    if (dst[r] == j)
      row_of[r] = static_cast<std::ptrdiff_t>(rows++);
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < src.size(); ++c)
    if (src[c] == j)
      cols.push_back(c);
  DenseMatrix m(rows, cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (const Term& t : res.differentials[k - 1][cols[i]].terms)
      if (t.mono.is_one() && row_of[t.comp] >= 0)
        m(static_cast<std::size_t>(row_of[t.comp]), i) = t.coeff;
  return m;
}

BettiTable betti_minimal_from_nonminimal(const Resolution& res) {
  BettiTable t = betti_nonminimal(res);
  for (std::size_t k = 1; k <= res.differentials.size(); ++k) {
    std::vector<int> degrees(res.modules[k].twists);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    for (int j : degrees) {
      const std::uint64_t r = block_rank(constant_block(res, k, j), res.field);
      if (r == 0)
        continue;
      const int kk = static_cast<int>(k);
      if (t.at(kk, j) < r || t.at(kk - 1, j) < r)
        throw std::logic_error("minimal Betti number would be negative");
      t.set(kk, j, t.at(kk, j) - r);
      t.set(kk - 1, j, t.at(kk - 1, j) - r);
    }
  }
  return t;
}

Resolution minimize(Resolution res) {
  require_graded(res);
  const PrimeField& field = res.field;
  for (std::size_t k = 1; k <= res.differentials.size(); ++k) {
    auto& phi = res.differentials[k - 1];
    while (true) {
      std::size_t c = phi.size();
      Term pivot_term;
      for (std::size_t i = 0; i < phi.size() && c == phi.size(); ++i)
        for (const Term& t : phi[i].terms)
          if (t.mono.is_one()) {
            c = i;
            pivot_term = t;
            break;
          }
      if (c == phi.size())
        break;
      const std::uint32_t r = pivot_term.comp;
      const Coeff u_inv = field.inv(pivot_term.coeff);
      const ModuleVector pivot = phi[c];

      // Clear row r in every other column.
      for (std::size_t i = 0; i < phi.size(); ++i) {
        if (i == c)
          continue;
        std::vector<Term> row_entries;
        for (const Term& t : phi[i].terms)
          if (t.comp == r)
            row_entries.push_back(t);
        if (row_entries.empty())
          continue;
        TermMap acc;
        for (const Term& t : phi[i].terms)
          accumulate(acc, t.monomial(), t.coeff, field);
        for (const Term& a : row_entries) {
          const Coeff q = field.neg(field.mul(a.coeff, u_inv));
          for (const Term& p : pivot.terms)
            accumulate(acc, {a.mono * p.mono, p.comp}, field.mul(q, p.coeff), field);
        }
        phi[i].terms = to_terms(acc);
      }

      phi.erase(phi.begin() + static_cast<std::ptrdiff_t>(c));
      for (auto& col : phi)
        for (Term& t : col.terms) {
          if (t.comp == r)
            throw std::logic_error("minimize: pivot row not cleared");
          if (t.comp > r)
            --t.comp;
        }
      if (k < res.differentials.size())
        for (auto& col : res.differentials[k]) {
          std::erase_if(col.terms, [&](const Term& t) { return t.comp == c; });
          for (Term& t : col.terms)
            if (t.comp > c)
              --t.comp;
        }
      if (k > 1) {
        auto& below = res.differentials[k - 2];
        below.erase(below.begin() + r);
      }
      auto& src = res.modules[k].twists;
      auto& dst = res.modules[k - 1].twists;
      src.erase(src.begin() + static_cast<std::ptrdiff_t>(c));
      dst.erase(dst.begin() + r);
    }
  }
  while (!res.differentials.empty() && res.modules.back().rank() == 0) {
    res.differentials.pop_back();
    res.modules.pop_back();
  }
  for (auto& cols : res.differentials)
    for (auto& col : cols)
      canonical_sort(col.terms);
  res.stats.n_terms = res.n_terms();
  res.minimal = !has_constant_entries(res);
  return res;
}

} // namespace syz
