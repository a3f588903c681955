#include "oracle.hpp"

#include "syz/agr.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <stdexcept>

namespace oracle {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

Exps times(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] + b[i];
  return r;
}

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

bool module_divides(const syz::ModuleMonomial& a, const syz::ModuleMonomial& b) {
  return a.comp == b.comp && divides(exps_of(a.mono), exps_of(b.mono));
}

} // namespace

Exps exps_of(const syz::Monomial& m) {
  Exps e(syz::kMaxVariables);
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = static_cast<int>(m[i]);
  return e;
}

Poly to_poly(const syz::ModuleVector& v, std::int64_t p) {
  Poly out;
  for (const auto& t : v.terms) {
    auto& c = out[{exps_of(t.mono), t.comp}];
    c = mod(c + t.coeff, p);
    if (c == 0)
      out.erase({exps_of(t.mono), t.comp});
  }
  return out;
}

Poly add(const Poly& a, const Poly& b, std::int64_t p) {
  Poly out = a;
  for (const auto& [k, c] : b) {
    auto& slot = out[k];
    slot = mod(slot + c, p);
    if (slot == 0)
      out.erase(k);
  }
  return out;
}

Poly scale(const Poly& a, std::int64_t c, const Exps& m, std::int64_t p) {
  Poly out;
  for (const auto& [k, v] : a) {
    std::int64_t w = mod(v * c, p);
    if (w != 0)
      out[{times(k.first, m), k.second}] = w;
  }
  return out;
}

Poly psi(const syz::ModuleVector& v, const std::vector<syz::ModuleVector>& gens, std::int64_t p) {
  Poly out;
  for (const auto& t : v.terms)
    out = add(out, scale(to_poly(gens.at(t.comp), p), t.coeff, exps_of(t.mono), p), p);
  return out;
}

int cmp_monomial(const Exps& a, const Exps& b, syz::BaseOrder order) {
  if (order == syz::BaseOrder::degrevlex) {
    int da = 0;
    int db = 0;
    for (int e : a)
      da += e;
    for (int e : b)
      db += e;
    if (da != db)
      return da > db ? 1 : -1;
    // The last variable in which they differ: smaller exponent is larger.
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i])
        return a[i] < b[i] ? 1 : -1;
    return 0;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i])
      return a[i] > b[i] ? 1 : -1;
  return 0;
}

int cmp_induced(std::size_t level, const syz::ModuleMonomial& a, const syz::ModuleMonomial& b,
                const Leads& leads, syz::BaseOrder order) {
  if (level == 0) {
    int c = cmp_monomial(exps_of(a.mono), exps_of(b.mono), order);
    if (c != 0)
      return c;
    if (a.comp == b.comp)
      return 0;
    return a.comp < b.comp ? 1 : -1;
  }
  const auto& la = leads.at(level - 1).at(a.comp);
  const auto& lb = leads.at(level - 1).at(b.comp);
  int c = cmp_induced(level - 1, {a.mono * la.mono, la.comp}, {b.mono * lb.mono, lb.comp}, leads,
                      order);
  if (c != 0)
    return c;
  if (a.comp == b.comp)
    return 0;
  return a.comp > b.comp ? 1 : -1;
}

syz::Term leading_term(const syz::ModuleVector& v, std::size_t level, const Leads& leads,
                       syz::BaseOrder order) {
  if (v.terms.empty())
    throw std::invalid_argument("leading term of zero");
  syz::Term best = v.terms.front();
  for (const auto& t : v.terms)
    if (cmp_induced(level, t.monomial(), best.monomial(), leads, order) > 0)
      best = t;
  return best;
}

std::vector<syz::ModuleMonomial> lead_syz_bruteforce(const std::vector<syz::ModuleMonomial>& lms,
                                                     std::size_t level, Leads leads,
                                                     syz::BaseOrder order) {
  leads.resize(level);
  leads.push_back(lms);
  std::vector<syz::ModuleMonomial> cands;
  for (std::uint32_t i = 0; i < lms.size(); ++i)
    for (std::uint32_t j = 0; j < i; ++j) {
      if (lms[i].comp != lms[j].comp)
        continue;
      const syz::Monomial l = lcm(lms[i].mono, lms[j].mono);
      syz::ModuleVector s{{{1, l / lms[i].mono, i}, {1, l / lms[j].mono, j}}};
      cands.push_back(leading_term(s, level + 1, leads, order).monomial());
    }
  std::vector<syz::ModuleMonomial> out;
  for (std::size_t a = 0; a < cands.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < cands.size() && !redundant; ++b) {
      if (a == b || !module_divides(cands[b], cands[a]))
        continue;
      // Among equal candidates keep the first.
      redundant = !(cands[a] == cands[b]) || b < a;
    }
    if (!redundant)
      out.push_back(cands[a]);
  }
  return sorted(out);
}

std::vector<syz::ModuleMonomial> sorted(std::vector<syz::ModuleMonomial> v) {
  std::sort(v.begin(), v.end(), [](const syz::ModuleMonomial& a, const syz::ModuleMonomial& b) {
    if (a.comp != b.comp)
      return a.comp < b.comp;
    return a.mono.exponents() < b.mono.exponents();
  });
  return v;
}

std::vector<std::int64_t> hilbert_numerator_count(const std::vector<syz::Monomial>& gens,
                                                  std::size_t nvars) {
  // deg N <= deg lcm(gens); count a little beyond it.
  syz::Monomial l;
  for (const auto& g : gens)
    l = lcm(l, g);
  const unsigned top = l.degree() + 1;
  std::vector<std::int64_t> h;
  for (unsigned d = 0; d <= top; ++d) {
    std::int64_t count = 0;
    for (const auto& m : syz::monomials_of_degree(nvars, d))
      if (std::none_of(gens.begin(), gens.end(), [&](const syz::Monomial& g) { return g.divides(m); }))
        ++count;
    h.push_back(count);
  }
  // Multiply by (1-t)^n and truncate.
  for (std::size_t i = 0; i < nvars; ++i)
    for (std::size_t d = h.size(); d-- > 1;)
      h[d] -= h[d - 1];
  while (!h.empty() && h.back() == 0)
    h.pop_back();
  return h;
}

std::size_t minor_rank(const syz::DenseMatrix& m, std::int64_t p) {
  std::function<std::int64_t(const std::vector<std::size_t>&, const std::vector<std::size_t>&)> det;
  det = [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) -> std::int64_t {
    if (rows.size() == 1)
      return m(rows[0], cols[0]);
    std::int64_t total = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::vector<std::size_t> r2(rows.begin() + 1, rows.end());
      std::vector<std::size_t> c2;
      for (std::size_t k = 0; k < cols.size(); ++k)
        if (k != c)
          c2.push_back(cols[k]);
      std::int64_t term = std::int64_t(m(rows[0], cols[c])) * det(r2, c2) % p;
      total = mod(total + (c % 2 == 0 ? term : -term), p);
    }
    return total;
  };
  auto subsets = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::size_t(__builtin_popcount(mask)) != k)
        continue;
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1)
          s.push_back(i);
      out.push_back(s);
    }
    return out;
  };
  for (std::size_t k = std::min(m.rows, m.cols); k > 0; --k)
    for (const auto& rs : subsets(m.rows, k))
      for (const auto& cs : subsets(m.cols, k))
        if (det(rs, cs) != 0)
          return k;
  return 0;
}

bool composes_to_zero(const syz::Resolution& res) {
  const std::int64_t p = res.field.characteristic();
  for (std::size_t k = 1; k < res.differentials.size(); ++k)
    for (const auto& col : res.differentials[k])
      if (!psi(col, res.differentials[k - 1], p).empty())
        return false;
  return true;
}

Leads resolution_leads(const syz::Resolution& res) {
  Leads leads;
  for (std::size_t k = 0; k < res.differentials.size(); ++k) {
    std::vector<syz::ModuleMonomial> level;
    for (const auto& col : res.differentials[k])
      level.push_back(leading_term(col, k, leads, res.order).monomial());
    leads.push_back(std::move(level));
  }
  return leads;
}

std::vector<CorpusIdeal> corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusIdeal> out;
  for (std::size_t i = 0; i < count; ++i) {
    CorpusIdeal c;
    c.nvars = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    c.order = c.nvars <= 3 && rng() % 3 == 0 ? syz::BaseOrder::lex : syz::BaseOrder::degrevlex;
    const int ngens = std::uniform_int_distribution<int>(1, 5)(rng);
    std::vector<int> degrees;
    for (int g = 0; g < ngens; ++g)
      degrees.push_back(std::uniform_int_distribution<int>(1, 3)(rng));
    const double density = std::array<double, 4>{0.25, 0.5, 0.75, 1.0}[rng() % 4];
    c.seed = rng();
    c.gens = syz::gen_random_homogeneous(c.nvars, degrees, kCorpusPrime, c.seed, density);
    out.push_back(std::move(c));
  }
  return out;
}

} // namespace oracle
