#include "syz/agr.hpp"

#include "syz/linalg.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace syz {

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

void enumerate(std::size_t nvars, unsigned e, std::size_t var, std::vector<int>& exps,
               std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    exps[var] = static_cast<int>(e);
    out.emplace_back(std::span<const int>(exps));
    return;
  }
  for (unsigned a = 0; a <= e; ++a) {
    exps[var] = static_cast<int>(a);
    enumerate(nvars, e - a, var + 1, exps, out);
  }
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * std::uint64_t(n - k + i) / std::uint64_t(i);
  return r;
}

/// prod_v b_v! / (b_v - a_v)!, or 0 when a does not divide b.
Coeff falling(const Monomial& a, const Monomial& b, const PrimeField& field) {
  Coeff r = 1;
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    if (a[v] > b[v])
      return 0;
    for (unsigned t = 0; t < a[v]; ++t)
      r = field.mul(r, field.from_int(b[v] - t));
  }
  return r;
}

ModuleVector from_coefficients(std::span<const Monomial> basis, std::span<const Coeff> coeffs) {
  ModuleVector v;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i] != 0)
      v.terms.push_back({coeffs[i], basis[i], 0});
  return v;
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned e, BaseOrder order) {
  if (nvars == 0 || nvars > kMaxVariables)
    throw std::invalid_argument("monomials_of_degree: bad variable count");
  std::vector<Monomial> out;
  std::vector<int> exps(nvars, 0);
  enumerate(nvars, e, 0, exps, out);
  std::sort(out.begin(), out.end(),
            [order](const Monomial& a, const Monomial& b) { return cmp_base(a, b, order) > 0; });
  return out;
}

ModuleVector apolar_action(const ModuleVector& g, const ModuleVector& f, const PrimeField& field) {
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  for (const Term& a : g.terms)
    for (const Term& b : f.terms) {
      const Coeff k = falling(a.mono, b.mono, field);
      if (k == 0)
        continue;
      Coeff& slot = acc[b.mono / a.mono];
      slot = field.add(slot, field.mul(k, field.mul(a.coeff, b.coeff)));
    }
  ModuleVector out;
  for (const auto& [m, c] : acc)
    if (c != 0)
      out.terms.push_back({c, m, 0});
  canonical_sort(out.terms);
  return out;
}

std::vector<std::size_t> expected_agr_hilbert(int n, int d, int s) {
  std::vector<std::size_t> h;
  for (int e = 0; e <= d; ++e)
    h.push_back(static_cast<std::size_t>(
        std::min({binomial(n + e, n), std::uint64_t(s), binomial(n + d - e, n)})));
  return h;
}

ApolarIdeal apolar_ideal(const ModuleVector& f, std::size_t nv, const PrimeField& field) {
  if (f.is_zero())
    throw std::domain_error("apolar_ideal: zero form");
  if (!is_homogeneous(f, std::vector<int>{0}))
    throw std::invalid_argument("apolar_ideal: form is not homogeneous");
  const unsigned d = f.terms.front().mono.degree();
  ApolarIdeal out;
  std::unordered_map<Monomial, Coeff, MonomialHash> f_coeff;
  for (const Term& t : f.terms)
    f_coeff.emplace(t.mono, t.coeff);

  out.hilbert.push_back(1);
  std::vector<ModuleVector> previous; // basis of Ann(f) in degree e-1
  for (unsigned e = 1; e <= d + 1; ++e) {
    const std::vector<Monomial> cols = monomials_of_degree(nv, e);
    std::vector<std::vector<Coeff>> kernel;
    if (e <= d) {
      const std::vector<Monomial> rows = monomials_of_degree(nv, d - e);
      DenseMatrix cat(rows.size(), cols.size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) {
          const Monomial b = rows[r] * cols[c];
          auto it = f_coeff.find(b);
          if (it != f_coeff.end())
            cat(r, c) = field.mul(it->second, falling(cols[c], b, field));
        }
      kernel = kernel_basis(cat, field);
      out.hilbert.push_back(cols.size() - kernel.size());
    } else {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        std::vector<Coeff> unit(cols.size(), 0);
        unit[c] = 1;
        kernel.push_back(std::move(unit));
      }
    }

    std::unordered_map<Monomial, std::size_t, MonomialHash> col_of;
    for (std::size_t c = 0; c < cols.size(); ++c)
      col_of.emplace(cols[c], c);
    Echelon span(cols.size(), field);
    for (const ModuleVector& g : previous) {
      if (span.rank() == kernel.size())
        break;
      for (std::size_t v = 0; v < nv && span.rank() < kernel.size(); ++v) {
        std::vector<Coeff> row(cols.size(), 0);
        const Monomial x = Monomial::variable(v);
        for (const Term& t : g.terms)
          row[col_of.at(x * t.mono)] = t.coeff;
        span.insert(row);
      }
    }
    std::vector<ModuleVector> current;
    for (auto& k : kernel) {
      current.push_back(from_coefficients(cols, k));
      if (span.rank() < kernel.size() && span.insert(k))
        out.generators.push_back(current.back());
    }
    previous = std::move(current);
  }

  return out;
}

AgrIdeal gen_agr(const AgrParams& params) {
  if (params.n < 1 || params.d < 1 || params.s < 1)
    throw std::invalid_argument("gen_agr: n, d and s must be positive");
  if (std::size_t(params.n) + 1 > kMaxVariables)
    throw std::invalid_argument("gen_agr: too many variables");
  const PrimeField field(params.p);
  if (params.p <= std::uint32_t(params.d))
    throw std::invalid_argument("gen_agr: characteristic must exceed the socle degree");

  AgrIdeal out;
  out.nvars = std::size_t(params.n) + 1;
  const std::size_t nv = out.nvars;
  const unsigned d = static_cast<unsigned>(params.d);

  std::mt19937_64 rng(params.seed);
  std::uniform_int_distribution<std::uint32_t> any(0, params.p - 1);
  std::uniform_int_distribution<std::uint32_t> nonzero(1, params.p - 1);
  for (int i = 0; i < params.s; ++i) {
    std::vector<Coeff> l(nv);
    l[0] = nonzero(rng);
    for (std::size_t v = 1; v < nv; ++v)
      l[v] = any(rng);
    out.linear_forms.push_back(std::move(l));
  }

  // Coefficient of x^b in sum_i l_i^d is sum_i d!/b! prod_v l_iv^b_v.
  const std::vector<Monomial> top = monomials_of_degree(nv, d);
  Coeff d_fact = 1;
  for (unsigned t = 2; t <= d; ++t)
    d_fact = field.mul(d_fact, t);
  for (const Monomial& b : top) {
    Coeff b_fact = 1;
    for (std::size_t v = 0; v < nv; ++v)
      for (unsigned t = 2; t <= b[v]; ++t)
        b_fact = field.mul(b_fact, t);
    const Coeff multinomial = field.div(d_fact, b_fact);
    Coeff c = 0;
    for (const auto& l : out.linear_forms) {
      Coeff prod = multinomial;
      for (std::size_t v = 0; v < nv; ++v)
        for (unsigned t = 0; t < b[v]; ++t)
          prod = field.mul(prod, l[v]);
      c = field.add(c, prod);
    }
    if (c != 0)
      out.form.terms.push_back({c, b, 0});
  }
  if (out.form.is_zero())
    throw std::domain_error("gen_agr: the dual form vanishes");

  ApolarIdeal ann = apolar_ideal(out.form, nv, field);
  out.generators = std::move(ann.generators);
  out.hilbert = std::move(ann.hilbert);
  for (auto& g : out.generators)
    if (!apolar_action(g, out.form, field).is_zero())
      throw std::logic_error("gen_agr: generator does not annihilate the form");
  return out;
}

std::vector<ModuleVector> gen_random_homogeneous(std::size_t nvars, std::span<const int> degrees,
                                                 std::uint32_t p, std::uint64_t seed,
                                                 double density) {
  const PrimeField field(p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> nonzero(1, p - 1);
  std::bernoulli_distribution keep(std::clamp(density, 0.0, 1.0));
  std::vector<ModuleVector> out;
  for (int deg : degrees) {
    if (deg < 0)
      throw std::invalid_argument("gen_random_homogeneous: negative degree");
    const auto monos = monomials_of_degree(nvars, static_cast<unsigned>(deg));
    ModuleVector f;
    for (const Monomial& m : monos)
      if (keep(rng))
        f.terms.push_back({nonzero(rng), m, 0});
    if (f.is_zero()) {
      std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
      f.terms.push_back({nonzero(rng), monos[pick(rng)], 0});
    }
    out.push_back(std::move(f));
  }
  return out;
}

} // namespace syz
