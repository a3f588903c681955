#include "syz/algebra.hpp"

#include <algorithm>
#include <cstring>
#include <string>
#include <unordered_map>

namespace syz {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31))
    throw std::invalid_argument("characteristic must be below 2^31: " + std::to_string(p));
  if (!is_prime(p))
    throw std::invalid_argument("characteristic is not prime: " + std::to_string(p));
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0)
    throw std::domain_error("inverse of zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0)
    t += p_;
  return static_cast<Coeff>(t);
}

Coeff PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0)
    r += p_;
  return static_cast<Coeff>(r);
}

std::int64_t PrimeField::symmetric(Coeff a) const {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
}

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVariables)
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables supported");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || static_cast<std::uint32_t>(exponents[i]) > kMaxExponent)
      throw std::invalid_argument("exponent out of range: " + std::to_string(exponents[i]));
    exp_[i] = static_cast<std::uint16_t>(exponents[i]);
    degree_ += static_cast<std::uint32_t>(exponents[i]);
  }
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  if (index >= kMaxVariables)
    throw std::invalid_argument("variable index out of range");
  if (power > kMaxExponent)
    throw std::invalid_argument("exponent out of range");
  Monomial m;
  m.exp_[index] = static_cast<std::uint16_t>(power);
  m.degree_ = power;
  return m;
}

std::size_t Monomial::hash() const {
  std::uint64_t words[kMaxVariables / 4];
  std::memcpy(words, exp_.data(), sizeof(words));
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::uint64_t w : words) {
    h ^= w;
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::optional<ModuleMonomial> module_lcm(const ModuleMonomial& a, const ModuleMonomial& b) {
  if (a.comp != b.comp)
    return std::nullopt;
  return ModuleMonomial{lcm(a.mono, b.mono), a.comp};
}

ModuleVector term_times_vector(const ScalarTerm& t, const ModuleVector& f, const PrimeField& field,
                               StatCounters& counters) {
  if (t.coeff == 0)
    throw std::invalid_argument("term_times_vector: zero coefficient");
  ModuleVector out;
  out.terms.reserve(f.terms.size());
  for (const Term& term : f.terms)
    out.terms.push_back({field.mul(t.coeff, term.coeff), t.mono * term.mono, term.comp});
  counters.n_mult += f.terms.size();
  return out;
}

namespace {

bool canonical_less(const Term& a, const Term& b) {
  if (a.comp != b.comp)
    return a.comp < b.comp;
  return a.mono.exponents() < b.mono.exponents();
}

} // namespace

void canonical_sort(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), canonical_less);
}

bool same_terms(const ModuleVector& a, const ModuleVector& b) {
  if (a.terms.size() != b.terms.size())
    return false;
  auto x = a.terms;
  auto y = b.terms;
  canonical_sort(x);
  canonical_sort(y);
  return x == y;
}

bool is_homogeneous(const ModuleVector& v, std::span<const int> component_twists) {
  if (v.terms.empty())
    return true;
  const int d = vector_degree(v, component_twists);
  for (const Term& t : v.terms)
    if (static_cast<int>(t.mono.degree()) + component_twists[t.comp] != d)
      return false;
  return true;
}

int vector_degree(const ModuleVector& v, std::span<const int> component_twists) {
  if (v.terms.empty())
    throw std::invalid_argument("degree of the zero vector");
  const Term& t = v.terms.front();
  return static_cast<int>(t.mono.degree()) + component_twists[t.comp];
}

} // namespace syz
