#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace syz {

inline constexpr std::size_t kMaxVariables = 16;
inline constexpr std::uint32_t kMaxExponent = 1u << 15;

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Arithmetic in Z/p for a prime p < 2^31. Elements are plain residues in [0, p).
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Throws std::domain_error for a == 0.
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  /// Maps any integer to its residue.
  Coeff from_int(std::int64_t v) const;
  /// Representative in (-p/2, p/2].
  std::int64_t symmetric(Coeff a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
  std::uint32_t p_;
};

/// Field-operation counters. Plain values; threads keep their own copies and
/// merge with operator+= when done.
struct StatCounters {
  std::uint64_t n_terms = 0;
  std::uint64_t n_mult = 0;
  std::uint64_t n_add = 0;
  std::uint64_t n_canc = 0;
  std::uint64_t n_monomial_cmp = 0;

  void count_add(bool cancelled) {
    ++n_add;
    if (cancelled)
      ++n_canc;
  }

  StatCounters& operator+=(const StatCounters& o) {
    n_terms += o.n_terms;
    n_mult += o.n_mult;
    n_add += o.n_add;
    n_canc += o.n_canc;
    n_monomial_cmp += o.n_monomial_cmp;
    return *this;
  }
  friend bool operator==(const StatCounters&, const StatCounters&) = default;
};

/// Monomial of R = K[x_1..x_n] as a fixed-length packed exponent vector with
/// its total degree cached. Unused variable slots stay zero.
class Monomial {
public:
  Monomial() = default;
  /// Throws std::invalid_argument on negative exponents, exponents above
  /// kMaxExponent or more than kMaxVariables entries.
  explicit Monomial(std::span<const int> exponents);
  Monomial(std::initializer_list<int> exponents)
      : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exp_[i]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_)
      return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exp_[i] > other.exp_[i])
        return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exp_[i] != 0 && other.exp_[i] != 0)
        return false;
    return true;
  }

  /// Throws std::overflow_error if an exponent exceeds kMaxExponent.
  Monomial operator*(const Monomial& other) const {
    Monomial r;
    bool overflow = false;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      std::uint32_t e = std::uint32_t(exp_[i]) + other.exp_[i];
      overflow |= e > kMaxExponent;
      r.exp_[i] = static_cast<std::uint16_t>(e);
    }
    if (overflow)
      throw std::overflow_error("monomial exponent overflow");
    r.degree_ = degree_ + other.degree_;
    return r;
  }

  /// Precondition: other divides *this.
  Monomial operator/(const Monomial& other) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - other.exp_[i]);
    r.degree_ = degree_ - other.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exp_[i] = a.exp_[i] > b.exp_[i] ? a.exp_[i] : b.exp_[i];
      d += r.exp_[i];
    }
    r.degree_ = d;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const;

  const std::array<std::uint16_t, kMaxVariables>& exponents() const { return exp_; }

private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint32_t degree_ = 0;
};

/// m * e_comp, a monomial of a free module. Components are 0-based.
struct ModuleMonomial {
  Monomial mono;
  std::uint32_t comp = 0;

  friend bool operator==(const ModuleMonomial&, const ModuleMonomial&) = default;
};

struct ModuleMonomialHash {
  std::size_t operator()(const ModuleMonomial& m) const {
    return m.mono.hash() ^ (std::size_t(m.comp) * 0x9e3779b97f4a7c15ull);
  }
};

struct Term {
  Coeff coeff = 0;
  Monomial mono;
  std::uint32_t comp = 0;

  ModuleMonomial monomial() const { return {mono, comp}; }
  friend bool operator==(const Term&, const Term&) = default;
};

/// A scalar term c * m of R.
struct ScalarTerm {
  Coeff coeff = 1;
  Monomial mono;
  friend bool operator==(const ScalarTerm&, const ScalarTerm&) = default;
};

/// Sparse element of a free module. Terms are distinct module monomials with
/// nonzero coefficients; whether they are sorted depends on the producer
/// (see ordering.hpp for normalization).
struct ModuleVector {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;
};

/// a | b, ignoring components when a is a plain monomial.
inline bool monomial_divides(const Monomial& a, const ModuleMonomial& b) {
  return a.divides(b.mono);
}
inline bool monomial_divides(const ModuleMonomial& a, const ModuleMonomial& b) {
  return a.comp == b.comp && a.mono.divides(b.mono);
}

/// std::nullopt plays the role of the zero lcm of distinct components.
std::optional<ModuleMonomial> module_lcm(const ModuleMonomial& a, const ModuleMonomial& b);

/// t * f. One counted multiplication per term of f; the term order of f is
/// preserved. Throws std::invalid_argument for a zero coefficient.
ModuleVector term_times_vector(const ScalarTerm& t, const ModuleVector& f, const PrimeField& field,
                               StatCounters& counters);

/// Equality as term sets, independent of storage order.
bool same_terms(const ModuleVector& a, const ModuleVector& b);

/// Sorts terms by (component, exponent bytes). Cheap canonical order that
/// needs no monomial ordering; used for deterministic output.
void canonical_sort(std::vector<Term>& terms);

bool is_homogeneous(const ModuleVector& v, std::span<const int> component_twists);

/// Degree of a nonzero homogeneous vector with respect to component twists.
int vector_degree(const ModuleVector& v, std::span<const int> component_twists);

} // namespace syz
