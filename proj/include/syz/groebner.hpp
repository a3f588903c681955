#pragma once

#include "syz/algebra.hpp"
#include "syz/ordering.hpp"

#include <optional>
#include <span>
#include <vector>

namespace syz {

/// Monic generators of a submodule of F_0 = R^rank, each stored in
/// decreasing order (leading term first).
struct GroebnerBasis {
  std::vector<ModuleVector> generators;
  std::uint32_t rank = 1;
  BaseOrder order = BaseOrder::degrevlex;
  bool reduced = false;

  std::size_t size() const { return generators.size(); }
  const Term& lead(std::size_t i) const { return generators[i].terms.front(); }
  std::vector<ModuleMonomial> leading_monomials() const;
  /// Degree of each leading monomial (F_0 is untwisted).
  std::vector<int> degrees() const;
};

/// m_{ji} = lcm(LM(f_j), LM(f_i)) / LT(f_i). std::nullopt when the leading
/// monomials lie in different components.
std::optional<ScalarTerm> m_coeff(const GroebnerBasis& G, std::size_t i, std::size_t j,
                                  const PrimeField& field);

/// m_{ji} f_i - m_{ij} f_j. Throws std::invalid_argument on a component mismatch.
ModuleVector s_vector(const GroebnerBasis& G, std::size_t i, std::size_t j,
                      const PrimeField& field, StatCounters& counters);

struct Division {
  std::vector<ModuleVector> quotients; // polynomials (component 0), normalized
  ModuleVector remainder;              // normalized, no term divisible by a leading monomial
};

/// Full multivariate division. The divisor for each step is the smallest
/// index whose leading monomial divides the current leading term. Divisors
/// must be normalized and nonzero.
Division divide_with_remainder(const ModuleVector& g, std::span<const ModuleVector> divisors,
                               BaseOrder order, std::uint32_t rank, const PrimeField& field,
                               StatCounters& counters);

/// Reduced Groebner basis of the submodule generated by `generators`
/// (product and chain criteria, normal selection strategy). The output is
/// sorted by increasing degree, then decreasing leading monomial.
GroebnerBasis buchberger(std::span<const ModuleVector> generators, BaseOrder order,
                         std::uint32_t rank, const PrimeField& field,
                         StatCounters* counters = nullptr);

/// Buchberger's criterion: every S-vector reduces to zero.
bool is_groebner(const GroebnerBasis& G, const PrimeField& field);

/// Normalizes `v` at level 0 and scales it to leading coefficient 1.
void make_monic(ModuleVector& v, BaseOrder order, std::uint32_t rank, const PrimeField& field);

} // namespace syz
