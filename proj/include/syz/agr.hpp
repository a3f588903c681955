#pragma once

#include "syz/algebra.hpp"
#include "syz/ordering.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace syz {

/// Monomials of degree e in nvars variables, decreasing under `order`.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned e,
                                          BaseOrder order = BaseOrder::degrevlex);

/// g applied to the dual form f by differentiation: x^a sends x^b to
/// b! / (b-a)! x^(b-a). Both arguments are polynomials (component 0).
ModuleVector apolar_action(const ModuleVector& g, const ModuleVector& f, const PrimeField& field);

struct AgrParams {
  int n = 6;             // ring has n+1 variables
  int d = 5;             // socle degree
  int s = 18;            // number of linear forms
  std::uint32_t p = 10007;
  std::uint64_t seed = 1;
};

struct AgrIdeal {
  std::size_t nvars = 0;
  std::vector<std::vector<Coeff>> linear_forms;
  /// f = sum of the d-th powers of the linear forms.
  ModuleVector form;
  /// Minimal generators of the annihilator of f, by increasing degree.
  std::vector<ModuleVector> generators;
  /// Hilbert function h_0..h_d of R / Ann(f).
  std::vector<std::size_t> hilbert;
};

struct ApolarIdeal {
  /// Minimal generators of Ann(f), by increasing degree.
  std::vector<ModuleVector> generators;
  /// Hilbert function h_0..h_d of R / Ann(f).
  std::vector<std::size_t> hilbert;
};

/// Annihilator of a nonzero form f of degree d in nvars variables, computed
/// degree by degree from catalecticant kernels up to degree d+1.
ApolarIdeal apolar_ideal(const ModuleVector& f, std::size_t nvars, const PrimeField& field);

/// Generic value min(C(n+e, n), s, C(n+d-e, n)) for e = 0..d.
std::vector<std::size_t> expected_agr_hilbert(int n, int d, int s);

/// Throws std::invalid_argument for a bad params and std::domain_error when f
/// vanishes.
AgrIdeal gen_agr(const AgrParams& params);

/// Random forms of the given degrees. Each monomial is present with
/// probability `density`; every form keeps at least one term.
std::vector<ModuleVector> gen_random_homogeneous(std::size_t nvars, std::span<const int> degrees,
                                                 std::uint32_t p, std::uint64_t seed,
                                                 double density = 1.0);

} // namespace syz
