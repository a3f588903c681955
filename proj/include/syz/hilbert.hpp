#pragma once

#include "syz/algebra.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace syz {

/// Numerator N(t) of the Hilbert series N(t) / (1-t)^n of R / (gens), as
/// coefficients of t^0, t^1, ... with trailing zeros removed.
std::vector<std::int64_t> hilbert_numerator(std::span<const Monomial> gens);

/// Sum over components of the numerators of R^r / (leading module), where every
/// basis element has degree 0.
std::vector<std::int64_t> hilbert_numerator(std::span<const ModuleMonomial> lead, std::uint32_t rank);

} // namespace syz
