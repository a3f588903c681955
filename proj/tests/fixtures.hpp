#pragma once

#include "syz/io.hpp"

#include <string>
#include <vector>

namespace fx {

inline syz::Ring ring(std::uint32_t p, std::vector<std::string> vars,
                      syz::BaseOrder order = syz::BaseOrder::degrevlex) {
  syz::Ring r;
  r.field = syz::PrimeField(p);
  r.vars = std::move(vars);
  r.order = order;
  return r;
}

/// The four-variable lex example: three quadrics forming a Groebner basis.
inline syz::Ring wxyz() { return ring(32003, {"w", "x", "y", "z"}, syz::BaseOrder::lex); }

inline syz::ModuleVector poly(const std::string& text, const syz::Ring& r) {
  return syz::parse_polynomial(text, r);
}

/// A vector of F_k given as (component, polynomial) pairs.
inline syz::ModuleVector vec(std::initializer_list<std::pair<std::uint32_t, std::string>> parts,
                             const syz::Ring& r) {
  syz::ModuleVector v;
  for (const auto& [comp, text] : parts)
    for (syz::Term t : poly(text, r).terms) {
      t.comp = comp;
      v.terms.push_back(t);
    }
  return v;
}

inline std::vector<syz::ModuleVector> example_gens() {
  const auto r = wxyz();
  return {poly("w*x+w*z+x^2+2*x*z-z^2", r), poly("w*y-w*z-x*z-y*z-2*z^2", r),
          poly("x*y+z^2", r)};
}

inline syz::ModuleMonomial mm(const std::string& mono, std::uint32_t comp, const syz::Ring& r) {
  return {poly(mono, r).terms.at(0).mono, comp};
}

} // namespace fx
