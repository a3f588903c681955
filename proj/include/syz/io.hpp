#pragma once

#include "syz/algebra.hpp"
#include "syz/betti.hpp"
#include "syz/ordering.hpp"
#include "syz/resolution.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace syz {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t col, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

private:
  std::size_t line_;
  std::size_t col_;
};

struct Ring {
  PrimeField field{32003};
  std::vector<std::string> vars;
  BaseOrder order = BaseOrder::degrevlex;
};

struct InputDocument {
  Ring ring;
  std::vector<ModuleVector> polys;
};

/// `ring <p> <v1,v2,...> <dp|lp>` followed by one polynomial per line.
/// Blank lines and text after '#' are ignored.
InputDocument parse_input(std::string_view text);
Ring parse_ring_line(std::string_view line, std::size_t line_no = 1);
ModuleVector parse_polynomial(std::string_view text, const Ring& ring, std::size_t line_no = 1,
                              std::size_t col_offset = 0);

std::string format_ring(const Ring& ring);
/// Terms in decreasing order, coefficients in the symmetric range. The
/// components of the terms are ignored.
std::string format_polynomial(std::span<const Term> terms, const Ring& ring);
std::string format_input(const InputDocument& doc);

std::string serialize_resolution(const Resolution& res, const Ring& ring);
Resolution parse_resolution(std::string_view text, Ring* ring = nullptr);

/// Rows indexed by j - k, zeros shown as '-', followed by a total row.
std::string format_betti(const BettiTable& table);

std::string format_stats(const Resolution& res, bool verbose);
std::string format_stats_kv(const Resolution& res);

/// Binary PGM of phi_k: one pixel per entry, 255 for zero, 128 for one term
/// and 0 for two or more.
std::string pgm_image(const Resolution& res, std::size_t k);

} // namespace syz
