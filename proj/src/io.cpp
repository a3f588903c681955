#include "syz/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>

namespace syz {

ParseError::ParseError(std::size_t line, std::size_t col, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
                         what),
      line_(line), col_(col) {}

namespace {

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size())
        out.push_back(text.substr(start));
      break;
    }
    auto line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    out.push_back(line);
    start = nl + 1;
  }
  return out;
}

/// Whitespace separated words with their 1-based columns.
std::vector<std::pair<std::string_view, std::size_t>> words(std::string_view line) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i)
      out.emplace_back(line.substr(i, j - i), i + 1);
    i = j;
  }
  return out;
}

bool valid_name(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
    return false;
  return std::all_of(name.begin(), name.end(),
                     [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

class PolyParser {
public:
  PolyParser(std::string_view text, const Ring& ring, std::size_t line, std::size_t offset)
      : text_(text), ring_(ring), line_(line), offset_(offset) {}

  ModuleVector parse() {
    std::map<std::vector<std::uint16_t>, std::pair<Monomial, Coeff>> acc;
    skip_ws();
    if (pos_ == text_.size())
      fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size())
        break;
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [c, m] = term();
      if (negative)
        c = ring_.field.neg(c);
      const auto& e = m.exponents();
      auto& slot = acc[std::vector<std::uint16_t>(e.begin(), e.end())];
      slot.first = m;
      slot.second = ring_.field.add(slot.second, c);
    }
    ModuleVector out;
    for (const auto& [key, value] : acc)
      if (value.second != 0)
        out.terms.push_back({value.second, value.first, 0});
    std::sort(out.terms.begin(), out.terms.end(), [&](const Term& a, const Term& b) {
      return cmp_base(a.mono, b.mono, ring_.order) > 0;
    });
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, offset_ + pos_ + 1, what);
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  Coeff integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an integer");
    Coeff c = 0;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      c = ring_.field.add(ring_.field.mul(c, ring_.field.from_int(10)),
                          ring_.field.from_int(text_[pos_++] - '0'));
    return c;
  }

  unsigned exponent() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an exponent");
    unsigned e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + unsigned(text_[pos_++] - '0');
      if (e > kMaxExponent)
        fail("exponent too large");
    }
    return e;
  }

  /// Longest declared variable name starting at the cursor.
  std::optional<std::size_t> variable() {
    std::optional<std::size_t> best;
    std::size_t best_len = 0;
    for (std::size_t v = 0; v < ring_.vars.size(); ++v) {
      const auto& name = ring_.vars[v];
      if (name.size() > best_len && text_.substr(pos_, name.size()) == name) {
        best = v;
        best_len = name.size();
      }
    }
    if (best)
      pos_ += best_len;
    return best;
  }

  bool starts_factor() const {
    const auto c = static_cast<unsigned char>(peek());
    return std::isdigit(c) || std::isalpha(c) || c == '_';
  }

  std::pair<Coeff, Monomial> term() {
    Coeff c = 1;
    std::vector<int> exps(ring_.vars.size(), 0);
    bool any = false;
    while (true) {
      skip_ws();
      if (any) {
        if (peek() == '*') {
          ++pos_;
          skip_ws();
          if (!starts_factor())
            fail("expected a factor after '*'");
        } else if (!starts_factor()) {
          break;
        }
      }
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c = ring_.field.mul(c, integer());
      } else {
        auto v = variable();
        if (!v)
          fail(starts_factor() ? "unknown variable" : "expected a term");
        unsigned e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          e = exponent();
        }
        exps[*v] += static_cast<int>(e);
        if (exps[*v] > static_cast<int>(kMaxExponent))
          fail("exponent too large");
      }
      any = true;
    }
    return {c, Monomial(std::span<const int>(exps))};
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::string term_string(Coeff c, const Monomial& m, const Ring& ring, bool leading) {
  std::int64_t v = ring.field.symmetric(c);
  std::string out;
  if (v < 0) {
    out += "-";
    v = -v;
  } else if (!leading) {
    out += "+";
  }
  std::string mono;
  for (std::size_t i = 0; i < ring.vars.size(); ++i) {
    if (m[i] == 0)
      continue;
    if (!mono.empty())
      mono += "*";
    mono += ring.vars[i];
    if (m[i] > 1)
      mono += "^" + std::to_string(m[i]);
  }
  if (mono.empty())
    return out + std::to_string(v);
  if (v != 1)
    out += std::to_string(v) + "*";
  return out + mono;
}

[[noreturn]] void bad(std::size_t line, std::size_t col, const std::string& what) {
  throw ParseError(line, col, what);
}

std::size_t parse_size(std::string_view word, std::size_t line, std::size_t col) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (ec != std::errc() || p != word.data() + word.size())
    bad(line, col, "expected a non-negative integer, got '" + std::string(word) + "'");
  return v;
}

int parse_int(std::string_view word, std::size_t line, std::size_t col) {
  int v = 0;
  auto [p, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (ec != std::errc() || p != word.data() + word.size())
    bad(line, col, "expected an integer, got '" + std::string(word) + "'");
  return v;
}

} // namespace

Ring parse_ring_line(std::string_view line, std::size_t line_no) {
  auto w = words(line);
  if (w.empty() || w[0].first != "ring")
    bad(line_no, w.empty() ? 1 : w[0].second, "expected 'ring <p> <vars> <dp|lp>'");
  if (w.size() != 4)
    bad(line_no, w.back().second, "ring line needs exactly three arguments");
  std::uint64_t p = 0;
  {
    auto word = w[1].first;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), p);
    if (ec != std::errc() || ptr != word.data() + word.size())
      bad(line_no, w[1].second, "characteristic must be a positive integer");
  }
  if (p >= (1ull << 31) || !is_prime(p))
    bad(line_no, w[1].second, std::to_string(p) + " is not a prime below 2^31");
  Ring ring;
  ring.field = PrimeField(static_cast<std::uint32_t>(p));
  std::string_view names = w[2].first;
  std::size_t col = w[2].second;
  while (true) {
    auto comma = names.find(',');
    auto name = names.substr(0, comma);
    if (!valid_name(name))
      bad(line_no, col, "invalid variable name '" + std::string(name) + "'");
    if (std::find(ring.vars.begin(), ring.vars.end(), name) != ring.vars.end())
      bad(line_no, col, "duplicate variable '" + std::string(name) + "'");
    ring.vars.emplace_back(name);
    if (comma == std::string_view::npos)
      break;
    names.remove_prefix(comma + 1);
    col += comma + 1;
  }
  if (ring.vars.size() > kMaxVariables)
    bad(line_no, w[2].second, "at most " + std::to_string(kMaxVariables) + " variables");
  try {
    ring.order = parse_order_name(w[3].first);
  } catch (const std::invalid_argument& e) {
    bad(line_no, w[3].second, e.what());
  }
  return ring;
}

ModuleVector parse_polynomial(std::string_view text, const Ring& ring, std::size_t line_no,
                              std::size_t col_offset) {
  return PolyParser(text, ring, line_no, col_offset).parse();
}

InputDocument parse_input(std::string_view text) {
  InputDocument doc;
  bool have_ring = false;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = strip_comment(lines[i]);
    if (blank(line))
      continue;
    if (!have_ring) {
      doc.ring = parse_ring_line(line, i + 1);
      have_ring = true;
      continue;
    }
    doc.polys.push_back(parse_polynomial(line, doc.ring, i + 1));
  }
  if (!have_ring)
    throw ParseError(1, 1, "missing ring line");
  return doc;
}

std::string format_ring(const Ring& ring) {
  std::string out = "ring " + std::to_string(ring.field.characteristic()) + " ";
  for (std::size_t i = 0; i < ring.vars.size(); ++i)
    out += (i ? "," : "") + ring.vars[i];
  return out + " " + order_name(ring.order);
}

std::string format_polynomial(std::span<const Term> terms, const Ring& ring) {
  if (terms.empty())
    return "0";
  std::vector<Term> sorted(terms.begin(), terms.end());
  std::sort(sorted.begin(), sorted.end(), [&](const Term& a, const Term& b) {
    return cmp_base(a.mono, b.mono, ring.order) > 0;
  });
  std::string out;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    out += term_string(sorted[i].coeff, sorted[i].mono, ring, i == 0);
  return out;
}

std::string format_input(const InputDocument& doc) {
  std::string out = format_ring(doc.ring) + "\n";
  for (const auto& p : doc.polys)
    out += format_polynomial(p.terms, doc.ring) + "\n";
  return out;
}

std::string serialize_resolution(const Resolution& res, const Ring& ring) {
  std::ostringstream out;
  out << format_ring(ring) << "\n";
  out << "length " << res.length() << "\n";
  for (std::size_t k = 0; k < res.modules.size(); ++k) {
    out << "module " << k << " " << res.modules[k].rank() << " :";
    for (int t : res.modules[k].twists)
      out << " " << t;
    out << "\n";
  }
  for (std::size_t k = 1; k <= res.differentials.size(); ++k) {
    out << "map " << k << "\n";
    const auto& cols = res.differentials[k - 1];
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::map<std::uint32_t, std::vector<Term>> rows;
      for (const Term& t : cols[c].terms)
        rows[t.comp].push_back(t);
      for (const auto& [r, terms] : rows)
        out << c << " " << r << " " << format_polynomial(terms, ring) << "\n";
    }
  }
  return out.str();
}

Resolution parse_resolution(std::string_view text, Ring* ring_out) {
  const auto lines = split_lines(text);
  Resolution res;
  Ring ring;
  bool have_ring = false;
  std::size_t length = 0;
  bool have_length = false;
  std::size_t current_map = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t ln = i + 1;
    const auto line = strip_comment(lines[i]);
    if (blank(line))
      continue;
    if (!have_ring) {
      ring = parse_ring_line(line, ln);
      have_ring = true;
      continue;
    }
    auto w = words(line);
    if (w[0].first == "length") {
      if (w.size() != 2)
        bad(ln, w[0].second, "expected 'length <n>'");
      length = parse_size(w[1].first, ln, w[1].second);
      have_length = true;
      res.differentials.assign(length, {});
    } else if (w[0].first == "module") {
      if (w.size() < 4 || w[3].first != ":")
        bad(ln, w[0].second, "expected 'module <k> <rank> : <twists>'");
      const std::size_t k = parse_size(w[1].first, ln, w[1].second);
      const std::size_t rank = parse_size(w[2].first, ln, w[2].second);
      if (k != res.modules.size())
        bad(ln, w[1].second, "modules must be listed in order");
      if (w.size() - 4 != rank)
        bad(ln, w[2].second, "twist count does not match the rank");
      GradedFreeModule m;
      for (std::size_t t = 4; t < w.size(); ++t)
        m.twists.push_back(parse_int(w[t].first, ln, w[t].second));
      res.modules.push_back(std::move(m));
    } else if (w[0].first == "map") {
      if (!have_length || w.size() != 2)
        bad(ln, w[0].second, "expected 'map <k>' after the length line");
      current_map = parse_size(w[1].first, ln, w[1].second);
      if (current_map == 0 || current_map > length || current_map >= res.modules.size())
        bad(ln, w[1].second, "map index out of range");
      res.differentials[current_map - 1].assign(res.modules[current_map].rank(), {});
    } else {
      if (current_map == 0 || w.size() < 3)
        bad(ln, w[0].second, "expected '<col> <row> <polynomial>' inside a map section");
      const std::size_t c = parse_size(w[0].first, ln, w[0].second);
      const std::size_t r = parse_size(w[1].first, ln, w[1].second);
      auto& cols = res.differentials[current_map - 1];
      if (c >= cols.size())
        bad(ln, w[0].second, "column out of range");
      if (r >= res.modules[current_map - 1].rank())
        bad(ln, w[1].second, "row out of range");
      const std::size_t start = w[2].second - 1;
      ModuleVector p = parse_polynomial(line.substr(start), ring, ln, start);
      for (Term& t : p.terms) {
        t.comp = static_cast<std::uint32_t>(r);
        cols[c].terms.push_back(t);
      }
    }
  }
  if (!have_ring)
    throw ParseError(1, 1, "missing ring line");
  if (!have_length || res.modules.size() != length + 1)
    throw ParseError(lines.size(), 1, "module list does not match the length");
  for (auto& cols : res.differentials)
    for (auto& col : cols)
      canonical_sort(col.terms);
  res.field = ring.field;
  res.order = ring.order;
  res.graded = is_graded(res);
  res.minimal = res.graded && !has_constant_entries(res);
  res.stats.n_terms = res.n_terms();
  if (ring_out)
    *ring_out = ring;
  return res;
}

std::string format_betti(const BettiTable& table) {
  if (table.empty())
    return "(zero)\n";
  int max_k = table.max_index();
  int lo = 0;
  int hi = 0;
  bool first = true;
  std::size_t width = 1;
  for (const auto& [key, v] : table.entries()) {
    const int row = key.second - key.first;
    lo = first ? row : std::min(lo, row);
    hi = first ? row : std::max(hi, row);
    first = false;
  }
  const auto totals = table.totals();
  for (auto t : totals)
    width = std::max(width, std::to_string(t).size());
  width = std::max<std::size_t>(width, std::to_string(max_k).size());
  width += 2;

  auto cell = [&](const std::string& s) { return std::string(width - s.size(), ' ') + s; };
  auto label = [](const std::string& s) { return std::string(6 - std::min<std::size_t>(6, s.size()), ' ') + s; };
  std::string out = label("");
  for (int k = 0; k <= max_k; ++k)
    out += cell(std::to_string(k));
  out += "\n";
  const std::string rule(6 + width * std::size_t(max_k + 1), '-');
  out += rule + "\n";
  for (int row = lo; row <= hi; ++row) {
    out += label(std::to_string(row) + ":");
    for (int k = 0; k <= max_k; ++k) {
      auto v = table.at(k, row + k);
      out += cell(v == 0 ? "-" : std::to_string(v));
    }
    out += "\n";
  }
  out += rule + "\n";
  out += label("total:");
  for (auto t : totals)
    out += cell(std::to_string(t));
  return out + "\n";
}

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string pad(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

} // namespace

std::string format_stats(const Resolution& res, bool verbose) {
  const StatCounters& s = res.stats;
  std::string out;
  auto line = [&](const std::string& key, const std::string& value) {
    out += key + std::string(10 - key.size(), ' ') + value + "\n";
  };
  line("#Terms", std::to_string(res.n_terms()));
  line("#Mult", std::to_string(s.n_mult));
  line("#Add", std::to_string(s.n_add));
  line("#Canc", std::to_string(s.n_canc));
  line("#Cmp", std::to_string(s.n_monomial_cmp));
  line("Q_sparse", fixed(res.q_sparse(), 3));
  if (!verbose)
    return out;
  out += "\n" + pad("map", 5) + pad("#Generators", 13) + pad("#Terms", 12) + pad("Q_sparse", 10) +
         pad("hits", 10) + pad("expanded", 10) + pad("time[s]", 10) + "\n";
  for (const LevelStats& ls : res.levels) {
    const double entries =
        double(res.modules[ls.k].rank()) * double(res.modules[ls.k - 1].rank());
    out += pad("phi_" + std::to_string(ls.k), 5) + pad(std::to_string(ls.generators), 13) +
           pad(std::to_string(ls.terms), 12) +
           pad(fixed(entries == 0 ? 0.0 : double(ls.terms) / entries, 3), 10) +
           pad(std::to_string(ls.cache_hits), 10) + pad(std::to_string(ls.cache_expansions), 10) +
           pad(fixed(ls.seconds, 3), 10) + "\n";
  }
  return out;
}

std::string format_stats_kv(const Resolution& res) {
  const StatCounters& s = res.stats;
  std::string out;
  out += "n_terms=" + std::to_string(res.n_terms()) + "\n";
  out += "n_mult=" + std::to_string(s.n_mult) + "\n";
  out += "n_add=" + std::to_string(s.n_add) + "\n";
  out += "n_canc=" + std::to_string(s.n_canc) + "\n";
  out += "n_monomial_cmp=" + std::to_string(s.n_monomial_cmp) + "\n";
  out += "q_sparse=" + fixed(res.q_sparse(), 6) + "\n";
  return out;
}

std::string pgm_image(const Resolution& res, std::size_t k) {
  if (k == 0 || k > res.differentials.size())
    throw std::out_of_range("pgm_image: no such differential");
  const auto& cols = res.differentials[k - 1];
  const std::size_t width = res.modules[k].rank();
  const std::size_t height = res.modules[k - 1].rank();
  std::vector<unsigned> count(width * height, 0);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const Term& t : cols[c].terms)
      ++count[t.comp * width + c];
  std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  for (unsigned n : count)
    out.push_back(static_cast<char>(n == 0 ? 255 : n == 1 ? 128 : 0));
  return out;
}

} // namespace syz
