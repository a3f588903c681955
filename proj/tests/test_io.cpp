#include "fixtures.hpp"

#include "syz/io.hpp"
#include "syz/resolution.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace syz;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Resolution example_resolution() {
  auto gens = fx::example_gens();
  return resolve(gens, 1, BaseOrder::lex, PrimeField(32003));
}

} // namespace

TEST_CASE("parse the worked example input") {
  auto doc = parse_input(read_file(SYZ_TEST_DATA "/worked_example.txt"));
  CHECK(doc.ring.field.characteristic() == 32003);
  CHECK(doc.ring.vars == std::vector<std::string>{"w", "x", "y", "z"});
  CHECK(doc.ring.order == BaseOrder::lex);
  REQUIRE(doc.polys.size() == 3);
  const auto expected = fx::example_gens();
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(same_terms(doc.polys[i], expected[i]));
}

TEST_CASE("polynomial syntax") {
  auto r = parse_ring_line("ring 7 x,y dp");
  auto p = parse_polynomial("x^2 - 3y^2", r);
  CHECK(same_terms(p, fx::vec({{0, "x^2"}, {0, "4*y^2"}}, r)));
  CHECK(same_terms(parse_polynomial("2 x y + x*y", r), parse_polynomial("3*x*y", r)));
  CHECK(same_terms(parse_polynomial("x*y - y*x", r), ModuleVector{}));
  CHECK(same_terms(parse_polynomial("100000000000000000000", r), parse_polynomial("2", r)));
  CHECK(same_terms(parse_polynomial("-x", r), parse_polynomial("6*x", r)));

  auto multi = parse_ring_line("ring 101 x1,x10,y dp");
  auto q = parse_polynomial("x10*x1^2 + y", multi);
  CHECK(q.size() == 2);
  CHECK(format_polynomial(q.terms, multi) == "x1^2*x10+y");
}

TEST_CASE("input errors carry positions") {
  CHECK_THROWS_AS(parse_ring_line("ring 4 x dp"), ParseError);
  CHECK_THROWS_AS(parse_ring_line("ring 7 x,x dp"), ParseError);
  CHECK_THROWS_AS(parse_ring_line("ring 7 x,y ds"), ParseError);
  CHECK_THROWS_AS(parse_ring_line("rung 7 x dp"), ParseError);
  CHECK_THROWS_AS(parse_input(""), ParseError);
  CHECK_THROWS_AS(parse_input("x^2\n"), ParseError);

  try {
    parse_input("ring 7 x,y dp\nx^2 + q\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() == 7);
    CHECK(std::string(e.what()).find("line 2, col 7") != std::string::npos);
  }
  auto r = parse_ring_line("ring 7 x,y dp");
  CHECK_THROWS_AS(parse_polynomial("x^", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x +* y", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^99999999", r), ParseError);
}

TEST_CASE("comments and blank lines") {
  auto doc = parse_input("# header\nring 7 x,y dp\n\nx^2 # trailing\n  \ny\n");
  CHECK(doc.polys.size() == 2);
}

TEST_CASE("input documents round-trip") {
  auto doc = parse_input(read_file(SYZ_TEST_DATA "/worked_example.txt"));
  const std::string text = format_input(doc);
  CHECK(format_input(parse_input(text)) == text);
  CHECK(format_ring(doc.ring) == "ring 32003 w,x,y,z lp");
  CHECK(format_polynomial(doc.polys[1].terms, doc.ring) == "w*y-w*z-x*z-y*z-2*z^2");
}

TEST_CASE("resolutions round-trip") {
  auto res = example_resolution();
  const Ring ring = fx::wxyz();
  const std::string text = serialize_resolution(res, ring);
  Ring back_ring;
  auto back = parse_resolution(text, &back_ring);
  CHECK(serialize_resolution(back, back_ring) == text);
  CHECK(back.graded);
  CHECK(back.minimal);
  CHECK(is_complex(back));
  CHECK(betti_nonminimal(back) == betti_nonminimal(res));
  CHECK(text.find("map 2\n0 0 -y+z\n") != std::string::npos);
  CHECK_THROWS_AS(parse_resolution("ring 7 x dp\nlength 1\n"), ParseError);
}

TEST_CASE("betti table layout") {
  BettiTable t;
  t.add(0, 0);
  t.add(1, 2, 3);
  t.add(2, 3, 2);
  const std::string expected = "        0  1  2\n"
                               "---------------\n"
                               "    0:  1  -  -\n"
                               "    1:  -  3  2\n"
                               "---------------\n"
                               "total:  1  3  2\n";
  CHECK(format_betti(t) == expected);
  CHECK(format_betti(BettiTable{}) == "(zero)\n");
}

TEST_CASE("stats output") {
  auto res = example_resolution();
  const std::string text = format_stats(res, false);
  CHECK(text.find("#Terms    11") != std::string::npos);
  CHECK(text.find("Q_sparse  1.833") != std::string::npos);
  const std::string kv = format_stats_kv(res);
  CHECK(kv.find("n_terms=11\n") != std::string::npos);
  CHECK(kv.find("q_sparse=1.833333\n") != std::string::npos);

  Resolution empty;
  CHECK(format_stats_kv(empty).find("n_mult=0\n") != std::string::npos);
  CHECK(format_stats(res, true).find("phi_2") != std::string::npos);
}

TEST_CASE("sparsity images") {
  auto res = example_resolution();
  const std::string img = pgm_image(res, 2);
  const std::string header = "P5\n2 3\n255\n";
  REQUIRE(img.size() == header.size() + 6);
  CHECK(img.substr(0, header.size()) == header);
  const std::string pixels = img.substr(header.size());
  const unsigned char expected[6] = {0, 128, 0, 128, 0, 0};
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(static_cast<unsigned char>(pixels[i]) == expected[i]);
  CHECK_THROWS_AS(pgm_image(res, 3), std::out_of_range);

  Resolution zero;
  zero.modules = {{{0}}, {{1}}};
  zero.differentials = {{ModuleVector{}}};
  CHECK(pgm_image(zero, 1) == std::string("P5\n1 1\n255\n") + char(255));
}
