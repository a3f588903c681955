#include "fixtures.hpp"
#include "oracle.hpp"

#include "syz/ordering.hpp"

#include <doctest.h>

#include <random>

using namespace syz;

TEST_CASE("base orderings") {
  const auto r = fx::wxyz();
  auto m = [&](const char* s) { return fx::mm(s, 0, r).mono; };
  CHECK(cmp_base(m("w*x"), m("w*z"), BaseOrder::lex) > 0);
  CHECK(cmp_base(m("x^2"), m("x*y"), BaseOrder::degrevlex) > 0);
  CHECK(cmp_base(m("x*z"), m("y^2"), BaseOrder::degrevlex) < 0);
  CHECK(cmp_base(m("x*y*z"), m("x*y*z"), BaseOrder::lex) == 0);
  CHECK(parse_order_name("dp") == BaseOrder::degrevlex);
  CHECK(parse_order_name("lp") == BaseOrder::lex);
  CHECK_THROWS_AS(parse_order_name("ds"), std::invalid_argument);
}

TEST_CASE("induced ordering on the example") {
  const auto r = fx::wxyz();
  OrderingChain chain = extend_chain(OrderingChain(BaseOrder::lex, 1), fx::example_gens());
  REQUIRE(chain.depth() == 1);
  CHECK(chain.image(1, fx::mm("1", 0, r)) == fx::mm("w*x", 0, r).mono);
  CHECK(chain.image(1, fx::mm("1", 1, r)) == fx::mm("w*y", 0, r).mono);
  CHECK(chain.image(1, fx::mm("1", 2, r)) == fx::mm("x*y", 0, r).mono);

  StatCounters c;
  CHECK(chain.compare(1, fx::mm("x", 1, r), fx::mm("w", 2, r), &c) < 0);
  CHECK(c.n_monomial_cmp >= 2);
  CHECK(chain.compare(1, fx::mm("y", 0, r), fx::mm("z", 0, r)) > 0);
  CHECK(chain.compare(1, fx::mm("y", 0, r), fx::mm("y", 0, r)) == 0);
  CHECK_THROWS_AS(chain.compare(2, fx::mm("y", 0, r), fx::mm("y", 0, r)), std::out_of_range);
  CHECK_THROWS_AS(chain.compare(1, fx::mm("y", 3, r), fx::mm("y", 0, r)), std::out_of_range);

  auto s1 = fx::vec({{0, "-y+z"}, {1, "x+z"}, {2, "x+3*z"}}, r);
  auto s2 = fx::vec({{0, "-y"}, {1, "z"}, {2, "w+x+2*z"}}, r);
  OrderingChain two = extend_chain(chain, std::vector<ModuleVector>{s1, s2});
  REQUIRE(two.depth() == 2);
  CHECK(two.image(2, fx::mm("1", 0, r)) == fx::mm("w*x*y", 0, r).mono);
  CHECK(two.image(2, fx::mm("1", 1, r)) == fx::mm("w*x*y", 0, r).mono);
  CHECK_THROWS_AS(extend_chain(chain, std::vector<ModuleVector>{ModuleVector{}}),
                  std::invalid_argument);

  auto single = extend_chain(OrderingChain(BaseOrder::lex, 1), std::vector{fx::example_gens()[2]});
  CHECK(single.rank(1) == 1);
  CHECK(single.compare(1, fx::mm("w", 0, r), fx::mm("x", 0, r)) ==
        cmp_base(fx::mm("w", 0, r).mono, fx::mm("x", 0, r).mono, BaseOrder::lex));
}

namespace {

ModuleMonomial random_mm(std::mt19937_64& rng, std::uint32_t rank) {
  std::uniform_int_distribution<int> e(0, 2);
  return {Monomial{e(rng), e(rng), e(rng)}, std::uniform_int_distribution<std::uint32_t>(0, rank - 1)(rng)};
}

} // namespace

TEST_CASE("random chains agree with the recursive definition and are monomial orders") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const BaseOrder base = trial % 2 ? BaseOrder::lex : BaseOrder::degrevlex;
    OrderingChain chain(base, 2);
    oracle::Leads leads;
    std::uint32_t rank = 2;
    for (std::size_t level = 1; level <= 3; ++level) {
      std::vector<ModuleMonomial> lms;
      const std::uint32_t next_rank = 3 + trial % 3;
      for (std::uint32_t i = 0; i < next_rank; ++i)
        lms.push_back(random_mm(rng, rank));
      chain.extend(lms);
      leads.push_back(lms);
      rank = next_rank;
    }
    for (std::size_t level = 0; level <= 3; ++level) {
      const std::uint32_t rk = static_cast<std::uint32_t>(chain.rank(level));
      std::vector<ModuleMonomial> sample;
      for (int i = 0; i < 25; ++i)
        sample.push_back(random_mm(rng, rk));
      for (const auto& a : sample)
        for (const auto& b : sample) {
          const auto c = chain.compare(level, a, b);
          const int o = oracle::cmp_induced(level, a, b, leads, base);
          CHECK((c > 0 ? 1 : c < 0 ? -1 : 0) == o);
          CHECK((c == 0) == (a == b));
          CHECK((chain.compare(level, b, a) > 0) == (c < 0));
          const Monomial m{1, 0, 1};
          if (!(a == b))
            CHECK((chain.compare(level, {m * a.mono, a.comp}, {m * b.mono, b.comp}) > 0) == (c > 0));
          if (a.comp == b.comp)
            CHECK((c > 0) == (cmp_base(a.mono, b.mono, base) > 0));
        }
      for (const auto& a : sample)
        for (const auto& b : sample)
          for (const auto& c : sample)
            if (chain.compare(level, a, b) > 0 && chain.compare(level, b, c) > 0)
              CHECK(chain.compare(level, a, c) > 0);
    }
  }
}

TEST_CASE("normalize sorts strictly decreasing") {
  const auto r = fx::wxyz();
  OrderingChain chain(BaseOrder::lex, 1);
  auto f = fx::example_gens()[1];
  std::reverse(f.terms.begin(), f.terms.end());
  CHECK_FALSE(is_normalized(f, chain, 0));
  normalize(f, chain, 0);
  CHECK(is_normalized(f, chain, 0));
  CHECK(f.terms.front().mono == fx::mm("w*y", 0, r).mono);
}
