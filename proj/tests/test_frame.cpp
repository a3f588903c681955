#include "fixtures.hpp"
#include "oracle.hpp"

#include "syz/frame.hpp"
#include "syz/groebner.hpp"

#include <doctest.h>

using namespace syz;

TEST_CASE("lead_syz on the worked example") {
  const auto r = fx::wxyz();
  std::vector<ModuleMonomial> lms{fx::mm("w*x", 0, r), fx::mm("w*y", 0, r), fx::mm("x*y", 0, r)};
  auto L = lead_syz(lms, std::vector<int>{2, 2, 2}, BaseOrder::lex);
  REQUIRE(L.size() == 2);
  CHECK(L.terms[0] == fx::mm("x", 1, r));
  CHECK(L.terms[1] == fx::mm("w", 2, r));
  CHECK(L.source_pairs[0] == std::pair<std::uint32_t, std::uint32_t>{1, 0});
  CHECK(L.source_pairs[1] == std::pair<std::uint32_t, std::uint32_t>{2, 0});
  CHECK(L.degrees == std::vector<int>{3, 3});
}

TEST_CASE("lead_syz small cases") {
  const auto r = fx::ring(101, {"x", "y"});
  std::vector<ModuleMonomial> one{fx::mm("x", 0, r)};
  CHECK(lead_syz(one, std::vector<int>{1}, BaseOrder::degrevlex).empty());

  std::vector<ModuleMonomial> xy{fx::mm("x", 0, r), fx::mm("y", 0, r)};
  auto L = lead_syz(xy, std::vector<int>{1, 1}, BaseOrder::degrevlex);
  REQUIRE(L.size() == 1);
  CHECK(L.terms[0] == fx::mm("x", 1, r));

  std::vector<ModuleMonomial> split{fx::mm("x", 0, r), fx::mm("y", 1, r)};
  CHECK(lead_syz(split, std::vector<int>{1, 1}, BaseOrder::degrevlex).empty());
}

TEST_CASE("frame of the worked example") {
  auto gens = fx::example_gens();
  auto G = buchberger(gens, BaseOrder::lex, 1, PrimeField(32003));
  auto frame = build_frame(G);
  REQUIRE(frame.levels.size() == 2);
  CHECK(frame.levels[0].size() == 2);
  CHECK(frame.levels[1].empty());
  auto b = frame_betti(frame, G);
  CHECK(b.at(0, 0) == 1);
  CHECK(b.at(1, 2) == 3);
  CHECK(b.at(2, 3) == 2);
  CHECK(b.entries().size() == 3);

  auto capped = build_frame(G, 1);
  CHECK(capped.levels.size() == 1);
}

TEST_CASE("frame of a principal ideal and of the square of the maximal ideal") {
  const auto r = fx::ring(101, {"x", "y"});
  PrimeField f(101);
  std::vector<ModuleVector> x{fx::poly("x", r)};
  auto G = buchberger(x, BaseOrder::degrevlex, 1, f);
  auto frame = build_frame(G);
  REQUIRE(frame.levels.size() == 1);
  CHECK(frame.levels[0].empty());

  std::vector<ModuleVector> sq{fx::poly("x^2", r), fx::poly("x*y", r), fx::poly("y^2", r)};
  auto S = buchberger(sq, BaseOrder::degrevlex, 1, f);
  auto fr = build_frame(S);
  REQUIRE(fr.levels.size() == 2);
  CHECK(fr.levels[0].terms ==
        std::vector<ModuleMonomial>{fx::mm("x", 1, r), fx::mm("x", 2, r)});
  CHECK(fr.levels[1].empty());
  CHECK(oracle::lead_syz_bruteforce(S.leading_monomials(), 0, {}, BaseOrder::degrevlex) ==
        oracle::sorted(fr.levels[0].terms));
}

TEST_CASE("reorder permutation") {
  const auto r = fx::ring(101, {"x", "y"});
  OrderingChain chain(BaseOrder::degrevlex, 1);
  std::vector<ModuleMonomial> lms{fx::mm("x^2", 0, r), fx::mm("y", 0, r), fx::mm("x^3", 0, r)};
  auto perm = reorder_permutation(lms, std::vector<int>{2, 1, 3}, chain, 0);
  CHECK(perm == std::vector<std::size_t>{1, 0, 2});

  std::vector<ModuleMonomial> same{fx::mm("y^2", 0, r), fx::mm("x^2", 0, r), fx::mm("x*y", 0, r)};
  CHECK(reorder_permutation(same, std::vector<int>{2, 2, 2}, chain, 0) ==
        std::vector<std::size_t>{1, 2, 0});

  FrameLevel L;
  L.terms = same;
  L.degrees = {2, 2, 2};
  L.source_pairs = {{1, 0}, {2, 0}, {2, 1}};
  permute_level(L, std::vector<std::size_t>{1, 2, 0});
  CHECK(L.terms[0] == fx::mm("x^2", 0, r));
  CHECK(L.source_pairs[2] == std::pair<std::uint32_t, std::uint32_t>{1, 0});

  CHECK(parse_reorder_policy("none") == ReorderPolicy::none);
  CHECK(parse_reorder_policy("negdegrevlex") == ReorderPolicy::negdegrevlex);
  CHECK_THROWS_AS(parse_reorder_policy("sideways"), std::invalid_argument);
}

TEST_CASE("frame levels match the brute-force leading syzygies and stay minimal") {
  PrimeField f(oracle::kCorpusPrime);
  for (const auto& c : oracle::corpus(80, 5)) {
    auto G = buchberger(c.gens, c.order, 1, f);
    for (auto policy : {ReorderPolicy::negdegrevlex, ReorderPolicy::none}) {
      auto frame = build_frame(G, kUnbounded, policy);
      std::vector<ModuleMonomial> prev = G.leading_monomials();
      oracle::Leads below;
      for (std::size_t k = 0; k < frame.levels.size(); ++k) {
        const auto& level = frame.levels[k];
        CHECK(oracle::lead_syz_bruteforce(prev, k, below, c.order) == oracle::sorted(level.terms));
        for (std::size_t a = 0; a < level.size(); ++a) {
          const auto [i, j] = level.source_pairs[a];
          CHECK(j < i);
          CHECK(level.terms[a].comp == i);
          for (std::size_t b = 0; b < level.size(); ++b)
            if (a != b)
              CHECK_FALSE(monomial_divides(level.terms[a], level.terms[b]));
        }
        below.push_back(prev);
        prev = level.terms;
      }
      CHECK(frame.levels.back().empty());
      CHECK(frame.levels.size() <= c.nvars + 1);
    }
  }
}
