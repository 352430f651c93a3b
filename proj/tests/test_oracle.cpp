#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "webperm/grid.hpp"
#include "webperm/oracle.hpp"
#include "webperm/transition.hpp"

using namespace webperm;

namespace {

Matching random_matching(int n, std::mt19937_64& rng) {
  std::vector<int> vertices(static_cast<std::size_t>(2 * n));
  std::iota(vertices.begin(), vertices.end(), 1);
  std::shuffle(vertices.begin(), vertices.end(), rng);
  std::vector<Arc> arcs;
  for (std::size_t k = 0; k < vertices.size(); k += 2)
    arcs.emplace_back(std::min(vertices[k], vertices[k + 1]), std::max(vertices[k], vertices[k + 1]));
  return Matching(std::move(arcs));
}

IntegerMatrixSample ramp(int columns) {
  IntegerMatrixSample z;
  for (int c = 1; c <= columns; ++c) {
    z.rows[0].push_back(1);
    z.rows[1].push_back(c);
  }
  return z;
}

}  // namespace

TEST_CASE("syzygy_expand examples") {
  for (const auto& m : enumerate_matchings(3, MatchingClass::Noncrossing))
    CHECK(syzygy_expand(m) == CoefficientVector{{m, 1}});

  CHECK(syzygy_expand(Matching{{1, 3}, {2, 4}}) ==
        CoefficientVector{{Matching{{1, 2}, {3, 4}}, 1}, {Matching{{1, 4}, {2, 3}}, 1}});

  const auto row = syzygy_expand(Matching{{1, 4}, {2, 5}, {3, 6}});
  CHECK(row.size() == 5);
  for (const auto& [m, c] : row) CHECK(c == 1);
}

TEST_CASE("minors") {
  IntegerMatrixSample ones;
  ones.rows[0].assign(6, 1);
  ones.rows[1].assign(6, 1);
  CHECK(minor(ones, 1, 4) == 0);
  CHECK(delta_product(ones, Matching{{1, 4}, {2, 5}, {3, 6}}) == 0);

  const auto z = ramp(8);
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) CHECK(minor(z, i, j) == j - i);
  CHECK(delta_product(z, Matching{{1, 4}, {2, 3}}) == 3);

  CHECK_THROWS_AS(minor(z, 3, 3), std::out_of_range);
  CHECK_THROWS_AS(minor(z, 0, 2), std::out_of_range);
  CHECK_THROWS_AS(minor(z, 2, 9), std::out_of_range);
}

TEST_CASE("the three-term relation holds on random samples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto z = sample_matrix(8, rng);
    for (int a = 1; a <= 8; ++a)
      for (int b = a + 1; b <= 8; ++b)
        for (int c = b + 1; c <= 8; ++c)
          for (int d = c + 1; d <= 8; ++d)
            REQUIRE(minor(z, a, c) * minor(z, b, d) == minor(z, a, b) * minor(z, c, d) + minor(z, a, d) * minor(z, b, c));
  }
}

TEST_CASE("samples are bounded and reproducible") {
  std::mt19937_64 first(42);
  std::mt19937_64 second(42);
  const auto a = sample_matrix(10, first, 5);
  const auto b = sample_matrix(10, second, 5);
  CHECK(a.rows == b.rows);
  for (const auto& row : a.rows)
    for (auto v : row) CHECK(std::abs(v) <= 5);
}

TEST_CASE("verify_expansion") {
  CHECK(verify_expansion(Matching::base(3), {{Matching::base(3), 1}}, 20, 1).holds);

  const auto refuted = verify_expansion(Matching{{1, 3}, {2, 4}}, {{Matching{{1, 2}, {3, 4}}, 2}}, 20, 1);
  CHECK_FALSE(refuted.holds);
  REQUIRE(refuted.counterexample);
  CHECK(refuted.counterexample->columns() == 4);
  CHECK(refuted.seed == 1);

  CHECK_THROWS_AS(verify_expansion(Matching{{1, 2}, {3, 4}}, {{Matching{{1, 3}, {2, 4}}, 1}}, 1, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_expansion(Matching{{1, 2}, {3, 4}}, {{Matching{{1, 2}}, 1}}, 1, 0), std::invalid_argument);
}

TEST_CASE("every expansion up to n = 4 evaluates correctly") {
  std::uint64_t seed = 100;
  for (int n = 1; n <= 4; ++n)
    for (const auto& m : enumerate_matchings(n, MatchingClass::All)) {
      const auto expansion = syzygy_expand(m);
      for (const auto& [term, c] : expansion) {
        CHECK_FALSE(term.has_crossing());
        CHECK(c > 0);
      }
      CHECK(verify_expansion(m, expansion, 20, seed++).holds);
    }
}

TEST_CASE("the expansion does not depend on which crossing is resolved") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& m : enumerate_matchings(n, MatchingClass::All))
      CHECK(syzygy_expand(m, SyzygyPolicy::FirstCrossing) == syzygy_expand(m, SyzygyPolicy::LastCrossing));

  std::mt19937_64 rng(2024);
  for (int k = 0; k < 500; ++k) {
    const auto m = random_matching(5, rng);
    CHECK(syzygy_expand(m, SyzygyPolicy::FirstCrossing) == syzygy_expand(m, SyzygyPolicy::LastCrossing));
  }
}

TEST_CASE("expansions of nonnesting matchings are the matrix rows") {
  for (int n = 1; n <= 5; ++n) {
    const auto a = transition_matrix(n);
    for (std::size_t r = 0; r < a.dimension(); ++r) {
      const auto expansion = syzygy_expand(a.row_labels()[r]);
      BigInt total = 0;
      for (std::size_t c = 0; c < a.dimension(); ++c) {
        const auto it = expansion.find(a.col_labels()[c]);
        CHECK(a(r, c) == (it == expansion.end() ? BigInt(0) : it->second));
      }
      for (const auto& [term, c] : expansion) total += c;
      CHECK(total == web_permutations_for(a.row_labels()[r]).size());
    }
  }
}
