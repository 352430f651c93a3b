#include "webperm/oracle.hpp"

#include <stdexcept>

namespace webperm {

namespace {

struct CrossingPair {
  std::size_t first;   // arc {a, c}
  std::size_t second;  // arc {b, d}
};

std::optional<CrossingPair> pick_crossing(const Matching& m, SyzygyPolicy policy) {
  const auto arcs = m.arcs();  // sorted by opener, so (a, b) order is index order
  std::optional<CrossingPair> chosen;
  for (std::size_t p = 0; p < arcs.size(); ++p) {
    for (std::size_t q = p + 1; q < arcs.size(); ++q) {
      if (!(arcs[q].opener < arcs[p].closer && arcs[p].closer < arcs[q].closer)) continue;
      if (policy == SyzygyPolicy::FirstCrossing) return CrossingPair{p, q};
      chosen = CrossingPair{p, q};
    }
  }
  return chosen;
}

std::pair<Matching, Matching> resolve_pair(const Matching& m, const CrossingPair& pair) {
  const auto arcs = m.arcs();
  const int a = arcs[pair.first].opener;
  const int c = arcs[pair.first].closer;
  const int b = arcs[pair.second].opener;
  const int d = arcs[pair.second].closer;
  std::vector<Arc> rest;
  for (std::size_t k = 0; k < arcs.size(); ++k)
    if (k != pair.first && k != pair.second) rest.push_back(arcs[k]);
  std::vector<Arc> adjacent = rest;
  adjacent.emplace_back(a, b);
  adjacent.emplace_back(c, d);
  std::vector<Arc> nested = std::move(rest);
  nested.emplace_back(a, d);
  nested.emplace_back(b, c);
  return {Matching(std::move(adjacent)), Matching(std::move(nested))};
}

}  // namespace

CoefficientVector syzygy_expand(const Matching& m, SyzygyPolicy policy) {
  CoefficientVector result;
  std::map<Matching, BigInt> pending{{m, 1}};
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const auto pair = pick_crossing(node.key(), policy);
    if (!pair) {
      result[node.key()] += node.mapped();
      continue;
    }
    auto [adjacent, nested] = resolve_pair(node.key(), *pair);
    pending[std::move(adjacent)] += node.mapped();
    pending[std::move(nested)] += node.mapped();
  }
  return result;
}

IntegerMatrixSample sample_matrix(int columns, std::mt19937_64& rng, std::int64_t magnitude) {
  std::uniform_int_distribution<std::int64_t> dist(-magnitude, magnitude);
  IntegerMatrixSample z;
  for (auto& row : z.rows) {
    row.resize(static_cast<std::size_t>(columns));
    for (auto& v : row) v = dist(rng);
  }
  return z;
}

BigInt minor(const IntegerMatrixSample& z, int i, int j) {
  if (!(1 <= i && i < j && j <= z.columns()))
    throw std::out_of_range("minor indices need 1 <= i < j <= " + std::to_string(z.columns()));
  const auto at = [&](int row, int col) { return BigInt(z.rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)]); };
  return at(0, i) * at(1, j) - at(0, j) * at(1, i);
}

BigInt delta_product(const IntegerMatrixSample& z, const Matching& m) {
  BigInt product = 1;
  for (const Arc& a : m.arcs()) product *= minor(z, a.opener, a.closer);
  return product;
}

ExpansionVerdict verify_expansion(const Matching& m, const CoefficientVector& coeffs, int trials,
                                  std::uint64_t seed) {
  for (const auto& [term, c] : coeffs)
    require(term.n() == m.n() && !term.has_crossing(),
            "expansion term " + term.str() + " is not a noncrossing matching of the same size");
  ExpansionVerdict verdict;
  verdict.seed = seed;
  verdict.trials = trials;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto z = sample_matrix(2 * m.n(), rng);
    BigInt rhs = 0;
    for (const auto& [term, c] : coeffs) rhs += c * delta_product(z, term);
    if (delta_product(z, m) != rhs) {
      verdict.holds = false;
      verdict.counterexample = z;
      break;
    }
  }
  return verdict;
}

}  // namespace webperm
