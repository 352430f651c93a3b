#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "webperm/dyck.hpp"
#include "webperm/matching.hpp"
#include "webperm/permutation.hpp"

namespace webperm {

/// Cr(sigma): cells (i, j) with sigma(i) < j and i < sigma^{-1}(j), i.e. cells crossed
/// by both the vertical line above marking i and the horizontal line left of marking j.
CellSet crossings_of(const Permutation& sigma);

/// G(sigma, E): the n x n grid with markings (i, sigma(i)), lines running up and left from
/// each marking, and the crossings in E replaced by elbows.
class GridConfiguration {
 public:
  /// Throws std::invalid_argument unless elbows is a subset of Cr(sigma).
  GridConfiguration(Permutation sigma, CellSet elbows);

  /// The empty configuration G(sigma, {}).
  explicit GridConfiguration(Permutation sigma) : GridConfiguration(std::move(sigma), {}) {}

  int size() const { return sigma_.size(); }
  const Permutation& sigma() const { return sigma_; }
  const CellSet& elbows() const { return elbows_; }

  /// Cr(sigma) \ E.
  CellSet unresolved() const;
  /// True when E = Cr(sigma).
  bool is_terminal() const;

  friend bool operator==(const GridConfiguration&, const GridConfiguration&) = default;

 private:
  Permutation sigma_;
  CellSet elbows_;
};

/// M(sigma, E). Boundary intervals: left column 1..n bottom to top, top row n+1..2n left
/// to right. Throws std::logic_error if a strand reuses a cell edge or leaves the grid
/// through the right or bottom boundary.
Matching trace_matching(const GridConfiguration& g);

/// M(sigma) = M(sigma, Cr(sigma)).
Matching web_matching(const Permutation& sigma);

/// How to pick the next crossing among the maximal unresolved ones.
enum class CrossingPolicy {
  TopLeft,     ///< highest row, then leftmost column
  BottomLeft,  ///< the lowest maximal crossing
};

bool is_maximal_crossing(const GridConfiguration& g, const Cell& c);

std::optional<Cell> maximal_crossing(const GridConfiguration& g,
                                     CrossingPolicy policy = CrossingPolicy::TopLeft);

/// G(sigma, E u {c}). Throws std::invalid_argument unless c is a maximal unresolved crossing.
GridConfiguration smooth(const GridConfiguration& g, const Cell& c);

/// G(sigma', E) where sigma' sends i to j and sigma^{-1}(j) to sigma(i).
/// Same precondition as smooth.
GridConfiguration switch_crossing(const GridConfiguration& g, const Cell& c);

struct ResolveOptions {
  CrossingPolicy policy = CrossingPolicy::TopLeft;
  std::size_t node_cap = 10'000'000;
};

struct ResolutionOutcome {
  /// Terminal permutation -> multiplicity; each stands for G(sigma, Cr(sigma)).
  std::map<Permutation, std::size_t> terminals;
  std::size_t nodes_visited = 0;

  bool all_distinct() const;
  std::vector<Permutation> permutations() const;
};

/// Resolves maximal crossings by smoothing and switching until none is left.
/// Throws ResourceLimitError when more than node_cap configurations are visited.
ResolutionOutcome resolve(const GridConfiguration& g, const ResolveOptions& options = {});

/// Web_n: terminal permutations of G(id, {}).
std::vector<Permutation> web_permutations(int n, const ResolveOptions& options = {});

/// Web_M: terminal permutations of G(id, E(M)) for a nonnesting M.
std::vector<Permutation> web_permutations_for(const Matching& m, const ResolveOptions& options = {});

}  // namespace webperm
