#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "webperm/matching.hpp"
#include "webperm/permutation.hpp"

namespace webperm {

/// Cell (i, j) of the n x n grid named by its upper-right corner: column i, row j.
struct Cell {
  int col = 0;
  int row = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
  friend bool operator==(const Cell&, const Cell&) = default;
};

using CellSet = std::set<Cell>;

/// (x,y) dominates (x',y') when it sits in the closed upper-left quadrant of (x',y').
inline bool dominates(const Cell& a, const Cell& b) { return a.col <= b.col && a.row >= b.row; }

/// A lattice path of n north and n east steps never dropping below y = x.
class DyckPath {
 public:
  DyckPath() = default;
  /// Throws std::invalid_argument on a word that is not a Dyck path over {N, E}.
  explicit DyckPath(std::string_view steps);

  /// Path whose i-th east step runs at height heights[i-1].
  static DyckPath from_column_heights(const std::vector<int>& heights);
  static DyckPath minimum(int n);  // (NE)^n
  static DyckPath maximum(int n);  // N^n E^n

  int n() const { return static_cast<int>(steps_.size() / 2); }
  const std::string& str() const { return steps_; }
  char operator[](std::size_t k) const { return steps_[k]; }

  /// Height of the path above column i, i = 1..n.
  std::vector<int> column_heights() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  std::string steps_;
};

/// All Dyck paths with n north steps, in table order.
std::vector<DyckPath> enumerate_dyck(int n);

DyckPath dyck_of_matching(const Matching& m);

/// Inverse of dyck_of_matching on the noncrossing or nonnesting class.
Matching matching_from_dyck(const DyckPath& p, MatchingClass cls);

/// Minimal Dyck path with every marked cell (i, sigma(i)) weakly below it.
DyckPath dyck_of_permutation(const Permutation& sigma);

/// Containment of the regions below the paths. Throws on a length mismatch.
bool dyck_leq(const DyckPath& p, const DyckPath& q);

/// Total order used for matrix rows and columns: lexicographic with N < E.
/// Smaller key means larger path, so N^n E^n comes first.
std::string table_order_key(const DyckPath& p);

struct TableOrder {
  bool operator()(const DyckPath& a, const DyckPath& b) const {
    return table_order_key(a) < table_order_key(b);
  }
};

/// Cells strictly above the path.
CellSet cells_above(const DyckPath& p);

}  // namespace webperm
