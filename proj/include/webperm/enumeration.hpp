#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "webperm/common.hpp"
#include "webperm/permutation.hpp"

namespace webperm {

/// Seidel triangle s_{i,j}, 1 <= j <= ceil(i/2), filled by the boustrophedon rule:
/// odd rows left to right, even rows right to left.
class SeidelTriangle {
 public:
  explicit SeidelTriangle(int rows);

  int rows() const { return static_cast<int>(rows_.size()); }
  /// Zero outside the stored range.
  BigInt at(int i, int j) const;
  const std::vector<BigInt>& row(int i) const { return rows_.at(static_cast<std::size_t>(i - 1)); }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

/// g_1..g_upto with g_{2m-1} = s_{2m-1,m} and g_{2m} = s_{2m,1}; element 0 holds g_1.
std::vector<BigInt> genocchi(int upto);

/// E_0..E_upto (sec + tan), by the alternating-direction boustrophedon.
std::vector<BigInt> euler_numbers(int upto);

/// Entringer number E_{n,k}, 0 <= k <= n.
BigInt entringer(int n, int k);
/// E_{n,0..n}.
std::vector<BigInt> entringer_row(int n);

/// Web permutations sigma of [n] with M(sigma) = M0, split by sigma_1.
struct GenocchiCounts {
  int n = 0;
  std::vector<BigInt> by_first_letter;  ///< index k = 1..n; index 0 unused
  BigInt total;
  std::vector<Permutation> witnesses;
};

GenocchiCounts genocchi_counts(int n);

/// f(n) and f(n, k).
BigInt f_count(int n);
BigInt f_count(int n, int k);

struct StatTable {
  std::map<std::pair<int, int>, BigInt> f_values;
  std::vector<BigInt> g;
  std::vector<std::vector<BigInt>> entringer_rows;  ///< entringer_rows[n][k]
};

StatTable stat_table(int max_n);

/// One compared identity; serialized as {claim, n, k, lhs, rhs, pass}.
struct ClaimReport {
  std::string claim;
  int n = 0;
  std::optional<int> k;
  BigInt lhs;
  BigInt rhs;
  bool pass = false;
};

/// Compares f(2m-1, 2k-1) with s_{2m-2,k} and f(2m, 2k-1) with s_{2m-1,m-k+1} for every
/// permutation size 1..max_n. The size-1 case compares against the seed value 1.
std::vector<ClaimReport> verify_conjecture(int max_n);

/// Number of cycles -> number of web permutations of [n] with that many cycles.
std::map<int, BigInt> cc_distribution(int n);

}  // namespace webperm
