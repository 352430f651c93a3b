#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace webperm {

/// An arc {opener, closer} of a perfect matching, opener < closer.
struct Arc {
  int opener = 0;
  int closer = 0;

  Arc() = default;
  /// Throws std::invalid_argument unless opener < closer.
  Arc(int opener, int closer);

  friend auto operator<=>(const Arc&, const Arc&) = default;
  friend bool operator==(const Arc&, const Arc&) = default;
};

enum class MatchingKind { Noncrossing, Nonnesting, Both, Neither };
enum class MatchingClass { All, Noncrossing, Nonnesting };

/// A perfect matching on [2n], stored as arcs sorted by opener.
class Matching {
 public:
  Matching() = default;
  /// Arcs in any order; the endpoint union must be exactly {1, ..., 2n}.
  explicit Matching(std::vector<Arc> arcs);
  Matching(std::initializer_list<Arc> arcs) : Matching(std::vector<Arc>(arcs)) {}

  /// Pairs may come in either orientation.
  static Matching from_pairs(std::span<const std::array<int, 2>> pairs);

  /// M0 = {{1,2},{3,4},...,{2n-1,2n}}.
  static Matching base(int n);

  int n() const { return static_cast<int>(arcs_.size()); }
  std::span<const Arc> arcs() const { return arcs_; }

  int partner(int vertex) const;
  bool is_opener(int vertex) const { return partner(vertex) > vertex; }

  bool has_crossing() const;
  bool has_nesting() const;

  /// "{{1,2},{3,5},{4,7},{6,8}}"
  std::string str() const;

  friend auto operator<=>(const Matching&, const Matching&) = default;
  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Arc> arcs_;
};

MatchingKind classify(const Matching& m);
const char* to_string(MatchingKind kind);

inline constexpr int kDefaultMatchingCap = 8;

/// Streams every matching of [2n] in the requested class.
/// Throws ResourceLimitError when n exceeds `cap`.
void for_each_matching(int n, MatchingClass cls, const std::function<void(const Matching&)>& visit,
                       int cap = kDefaultMatchingCap);

/// Complete duplicate-free list; NC and NN come back in table order of their Dyck paths,
/// `All` in lexicographic arc order.
std::vector<Matching> enumerate_matchings(int n, MatchingClass cls, int cap = kDefaultMatchingCap);

/// Connects the two entries of each column of a 2 x n standard Young tableau.
/// Throws std::invalid_argument for a non-standard tableau.
Matching syt_to_matching(const std::array<std::vector<int>, 2>& tableau);

std::uint64_t catalan(int n);
std::uint64_t double_factorial_odd(int n);  // (2n-1)!!

}  // namespace webperm
