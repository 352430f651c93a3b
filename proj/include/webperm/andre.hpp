#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "webperm/permutation.hpp"

namespace webperm {

/// A cycle stored min-first, e.g. (1,5,4,7,2,3,9).
class Cycle {
 public:
  Cycle() = default;
  /// Any rotation; throws std::invalid_argument on repeated or nonpositive entries.
  explicit Cycle(std::vector<int> entries);

  std::span<const int> entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  int min() const { return entries_.front(); }
  int max() const;

  /// Image of `x` under the cycle; x must be an entry.
  int next(int x) const;

  /// "(1,5,4,7,2,3,9)"
  std::string str() const;

  friend auto operator<=>(const Cycle&, const Cycle&) = default;
  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  std::vector<int> entries_;
};

/// Cycles of sigma sorted by their minima, each written min-first. Fixed points included.
std::vector<Cycle> cycles_of(const Permutation& sigma);

/// "(1,3,2,4)(5)"
std::string cycle_notation(const Permutation& sigma);

/// The permutation of [n] whose only non-trivial cycle is `c`.
Permutation permutation_of(const Cycle& c, int n);

/// Recursive Andre test. The empty factor has maximum -infinity, so a word whose
/// minimum comes first reduces to its right factor alone.
bool is_andre_word(std::span<const int> word);

/// The tail a_2 ... a_k after the minimum is an Andre word.
bool is_andre_cycle(const Cycle& c);

/// Every cycle of sigma is an Andre cycle.
bool is_web(const Permutation& sigma);

bool is_312_avoiding(const Permutation& sigma);

/// Drops the parentheses of the canonical cycle notation (cycles by ascending minima,
/// each cycle written with its minimum last).
std::vector<int> foata(const Permutation& sigma);

/// Cuts after each right-to-left minimum. Throws std::invalid_argument unless
/// `word` is a permutation of [n].
Permutation foata_inverse(std::span<const int> word);

int right_to_left_minima(std::span<const int> word);

/// phi(sigma) = (1, f_1+1, ..., f_n+1, n+2) with f = foata(sigma); an (n+2)-cycle.
Cycle phi(const Permutation& sigma);

struct CycleStats {
  int cycle_count = 0;
  int rlmin = 0;        ///< right-to-left minima of the one-line word
  int foata_rlmin = 0;  ///< right-to-left minima of foata(sigma)
  int first_letter = 0; ///< sigma_1, 0 for the empty permutation
};

CycleStats cycle_stats(const Permutation& sigma);

/// Web_n via the cycle characterization, filtering all of S_n. Sorted.
std::vector<Permutation> web_permutations_by_cycles(int n);

/// Andre cycles whose support is exactly [size], found by filtering all full cycles.
std::vector<Cycle> andre_cycles(int size);

}  // namespace webperm
