#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace webperm {

/// A bijection on [n] in one-line notation, values and positions 1-based.
class Permutation {
 public:
  /// The empty permutation of [0].
  Permutation() = default;

  /// Throws std::invalid_argument unless `word` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  /// Accepts "21354" (only for n <= 9) or whitespace/comma separated letters.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }

  /// sigma(i) for 1 <= i <= n.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> word() const { return word_; }
  Permutation inverse() const;

  /// Digits concatenated when n <= 9, otherwise space separated.
  std::string str() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// Calls `visit` on every permutation of [n] in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

std::vector<Permutation> all_permutations(int n);

}  // namespace webperm
