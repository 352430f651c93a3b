#include "webperm/andre.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "webperm/common.hpp"

namespace webperm {

Cycle::Cycle(std::vector<int> entries) : entries_(std::move(entries)) {
  require(!entries_.empty(), "a cycle needs at least one entry");
  std::vector<int> sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  require(sorted.front() >= 1, "cycle entries must be positive");
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "cycle entries must be distinct");
  std::rotate(entries_.begin(), std::min_element(entries_.begin(), entries_.end()), entries_.end());
}

int Cycle::max() const { return *std::max_element(entries_.begin(), entries_.end()); }

int Cycle::next(int x) const {
  const auto it = std::find(entries_.begin(), entries_.end(), x);
  require(it != entries_.end(), std::to_string(x) + " is not in cycle " + str());
  const auto following = std::next(it);
  return following == entries_.end() ? entries_.front() : *following;
}

std::string Cycle::str() const {
  std::string out = "(";
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(entries_[k]);
  }
  return out + ')';
}

std::vector<Cycle> cycles_of(const Permutation& sigma) {
  std::vector<Cycle> cycles;
  std::vector<bool> seen(static_cast<std::size_t>(sigma.size()) + 1, false);
  for (int start = 1; start <= sigma.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> entries;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = sigma(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      entries.push_back(x);
    }
    cycles.emplace_back(std::move(entries));
  }
  return cycles;
}

std::string cycle_notation(const Permutation& sigma) {
  std::string out;
  for (const Cycle& c : cycles_of(sigma)) out += c.str();
  return out;
}

Permutation permutation_of(const Cycle& c, int n) {
  require(c.max() <= n, "cycle " + c.str() + " does not fit in [" + std::to_string(n) + "]");
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  for (int x : c.entries()) word[static_cast<std::size_t>(x - 1)] = c.next(x);
  return Permutation(std::move(word));
}

namespace {

constexpr int kMinusInfinity = std::numeric_limits<int>::min();

int max_or_minus_infinity(std::span<const int> w) {
  return w.empty() ? kMinusInfinity : *std::max_element(w.begin(), w.end());
}

bool andre_recursive(std::span<const int> w) {
  if (w.size() <= 1) return true;
  const auto k = static_cast<std::size_t>(std::min_element(w.begin(), w.end()) - w.begin());
  const auto left = w.first(k);
  const auto right = w.subspan(k + 1);
  return max_or_minus_infinity(left) < max_or_minus_infinity(right) && andre_recursive(left) &&
         andre_recursive(right);
}

}  // namespace

bool is_andre_word(std::span<const int> word) {
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "Andre test needs distinct letters");
  return andre_recursive(word);
}

bool is_andre_cycle(const Cycle& c) { return is_andre_word(c.entries().subspan(1)); }

bool is_web(const Permutation& sigma) {
  const auto cycles = cycles_of(sigma);
  return std::all_of(cycles.begin(), cycles.end(), [](const Cycle& c) { return is_andre_cycle(c); });
}

bool is_312_avoiding(const Permutation& sigma) {
  // For each middle position j, a 312 needs some earlier letter above some later letter
  // that itself sits above sigma_j.
  const auto w = sigma.word();
  const std::size_t n = w.size();
  for (std::size_t j = 1; j + 1 < n; ++j) {
    int largest_before = 0;
    for (std::size_t i = 0; i < j; ++i) largest_before = std::max(largest_before, w[i]);
    for (std::size_t k = j + 1; k < n; ++k)
      if (w[j] < w[k] && w[k] < largest_before) return false;
  }
  return true;
}

std::vector<int> foata(const Permutation& sigma) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(sigma.size()));
  for (const Cycle& c : cycles_of(sigma)) {
    const auto e = c.entries();
    out.insert(out.end(), e.begin() + 1, e.end());
    out.push_back(e.front());
  }
  return out;
}

Permutation foata_inverse(std::span<const int> word) {
  [[maybe_unused]] const Permutation validated{std::vector<int>(word.begin(), word.end())};
  std::vector<int> image(word.size());
  std::size_t segment_start = 0;
  int suffix_min = std::numeric_limits<int>::max();
  std::vector<bool> is_rlmin(word.size(), false);
  for (std::size_t k = word.size(); k-- > 0;) {
    if (word[k] < suffix_min) {
      is_rlmin[k] = true;
      suffix_min = word[k];
    }
  }
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (!is_rlmin[k]) continue;
    // word[segment_start..k] is one cycle written with its minimum last.
    for (std::size_t t = segment_start; t < k; ++t) image[static_cast<std::size_t>(word[t] - 1)] = word[t + 1];
    image[static_cast<std::size_t>(word[k] - 1)] = word[segment_start];
    segment_start = k + 1;
  }
  return Permutation(std::move(image));
}

int right_to_left_minima(std::span<const int> word) {
  int count = 0;
  int suffix_min = std::numeric_limits<int>::max();
  for (std::size_t k = word.size(); k-- > 0;) {
    if (word[k] < suffix_min) {
      ++count;
      suffix_min = word[k];
    }
  }
  return count;
}

Cycle phi(const Permutation& sigma) {
  std::vector<int> entries{1};
  for (int letter : foata(sigma)) entries.push_back(letter + 1);
  entries.push_back(sigma.size() + 2);
  return Cycle(std::move(entries));
}

CycleStats cycle_stats(const Permutation& sigma) {
  CycleStats stats;
  stats.cycle_count = static_cast<int>(cycles_of(sigma).size());
  stats.rlmin = right_to_left_minima(sigma.word());
  stats.foata_rlmin = right_to_left_minima(foata(sigma));
  stats.first_letter = sigma.size() > 0 ? sigma(1) : 0;
  return stats;
}

std::vector<Permutation> web_permutations_by_cycles(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& sigma) {
    if (is_web(sigma)) out.push_back(sigma);
  });
  return out;
}

std::vector<Cycle> andre_cycles(int size) {
  require(size >= 1, "Andre cycles need a nonempty support");
  std::vector<Cycle> out;
  std::vector<int> tail(static_cast<std::size_t>(size - 1));
  std::iota(tail.begin(), tail.end(), 2);
  do {
    std::vector<int> entries{1};
    entries.insert(entries.end(), tail.begin(), tail.end());
    Cycle c(std::move(entries));
    if (is_andre_cycle(c)) out.push_back(std::move(c));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

}  // namespace webperm
