#include "webperm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace webperm {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of [" + std::to_string(n) + "]");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> word;
  const bool separated = text.find_first_of(" ,\t") != std::string_view::npos;
  if (!separated) {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
        throw std::invalid_argument("bad permutation letter in '" + std::string(text) + "'");
      word.push_back(ch - '0');
    }
  } else {
    int value = 0;
    bool in_number = false;
    for (char ch : text) {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        value = value * 10 + (ch - '0');
        in_number = true;
      } else if (ch == ' ' || ch == ',' || ch == '\t') {
        if (in_number) word.push_back(value);
        value = 0;
        in_number = false;
      } else {
        throw std::invalid_argument("bad permutation text '" + std::string(text) + "'");
      }
    }
    if (in_number) word.push_back(value);
  }
  return Permutation(std::move(word));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

std::string Permutation::str() const {
  std::string out;
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if (size() > 9 && k > 0) out += ' ';
    out += std::to_string(word_[k]);
  }
  return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    visit(Permutation(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace webperm
