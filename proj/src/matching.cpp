#include "webperm/matching.hpp"

#include <algorithm>
#include <stdexcept>

#include "webperm/common.hpp"
#include "webperm/dyck.hpp"

namespace webperm {

Arc::Arc(int opener_, int closer_) : opener(opener_), closer(closer_) {
  if (!(opener < closer))
    throw std::invalid_argument("arc {" + std::to_string(opener) + "," + std::to_string(closer) +
                                "} needs opener < closer");
}

Matching::Matching(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end());
  const int size = 2 * n();
  std::vector<bool> seen(static_cast<std::size_t>(size) + 1, false);
  for (const Arc& a : arcs_) {
    for (int v : {a.opener, a.closer}) {
      if (v < 1 || v > size || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("arcs do not form a perfect matching on [" +
                                    std::to_string(size) + "]");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
}

Matching Matching::from_pairs(std::span<const std::array<int, 2>> pairs) {
  std::vector<Arc> arcs;
  arcs.reserve(pairs.size());
  for (const auto& [a, b] : pairs) arcs.emplace_back(std::min(a, b), std::max(a, b));
  return Matching(std::move(arcs));
}

Matching Matching::base(int n) {
  std::vector<Arc> arcs;
  for (int k = 1; k <= n; ++k) arcs.emplace_back(2 * k - 1, 2 * k);
  return Matching(std::move(arcs));
}

int Matching::partner(int vertex) const {
  for (const Arc& a : arcs_) {
    if (a.opener == vertex) return a.closer;
    if (a.closer == vertex) return a.opener;
  }
  throw std::out_of_range("vertex " + std::to_string(vertex) + " not in matching");
}

bool Matching::has_crossing() const {
  for (std::size_t p = 0; p < arcs_.size(); ++p)
    for (std::size_t q = p + 1; q < arcs_.size(); ++q)
      if (arcs_[q].opener < arcs_[p].closer && arcs_[p].closer < arcs_[q].closer) return true;
  return false;
}

bool Matching::has_nesting() const {
  for (std::size_t p = 0; p < arcs_.size(); ++p)
    for (std::size_t q = p + 1; q < arcs_.size(); ++q)
      if (arcs_[q].closer < arcs_[p].closer) return true;
  return false;
}

std::string Matching::str() const {
  std::string out = "{";
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    if (k) out += ',';
    out += '{' + std::to_string(arcs_[k].opener) + ',' + std::to_string(arcs_[k].closer) + '}';
  }
  return out + '}';
}

MatchingKind classify(const Matching& m) {
  const bool crossing = m.has_crossing();
  const bool nesting = m.has_nesting();
  if (!crossing && !nesting) return MatchingKind::Both;
  if (!crossing) return MatchingKind::Noncrossing;
  if (!nesting) return MatchingKind::Nonnesting;
  return MatchingKind::Neither;
}

const char* to_string(MatchingKind kind) {
  switch (kind) {
    case MatchingKind::Noncrossing: return "noncrossing";
    case MatchingKind::Nonnesting: return "nonnesting";
    case MatchingKind::Both: return "both";
    case MatchingKind::Neither: return "neither";
  }
  return "?";
}

namespace {

void check_cap(int n, int cap) {
  require(n >= 0, "matching size must be nonnegative");
  if (n > cap)
    throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                             std::to_string(cap));
}

// Pairs the smallest free vertex with every later free vertex in turn.
void extend(std::vector<int>& partner, std::vector<Arc>& arcs,
            const std::function<void(const Matching&)>& visit) {
  const int size = static_cast<int>(partner.size()) - 1;
  int first = 1;
  while (first <= size && partner[static_cast<std::size_t>(first)] != 0) ++first;
  if (first > size) {
    visit(Matching(arcs));
    return;
  }
  for (int other = first + 1; other <= size; ++other) {
    if (partner[static_cast<std::size_t>(other)] != 0) continue;
    partner[static_cast<std::size_t>(first)] = other;
    partner[static_cast<std::size_t>(other)] = first;
    arcs.emplace_back(first, other);
    extend(partner, arcs, visit);
    arcs.pop_back();
    partner[static_cast<std::size_t>(first)] = 0;
    partner[static_cast<std::size_t>(other)] = 0;
  }
}

}  // namespace

void for_each_matching(int n, MatchingClass cls, const std::function<void(const Matching&)>& visit,
                       int cap) {
  check_cap(n, cap);
  if (cls == MatchingClass::All) {
    std::vector<int> partner(static_cast<std::size_t>(2 * n) + 1, 0);
    std::vector<Arc> arcs;
    extend(partner, arcs, visit);
    return;
  }
  for (const DyckPath& p : enumerate_dyck(n)) visit(matching_from_dyck(p, cls));
}

std::vector<Matching> enumerate_matchings(int n, MatchingClass cls, int cap) {
  std::vector<Matching> out;
  for_each_matching(n, cls, [&](const Matching& m) { out.push_back(m); }, cap);
  return out;
}

Matching syt_to_matching(const std::array<std::vector<int>, 2>& tableau) {
  const auto& top = tableau[0];
  const auto& bottom = tableau[1];
  require(top.size() == bottom.size(), "tableau rows must have equal length");
  const std::size_t n = top.size();
  std::vector<bool> seen(2 * n + 1, false);
  for (const auto* row : {&top, &bottom}) {
    for (std::size_t k = 0; k < n; ++k) {
      const int v = (*row)[k];
      require(v >= 1 && v <= static_cast<int>(2 * n) && !seen[static_cast<std::size_t>(v)],
              "tableau entries must be exactly 1..2n");
      seen[static_cast<std::size_t>(v)] = true;
      if (k > 0) require((*row)[k - 1] < v, "tableau rows must increase");
    }
  }
  std::vector<Arc> arcs;
  for (std::size_t k = 0; k < n; ++k) {
    require(top[k] < bottom[k], "tableau columns must increase");
    arcs.emplace_back(top[k], bottom[k]);
  }
  return Matching(std::move(arcs));
}

std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * static_cast<std::uint64_t>(k) + 1) / (k + 2);
  return c;
}

std::uint64_t double_factorial_odd(int n) {
  std::uint64_t r = 1;
  for (int k = 1; k <= n; ++k) r *= static_cast<std::uint64_t>(2 * k - 1);
  return r;
}

}  // namespace webperm
