#include "webperm/dyck.hpp"

#include <algorithm>
#include <stdexcept>

#include "webperm/common.hpp"

namespace webperm {

DyckPath::DyckPath(std::string_view steps) : steps_(steps) {
  int height = 0;
  for (char s : steps_) {
    if (s == 'N') {
      ++height;
    } else if (s == 'E') {
      if (--height < 0) throw std::invalid_argument("Dyck path '" + steps_ + "' dips below y = x");
    } else {
      throw std::invalid_argument("Dyck path '" + steps_ + "' has a step other than N or E");
    }
  }
  if (height != 0) throw std::invalid_argument("Dyck path '" + steps_ + "' is unbalanced");
}

DyckPath DyckPath::from_column_heights(const std::vector<int>& heights) {
  std::string steps;
  int previous = 0;
  for (int h : heights) {
    require(h >= previous, "column heights must be weakly increasing");
    steps.append(static_cast<std::size_t>(h - previous), 'N');
    steps += 'E';
    previous = h;
  }
  return DyckPath(steps);
}

DyckPath DyckPath::minimum(int n) {
  std::string steps;
  for (int k = 0; k < n; ++k) steps += "NE";
  return DyckPath(steps);
}

DyckPath DyckPath::maximum(int n) {
  return DyckPath(std::string(static_cast<std::size_t>(n), 'N') +
                  std::string(static_cast<std::size_t>(n), 'E'));
}

std::vector<int> DyckPath::column_heights() const {
  std::vector<int> heights;
  heights.reserve(static_cast<std::size_t>(n()));
  int north = 0;
  for (char s : steps_) {
    if (s == 'N')
      ++north;
    else
      heights.push_back(north);
  }
  return heights;
}

namespace {

void grow(int n, int north, int east, std::string& prefix, std::vector<DyckPath>& out) {
  if (east == n) {
    out.emplace_back(prefix);
    return;
  }
  if (north < n) {
    prefix += 'N';
    grow(n, north + 1, east, prefix, out);
    prefix.pop_back();
  }
  if (east < north) {
    prefix += 'E';
    grow(n, north, east + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<DyckPath> enumerate_dyck(int n) {
  require(n >= 0, "Dyck path size must be nonnegative");
  std::vector<DyckPath> out;
  std::string prefix;
  grow(n, 0, 0, prefix, out);
  return out;
}

DyckPath dyck_of_matching(const Matching& m) {
  std::string steps;
  for (int v = 1; v <= 2 * m.n(); ++v) steps += m.is_opener(v) ? 'N' : 'E';
  return DyckPath(steps);
}

Matching matching_from_dyck(const DyckPath& p, MatchingClass cls) {
  require(cls != MatchingClass::All, "matching_from_dyck needs the noncrossing or nonnesting class");
  std::vector<Arc> arcs;
  std::vector<int> open;
  std::size_t next_unclosed = 0;
  const std::string& steps = p.str();
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const int vertex = static_cast<int>(k) + 1;
    if (steps[k] == 'N') {
      open.push_back(vertex);
    } else if (cls == MatchingClass::Noncrossing) {
      arcs.emplace_back(open.back(), vertex);
      open.pop_back();
    } else {
      arcs.emplace_back(open[next_unclosed++], vertex);
    }
  }
  return Matching(std::move(arcs));
}

DyckPath dyck_of_permutation(const Permutation& sigma) {
  std::vector<int> heights;
  int h = 0;
  for (int i = 1; i <= sigma.size(); ++i) {
    h = std::max({h, sigma(i), i});
    heights.push_back(h);
  }
  return DyckPath::from_column_heights(heights);
}

bool dyck_leq(const DyckPath& p, const DyckPath& q) {
  if (p.n() != q.n()) throw std::invalid_argument("dyck_leq: paths of different length");
  const auto hp = p.column_heights();
  const auto hq = q.column_heights();
  for (std::size_t i = 0; i < hp.size(); ++i)
    if (hp[i] > hq[i]) return false;
  return true;
}

std::string table_order_key(const DyckPath& p) {
  std::string key = p.str();
  std::replace(key.begin(), key.end(), 'N', '0');
  std::replace(key.begin(), key.end(), 'E', '1');
  return key;
}

CellSet cells_above(const DyckPath& p) {
  CellSet cells;
  const auto heights = p.column_heights();
  for (int i = 1; i <= p.n(); ++i)
    for (int j = heights[static_cast<std::size_t>(i - 1)] + 1; j <= p.n(); ++j) cells.insert({i, j});
  return cells;
}

}  // namespace webperm
