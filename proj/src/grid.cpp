#include "webperm/grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "webperm/common.hpp"

namespace webperm {

namespace {

bool is_crossing(const Permutation& sigma, const Permutation& inverse, int i, int j) {
  return sigma(i) < j && i < inverse(j);
}

std::string cell_str(const Cell& c) {
  return "(" + std::to_string(c.col) + "," + std::to_string(c.row) + ")";
}

}  // namespace

CellSet crossings_of(const Permutation& sigma) {
  const Permutation inverse = sigma.inverse();
  CellSet cells;
  for (int i = 1; i <= sigma.size(); ++i)
    for (int j = sigma(i) + 1; j <= sigma.size(); ++j)
      if (i < inverse(j)) cells.insert({i, j});
  return cells;
}

GridConfiguration::GridConfiguration(Permutation sigma, CellSet elbows)
    : sigma_(std::move(sigma)), elbows_(std::move(elbows)) {
  const Permutation inverse = sigma_.inverse();
  for (const Cell& c : elbows_) {
    const bool inside = c.col >= 1 && c.col <= size() && c.row >= 1 && c.row <= size();
    if (!inside || !is_crossing(sigma_, inverse, c.col, c.row))
      throw std::invalid_argument("elbow " + cell_str(c) + " is not a crossing of " + sigma_.str());
  }
}

CellSet GridConfiguration::unresolved() const {
  CellSet open;
  for (const Cell& c : crossings_of(sigma_))
    if (!elbows_.contains(c)) open.insert(c);
  return open;
}

bool GridConfiguration::is_terminal() const { return crossings_of(sigma_) == elbows_; }

// ---------------------------------------------------------------------------
// Strand tracing

namespace {

enum Side { kLeft = 0, kRight = 1, kBottom = 2, kTop = 3 };
constexpr int kNoExit = -1;

enum class Tile { Empty, Marking, Elbow, Crossing, Vertical, Horizontal };

int route(Tile tile, Side entry) {
  switch (tile) {
    case Tile::Marking:
      if (entry == kLeft) return kTop;
      if (entry == kTop) return kLeft;
      return kNoExit;
    case Tile::Elbow:
      switch (entry) {
        case kLeft: return kBottom;
        case kBottom: return kLeft;
        case kTop: return kRight;
        case kRight: return kTop;
      }
      return kNoExit;
    case Tile::Crossing:
      switch (entry) {
        case kLeft: return kRight;
        case kRight: return kLeft;
        case kBottom: return kTop;
        case kTop: return kBottom;
      }
      return kNoExit;
    case Tile::Vertical:
      if (entry == kBottom) return kTop;
      if (entry == kTop) return kBottom;
      return kNoExit;
    case Tile::Horizontal:
      if (entry == kLeft) return kRight;
      if (entry == kRight) return kLeft;
      return kNoExit;
    case Tile::Empty:
      return kNoExit;
  }
  return kNoExit;
}

class Tracer {
 public:
  explicit Tracer(const GridConfiguration& g)
      : n_(g.size()), tiles_(static_cast<std::size_t>(n_ * n_)), used_(tiles_.size() * 4, false) {
    const Permutation& sigma = g.sigma();
    const Permutation inverse = sigma.inverse();
    for (int i = 1; i <= n_; ++i) {
      for (int j = 1; j <= n_; ++j) {
        const bool vertical = sigma(i) < j;
        const bool horizontal = i < inverse(j);
        Tile t = Tile::Empty;
        if (sigma(i) == j)
          t = Tile::Marking;
        else if (vertical && horizontal)
          t = g.elbows().contains({i, j}) ? Tile::Elbow : Tile::Crossing;
        else if (vertical)
          t = Tile::Vertical;
        else if (horizontal)
          t = Tile::Horizontal;
        tile(i, j) = t;
      }
    }
  }

  /// Follows the strand entering cell (i, j) through `entry`; returns the boundary label
  /// where it leaves.
  int follow(int i, int j, Side entry) {
    for (;;) {
      claim(i, j, entry);
      const int exit = route(tile(i, j), entry);
      if (exit == kNoExit)
        throw std::logic_error("strand dead-ends in cell " + cell_str({i, j}));
      claim(i, j, static_cast<Side>(exit));
      switch (exit) {
        case kLeft:
          if (i == 1) return j;
          --i;
          entry = kRight;
          break;
        case kRight:
          if (i == n_) throw std::logic_error("strand leaves through the right boundary");
          ++i;
          entry = kLeft;
          break;
        case kTop:
          if (j == n_) return n_ + i;
          ++j;
          entry = kBottom;
          break;
        case kBottom:
          if (j == 1) throw std::logic_error("strand leaves through the bottom boundary");
          --j;
          entry = kTop;
          break;
      }
    }
  }

 private:
  Tile& tile(int i, int j) { return tiles_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))]; }

  void claim(int i, int j, Side side) {
    std::vector<bool>::reference slot = used_[static_cast<std::size_t>(((i - 1) * n_ + (j - 1)) * 4 + side)];
    if (slot) throw std::logic_error("cell edge used twice at " + cell_str({i, j}));
    slot = true;
  }

  int n_;
  std::vector<Tile> tiles_;
  std::vector<bool> used_;
};

}  // namespace

Matching trace_matching(const GridConfiguration& g) {
  const int n = g.size();
  Tracer tracer(g);
  std::vector<int> partner(static_cast<std::size_t>(2 * n) + 1, 0);
  std::vector<Arc> arcs;
  auto connect = [&](int from, int to) {
    if (partner[static_cast<std::size_t>(to)] != 0 || from == to)
      throw std::logic_error("boundary interval reached twice");
    partner[static_cast<std::size_t>(from)] = to;
    partner[static_cast<std::size_t>(to)] = from;
    arcs.emplace_back(std::min(from, to), std::max(from, to));
  };
  for (int j = 1; j <= n; ++j)
    if (partner[static_cast<std::size_t>(j)] == 0) connect(j, tracer.follow(1, j, kLeft));
  for (int i = 1; i <= n; ++i)
    if (partner[static_cast<std::size_t>(n + i)] == 0) connect(n + i, tracer.follow(i, n, kTop));
  return Matching(std::move(arcs));
}

Matching web_matching(const Permutation& sigma) {
  return trace_matching(GridConfiguration(sigma, crossings_of(sigma)));
}

// ---------------------------------------------------------------------------
// Resolution

bool is_maximal_crossing(const GridConfiguration& g, const Cell& c) {
  const CellSet open = g.unresolved();
  if (!open.contains(c)) return false;
  return std::none_of(open.begin(), open.end(),
                      [&](const Cell& d) { return d != c && dominates(d, c); });
}

std::optional<Cell> maximal_crossing(const GridConfiguration& g, CrossingPolicy policy) {
  const CellSet open = g.unresolved();
  if (open.empty()) return std::nullopt;
  if (policy == CrossingPolicy::TopLeft) {
    // Highest row first, leftmost within it; always maximal for the quadrant order.
    return *std::min_element(open.begin(), open.end(), [](const Cell& a, const Cell& b) {
      return std::pair(-a.row, a.col) < std::pair(-b.row, b.col);
    });
  }
  std::optional<Cell> best;
  for (const Cell& c : open) {
    const bool maximal = std::none_of(open.begin(), open.end(),
                                      [&](const Cell& d) { return d != c && dominates(d, c); });
    if (maximal && (!best || c.row < best->row)) best = c;
  }
  return best;
}

namespace {

void require_maximal(const GridConfiguration& g, const Cell& c) {
  if (!is_maximal_crossing(g, c))
    throw std::invalid_argument("cell " + cell_str(c) + " is not a maximal unresolved crossing of " +
                                g.sigma().str());
}

}  // namespace

GridConfiguration smooth(const GridConfiguration& g, const Cell& c) {
  require_maximal(g, c);
  CellSet elbows = g.elbows();
  elbows.insert(c);
  return GridConfiguration(g.sigma(), std::move(elbows));
}

GridConfiguration switch_crossing(const GridConfiguration& g, const Cell& c) {
  require_maximal(g, c);
  const Permutation& sigma = g.sigma();
  std::vector<int> word(sigma.word().begin(), sigma.word().end());
  const int other = sigma.inverse()(c.row);
  word[static_cast<std::size_t>(c.col - 1)] = c.row;
  word[static_cast<std::size_t>(other - 1)] = sigma(c.col);
  Permutation switched(std::move(word));
  const CellSet crossings = crossings_of(switched);
  if (!std::includes(crossings.begin(), crossings.end(), g.elbows().begin(), g.elbows().end()))
    throw std::logic_error("switching " + cell_str(c) + " lost an elbow");
  return GridConfiguration(std::move(switched), g.elbows());
}

bool ResolutionOutcome::all_distinct() const {
  return std::all_of(terminals.begin(), terminals.end(),
                     [](const auto& entry) { return entry.second == 1; });
}

std::vector<Permutation> ResolutionOutcome::permutations() const {
  std::vector<Permutation> out;
  out.reserve(terminals.size());
  for (const auto& [sigma, count] : terminals) out.push_back(sigma);
  return out;
}

ResolutionOutcome resolve(const GridConfiguration& g, const ResolveOptions& options) {
  ResolutionOutcome outcome;
  std::vector<GridConfiguration> stack{g};
  while (!stack.empty()) {
    if (++outcome.nodes_visited > options.node_cap)
      throw ResourceLimitError("resolution exceeded the node cap of " +
                               std::to_string(options.node_cap));
    GridConfiguration current = std::move(stack.back());
    stack.pop_back();
    if (current.is_terminal()) {
      ++outcome.terminals[current.sigma()];
      continue;
    }
    const auto c = maximal_crossing(current, options.policy);
    if (!c) throw std::logic_error("non-terminal configuration without an unresolved crossing");
    stack.push_back(switch_crossing(current, *c));
    stack.push_back(smooth(current, *c));
  }
  return outcome;
}

std::vector<Permutation> web_permutations(int n, const ResolveOptions& options) {
  require(n >= 0, "n must be nonnegative");
  return resolve(GridConfiguration(Permutation::identity(n)), options).permutations();
}

std::vector<Permutation> web_permutations_for(const Matching& m, const ResolveOptions& options) {
  require(!m.has_nesting(), "Web_M needs a nonnesting matching, got " + m.str());
  const GridConfiguration start(Permutation::identity(m.n()), cells_above(dyck_of_matching(m)));
  return resolve(start, options).permutations();
}

}  // namespace webperm
