#include "webperm/serialize.hpp"

#include <limits>

namespace webperm {

using nlohmann::json;

json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

json to_json(const Matching& m) {
  json arcs = json::array();
  for (const Arc& a : m.arcs()) arcs.push_back({a.opener, a.closer});
  return arcs;
}

json to_json(const DyckPath& p) { return p.str(); }

json to_json(const GridConfiguration& g) {
  json elbows = json::array();
  for (const Cell& c : g.elbows()) elbows.push_back({c.col, c.row});
  return {{"sigma", std::vector<int>(g.sigma().word().begin(), g.sigma().word().end())},
          {"elbows", elbows}};
}

json to_json(const ResolutionOutcome& r) {
  json out = json::object();
  for (const auto& [sigma, count] : r.terminals) out[sigma.str()] = count;
  return out;
}

json to_json(const Cycle& c) { return std::vector<int>(c.entries().begin(), c.entries().end()); }

json to_json(const CoefficientVector& c) {
  json out = json::object();
  for (const auto& [m, coeff] : c) out[m.str()] = to_json(coeff);
  return out;
}

json to_json(const ClaimReport& r) {
  return {{"claim", r.claim},
          {"n", r.n},
          {"k", r.k ? json(*r.k) : json(nullptr)},
          {"lhs", to_json(r.lhs)},
          {"rhs", to_json(r.rhs)},
          {"pass", r.pass}};
}

json to_json(const TransitionMatrix& a) {
  json rows = json::array();
  json cols = json::array();
  json entries = json::array();
  for (const auto& m : a.row_labels()) rows.push_back(to_json(m));
  for (const auto& m : a.col_labels()) cols.push_back(to_json(m));
  for (std::size_t r = 0; r < a.dimension(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < a.dimension(); ++c) row.push_back(to_json(a(r, c)));
    entries.push_back(std::move(row));
  }
  return {{"n", a.n()}, {"rows", rows}, {"cols", cols}, {"entries", entries}};
}

Matching matching_from_json(const json& j) {
  std::vector<std::array<int, 2>> pairs;
  for (const auto& pair : j) pairs.push_back({pair.at(0).get<int>(), pair.at(1).get<int>()});
  return Matching::from_pairs(pairs);
}

DyckPath dyck_from_json(const json& j) { return DyckPath(j.get<std::string>()); }

GridConfiguration grid_from_json(const json& j) {
  CellSet elbows;
  for (const auto& cell : j.at("elbows")) elbows.insert({cell.at(0).get<int>(), cell.at(1).get<int>()});
  return GridConfiguration(Permutation(j.at("sigma").get<std::vector<int>>()), std::move(elbows));
}

Cycle cycle_from_json(const json& j) { return Cycle(j.get<std::vector<int>>()); }

}  // namespace webperm
