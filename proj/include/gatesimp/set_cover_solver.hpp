#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "gatesimp/common.hpp"
#include "gatesimp/cover_instance.hpp"

namespace gatesimp {

struct GreedyPick {
  VertexId vertex = 0;
  std::size_t newly_covered = 0;
  double price = 0;  // 1 / newly_covered
};

struct GreedyTrace {
  std::vector<GreedyPick> picks;
  std::size_t size() const { return picks.size(); }
};

struct CoverSolution {
  std::vector<VertexId> vertices;  // ascending
  GreedyTrace trace;               // empty for exact solves
  std::size_t nodes = 0;           // search nodes, exact solves only
};

namespace detail {

inline void require_feasible(const CoverInstance& inst) {
  auto missing = inst.uncoverable(10);
  if (missing.empty()) return;
  std::string msg = "infeasible cover instance; uncoverable pairs:";
  for (const auto& p : missing) msg += " (" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
  throw InfeasibleError(msg);
}

}  // namespace detail

/// Greedy set cover: repeatedly take the candidate with the lowest price
/// 1/|C_x \ R|, i.e. the most newly covered pairs; ties go to the smaller id.
///
/// Gains only shrink as R grows, so the queue is evaluated lazily: a popped
/// entry is re-scored and selected only if its stored gain is still exact.
inline CoverSolution greedy_solve(const CoverInstance& inst) {
  detail::require_feasible(inst);
  CoverSolution sol;
  std::vector<char> covered(inst.ground.size(), 0);
  std::size_t remaining = inst.ground.size();

  struct Entry {
    std::size_t gain;
    VertexId vertex;
    bool operator<(const Entry& o) const {
      return gain != o.gain ? gain < o.gain : vertex > o.vertex;
    }
  };
  std::priority_queue<Entry> queue;
  for (VertexId x = 0; x < inst.candidates.size(); ++x)
    if (!inst.candidates[x].empty()) queue.push({inst.candidates[x].size(), x});

  while (remaining > 0) {
    Entry top = queue.top();
    queue.pop();
    std::size_t gain = 0;
    for (auto e : inst.candidates[top.vertex]) gain += !covered[e];
    if (gain != top.gain) {
      if (gain > 0) queue.push({gain, top.vertex});
      continue;
    }
    for (auto e : inst.candidates[top.vertex]) covered[e] = 1;
    remaining -= gain;
    sol.trace.picks.push_back({top.vertex, gain, 1.0 / static_cast<double>(gain)});
    sol.vertices.push_back(top.vertex);
  }
  std::sort(sol.vertices.begin(), sol.vertices.end());
  return sol;
}

struct ExactOptions {
  std::size_t node_budget = 5'000'000;
};

/// Minimum set cover by branch and bound.
///
/// Branches on the uncovered pair with the fewest allowed candidates; after a
/// candidate's subtree is exhausted it is forbidden for its siblings, so every
/// cover is enumerated at most once. The greedy solution is the initial
/// incumbent and ceil(uncovered / max gain) the lower bound.
inline CoverSolution exact_solve(const CoverInstance& inst, ExactOptions opt = {}) {
  detail::require_feasible(inst);
  CoverSolution best;
  if (inst.ground.empty()) return best;

  const std::size_t universe = inst.ground.size();
  std::vector<VertexId> cand_ids;
  for (VertexId x = 0; x < inst.candidates.size(); ++x)
    if (!inst.candidates[x].empty()) cand_ids.push_back(x);
  const std::size_t nc = cand_ids.size();
  std::vector<std::vector<std::uint32_t>> covers_of(universe);  // element -> candidate slots
  for (std::uint32_t c = 0; c < nc; ++c)
    for (auto e : inst.candidates[cand_ids[c]]) covers_of[e].push_back(c);

  std::vector<VertexId> incumbent = greedy_solve(inst).vertices;
  std::vector<int> cover_count(universe, 0);
  std::vector<char> forbidden(nc, 0);
  std::vector<std::uint32_t> chosen;
  std::size_t uncovered = universe;
  std::size_t nodes = 0;

  auto gain_of = [&](std::uint32_t c) {
    std::size_t g = 0;
    for (auto e : inst.candidates[cand_ids[c]]) g += cover_count[e] == 0;
    return g;
  };
  auto apply = [&](std::uint32_t c, int delta) {
    for (auto e : inst.candidates[cand_ids[c]]) {
      if (delta > 0 && cover_count[e] == 0) --uncovered;
      cover_count[e] += delta;
      if (delta < 0 && cover_count[e] == 0) ++uncovered;
    }
  };

  auto search = [&](auto&& self) -> void {
    if (++nodes > opt.node_budget)
      throw ResourceError("exact_solve: node budget " + std::to_string(opt.node_budget) +
                          " exhausted");
    if (uncovered == 0) {
      if (chosen.size() < incumbent.size()) {
        incumbent.clear();
        for (auto c : chosen) incumbent.push_back(cand_ids[c]);
      }
      return;
    }
    if (chosen.size() + 1 >= incumbent.size()) return;
    std::size_t max_gain = 0;
    for (std::uint32_t c = 0; c < nc; ++c)
      if (!forbidden[c]) max_gain = std::max(max_gain, gain_of(c));
    if (max_gain == 0) return;
    const std::size_t lower = (uncovered + max_gain - 1) / max_gain;
    if (chosen.size() + lower >= incumbent.size()) return;

    std::size_t pivot = universe, pivot_options = SIZE_MAX;
    for (std::size_t e = 0; e < universe; ++e) {
      if (cover_count[e]) continue;
      std::size_t options = 0;
      for (auto c : covers_of[e]) options += !forbidden[c];
      if (options < pivot_options) {
        pivot_options = options;
        pivot = e;
        if (options <= 1) break;
      }
    }
    if (pivot_options == 0) return;

    std::vector<std::pair<std::size_t, std::uint32_t>> order;
    for (auto c : covers_of[pivot])
      if (!forbidden[c]) order.emplace_back(gain_of(c), c);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    std::vector<std::uint32_t> banned;
    for (auto [gain, c] : order) {
      chosen.push_back(c);
      apply(c, +1);
      self(self);
      apply(c, -1);
      chosen.pop_back();
      forbidden[c] = 1;
      banned.push_back(c);
    }
    for (auto c : banned) forbidden[c] = 0;
  };
  search(search);

  best.vertices = std::move(incumbent);
  std::sort(best.vertices.begin(), best.vertices.end());
  best.nodes = nodes;
  return best;
}

}  // namespace gatesimp
