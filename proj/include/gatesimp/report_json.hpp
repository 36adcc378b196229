#pragma once

// JSON views of the public result types (nlohmann/json).

#include <json.hpp>

#include "gatesimp/distance_oracle.hpp"
#include "gatesimp/gate_graph.hpp"
#include "gatesimp/gates.hpp"
#include "gatesimp/report.hpp"
#include "gatesimp/verify.hpp"

namespace gatesimp {

inline nlohmann::json to_json(const VerificationReport& r, bool with_timing = true) {
  nlohmann::json j;
  j["check"] = r.check;
  j["pass"] = r.pass;
  j["authoritative"] = r.authoritative;
  j["pairs_checked"] = r.pairs_checked;
  j["violation_count"] = r.violation_count;
  j["violations"] = nlohmann::json::array();
  for (const auto& v : r.violations)
    j["violations"].push_back(
        {{"u", v.u}, {"v", v.v}, {"expected", v.expected}, {"observed", v.observed}});
  if (!r.counts.empty()) j["counts"] = r.counts;
  j["elapsed_ms"] = with_timing ? r.elapsed_ms : 0.0;
  return j;
}

inline nlohmann::json to_json(const GraphStats& s) {
  return {{"n", s.n},           {"m", s.m},
          {"m_doubled", 2 * s.m}, {"components", s.components},
          {"diameter", s.diameter}, {"avg_dist", s.avg_dist},
          {"exact", s.exact},     {"sources", s.sources}};
}

inline nlohmann::json to_json(const Graph& g, const QueryResult& q) {
  nlohmann::json j;
  if (q.distance == kUnreachable)
    j["distance"] = nullptr;
  else
    j["distance"] = q.distance;
  j["route"] = to_string(q.route);
  if (q.witness) j["witness"] = {g.label(q.witness->first), g.label(q.witness->second)};
  return j;
}

inline nlohmann::json to_json(const Graph& g, const GateVertexSet& gs, bool with_timing = true) {
  nlohmann::json labels = nlohmann::json::array();
  for (VertexId v : gs.vertices) labels.push_back(g.label(v));
  return {{"mode", to_string(gs.mode)},
          {"param", gs.param},
          {"method", to_string(gs.method)},
          {"size", gs.size()},
          {"ground_size", gs.stats.ground_size},
          {"build_ms", with_timing ? gs.stats.build_ms : 0.0},
          {"vertices", labels}};
}

inline nlohmann::json to_json(const ChainReport& c) {
  return {{"i", c.i},
          {"min_gate_prev", c.min_gate_prev},
          {"min_skip", c.min_skip},
          {"min_gate_next", c.min_gate_next},
          {"prev_ge_skip", c.prev_ge_skip},
          {"skip_ge_next", c.skip_ge_next},
          {"valid", c.valid}};
}

inline nlohmann::json to_json(const ApproxRecord& a) {
  nlohmann::json j = {{"greedy", a.greedy}, {"exact", a.exact}, {"ground", a.ground},
                      {"ratio", a.ratio},   {"within", a.within}};
  j["bound"] = a.bound ? nlohmann::json(*a.bound) : nlohmann::json(nullptr);
  return j;
}

}  // namespace gatesimp
