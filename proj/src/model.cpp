#include "lpp/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace lpp {

namespace {

template <typename T>
int index_of(const std::vector<T>& items, int id) {
  for (size_t i = 0; i < items.size(); ++i) {
    if (items[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

int PublicTransportNetwork::stop_index(StopId id) const { return index_of(stops, id); }
int PublicTransportNetwork::edge_index(EdgeId id) const { return index_of(edges, id); }

bool Line::serves(StopId stop) const { return stop_position(stop) >= 0; }

int Line::stop_position(StopId stop) const {
  for (size_t i = 0; i < stop_sequence.size(); ++i) {
    if (stop_sequence[i] == stop) return static_cast<int>(i);
  }
  return -1;
}

int Instance::line_index(LineId id) const { return index_of(lines, id); }
int Instance::od_index(OdId id) const { return index_of(od, id); }

const Line& Instance::line(LineId id) const {
  int idx = line_index(id);
  if (idx < 0) throw ValidationError("unknown line id " + std::to_string(id));
  return lines[idx];
}

int f_v(const Line& line, double headway_min) {
  if (!(headway_min > 0.0)) {
    throw ValidationError("f_v: non-positive headway for line " + std::to_string(line.id));
  }
  double ratio = line.roundtrip_time_min / headway_min;
  int vehicles = static_cast<int>(std::ceil(ratio - 1e-9));
  return std::max(vehicles, 1);
}

AchievableHeadway f_h(const Line& line, int vehicles) {
  if (vehicles < 1) {
    throw ValidationError("f_h: vehicle count below 1 for line " + std::to_string(line.id));
  }
  for (double h : line.candidate_headways) {
    if (f_v(line, h) <= vehicles) return {h, true};
  }
  return {line.candidate_headways.back(), false};
}

std::optional<double> next_smaller_headway(const Line& line, double headway_min) {
  const auto& hs = line.candidate_headways;
  for (size_t i = 0; i < hs.size(); ++i) {
    if (hs[i] == headway_min) {
      if (i == 0) return std::nullopt;
      return hs[i - 1];
    }
  }
  throw ValidationError("headway " + std::to_string(headway_min) +
                        " not in candidate set of line " + std::to_string(line.id));
}

bool HeadwayProfile::contains(double headway) const {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const HeadwayProfileEntry& e) { return e.headway == headway; });
}

HeadwayProfile build_headway_profile(const Line& line) {
  HeadwayProfile profile;
  profile.line = line.id;
  int last_vehicles = -1;
  for (double h : line.candidate_headways) {
    int vehicles = f_v(line, h);
    if (vehicles == last_vehicles) {
      // Same fleet size: the smaller headway already in the profile wins.
      continue;
    }
    profile.entries.push_back({h, vehicles});
    last_vehicles = vehicles;
  }
  profile.h_min = profile.entries.front().headway;
  profile.h_max = profile.entries.back().headway;
  profile.v_min = profile.entries.back().vehicles;
  return profile;
}

void derive_line_fields(Instance& instance) {
  const auto& net = instance.network;
  for (auto& line : instance.lines) {
    if (line.edge_sequence.empty()) {
      throw ValidationError("line " + std::to_string(line.id) + " has no edges");
    }
    std::vector<const Edge*> edges;
    for (EdgeId eid : line.edge_sequence) {
      int idx = net.edge_index(eid);
      if (idx < 0) {
        throw ValidationError("line " + std::to_string(line.id) +
                              " references unknown edge id " + std::to_string(eid));
      }
      edges.push_back(&net.edges[idx]);
    }

    // Orient the chain of undirected edges into a stop sequence.
    line.stop_sequence.clear();
    double one_way = 0.0;
    if (edges.size() == 1) {
      line.stop_sequence = {edges[0]->from, edges[0]->to};
    } else {
      StopId first = (edges[0]->from == edges[1]->from || edges[0]->from == edges[1]->to)
                         ? edges[0]->to
                         : edges[0]->from;
      line.stop_sequence.push_back(first);
      StopId at = first;
      for (const Edge* e : edges) {
        StopId next;
        if (e->from == at) {
          next = e->to;
        } else if (e->to == at) {
          next = e->from;
        } else {
          throw ValidationError("line " + std::to_string(line.id) +
                                " edge sequence is not a connected path at edge " +
                                std::to_string(e->id));
        }
        line.stop_sequence.push_back(next);
        at = next;
      }
    }
    for (const Edge* e : edges) one_way += e->travel_time_min;

    std::unordered_set<StopId> seen(line.stop_sequence.begin(), line.stop_sequence.end());
    if (seen.size() != line.stop_sequence.size()) {
      throw ValidationError("line " + std::to_string(line.id) +
                            " is not a simple path (repeated stop)");
    }
    line.roundtrip_time_min = 2.0 * one_way + instance.turnaround_buffer_min;
    std::sort(line.candidate_headways.begin(), line.candidate_headways.end());
  }
}

void validate_instance(const Instance& instance) {
  const auto& net = instance.network;

  std::unordered_set<StopId> stop_ids;
  for (const auto& s : net.stops) {
    if (!stop_ids.insert(s.id).second) {
      throw ValidationError("duplicate stop id " + std::to_string(s.id));
    }
  }
  std::unordered_set<EdgeId> edge_ids;
  for (const auto& e : net.edges) {
    if (!edge_ids.insert(e.id).second) {
      throw ValidationError("duplicate edge id " + std::to_string(e.id));
    }
    if (!stop_ids.count(e.from) || !stop_ids.count(e.to)) {
      throw ValidationError("edge " + std::to_string(e.id) + " references unknown stop");
    }
    if (!(e.travel_time_min > 0.0)) {
      throw ValidationError("edge " + std::to_string(e.id) + " has non-positive travel time");
    }
  }

  if (instance.lines.empty()) throw ValidationError("no lines in pool");
  std::unordered_set<LineId> line_ids;
  for (const auto& line : instance.lines) {
    if (!line_ids.insert(line.id).second) {
      throw ValidationError("duplicate line id " + std::to_string(line.id));
    }
    if (line.candidate_headways.empty()) {
      throw ValidationError("line " + std::to_string(line.id) + " has no candidate headways");
    }
    for (size_t i = 0; i < line.candidate_headways.size(); ++i) {
      if (!(line.candidate_headways[i] > 0.0)) {
        throw ValidationError("line " + std::to_string(line.id) + " has non-positive headway");
      }
      if (i > 0 && line.candidate_headways[i] <= line.candidate_headways[i - 1]) {
        throw ValidationError("line " + std::to_string(line.id) +
                              " candidate headways not strictly ascending");
      }
    }
    if (!(line.roundtrip_time_min > 0.0)) {
      throw ValidationError("line " + std::to_string(line.id) + " has non-positive roundtrip time");
    }
  }

  if (instance.od.empty()) throw ValidationError("no OD pairs");
  std::set<std::pair<StopId, StopId>> od_keys;
  for (const auto& d : instance.od) {
    if (d.origin == d.destination) {
      throw ValidationError("OD " + std::to_string(d.id) + " has equal origin and destination");
    }
    if (!stop_ids.count(d.origin) || !stop_ids.count(d.destination)) {
      throw ValidationError("OD " + std::to_string(d.id) + " references unknown stop");
    }
    if (d.demand < 0.0) {
      throw ValidationError("OD " + std::to_string(d.id) + " has negative demand");
    }
    if (!od_keys.insert({d.origin, d.destination}).second) {
      throw ValidationError("duplicate OD pair (" + std::to_string(d.origin) + "," +
                            std::to_string(d.destination) + ")");
    }
  }

  const auto& c = instance.costs;
  auto require_nonneg = [](double v, const char* what) {
    if (v < 0.0) throw ValidationError(std::string(what) + " must be non-negative");
  };
  require_nonneg(c.ivt_rate, "ivt_rate");
  require_nonneg(c.perceived_wait_rate, "perceived_wait_rate");
  require_nonneg(c.hidden_wait_rate, "hidden_wait_rate");
  require_nonneg(c.perceived_wait_cap_min, "perceived_wait_cap_min");
  require_nonneg(c.transfer_wait_rate, "transfer_wait_rate");
  require_nonneg(c.transfer_penalty, "transfer_penalty");
  require_nonneg(c.vehicle_cost, "vehicle_cost");
  require_nonneg(c.line_fixed_cost, "line_fixed_cost");
  require_nonneg(c.fare, "fare");
  if (!(c.lambda > 0.0)) throw ValidationError("lambda must be positive");
  if (!(c.vehicle_capacity > 0.0)) throw ValidationError("vehicle_capacity must be positive");
  if (instance.vehicle_types.empty()) {
    throw ValidationError("at least one vehicle type required");
  }
  for (const auto& v : instance.vehicle_types) {
    require_nonneg(v.cost, "vehicle type cost");
    if (!(v.capacity > 0.0)) throw ValidationError("vehicle type capacity must be positive");
  }
}

}  // namespace lpp
