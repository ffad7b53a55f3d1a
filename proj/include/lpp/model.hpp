#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpp {

using StopId = int;
using EdgeId = int;
using LineId = int;
using OdId = int;

constexpr double kInfiniteBudget = std::numeric_limits<double>::infinity();

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Stop {
  StopId id = -1;
  std::string name;
  std::optional<double> x;
  std::optional<double> y;
};

// Undirected PTN edge; travel time is symmetric.
struct Edge {
  EdgeId id = -1;
  StopId from = -1;
  StopId to = -1;
  double travel_time_min = 0.0;
};

struct PublicTransportNetwork {
  std::vector<Stop> stops;
  std::vector<Edge> edges;

  int stop_index(StopId id) const;
  int edge_index(EdgeId id) const;
  bool has_stop(StopId id) const { return stop_index(id) >= 0; }
  bool has_edge(EdgeId id) const { return edge_index(id) >= 0; }
};

// A line is a simple path of PTN edges, served in both directions.
struct Line {
  LineId id = -1;
  std::vector<EdgeId> edge_sequence;
  std::vector<StopId> stop_sequence;     // derived, edge_sequence.size() + 1
  double roundtrip_time_min = 0.0;       // derived: 2 * sum(travel times) + buffer
  std::vector<double> candidate_headways;  // sorted ascending, minutes

  bool serves(StopId stop) const;
  // Position of `stop` along the line, -1 if not served.
  int stop_position(StopId stop) const;
};

struct ODPair {
  OdId id = -1;
  StopId origin = -1;
  StopId destination = -1;
  double demand = 0.0;  // passengers per period
};

struct VehicleType {
  int id = 0;
  double cost = 880.0;      // c_v, per vehicle
  double capacity = 50.0;   // passengers per vehicle over the period
};

// Cost parameters; defaults follow a standard urban-bus setting in DKK.
struct CostParameters {
  double ivt_rate = 119.0;             // per hour in vehicle
  double perceived_wait_rate = 238.0;  // per hour, initial wait up to the cap
  double hidden_wait_rate = 95.0;      // per hour beyond the cap
  double perceived_wait_cap_min = 5.0;
  double transfer_wait_rate = 179.0;   // per hour waiting at a transfer
  double transfer_penalty = 12.0;      // fixed per transfer
  double vehicle_cost = 880.0;         // c_v (single-type shortcut)
  double line_fixed_cost = 880.0;      // h_lf, per opened line
  double vehicle_capacity = 50.0;      // passengers per vehicle
  double fare = 22.0;                  // R, revenue per served passenger
  double lambda = 1.0;                 // passenger-cost weight
  double budget = kInfiniteBudget;     // B

  // Optional fixed acceptance threshold applied to every OD pair instead of
  // the derived one. Used by benchmark instances with unconstrained demand.
  std::optional<double> threshold_override;
  double rigid_tolerance_min = 15.0;

  double ivt_per_min() const { return ivt_rate / 60.0; }
};

struct Instance {
  PublicTransportNetwork network;
  std::vector<Line> lines;
  std::vector<ODPair> od;
  CostParameters costs;
  std::vector<VehicleType> vehicle_types;  // defaults to one aggregate type
  double turnaround_buffer_min = 0.0;

  int line_index(LineId id) const;
  int od_index(OdId id) const;
  const Line& line(LineId id) const;
};

// Headway <-> vehicle-count conversion for one line.
//
// f_v(h) = ceil(roundtrip / h): vehicles required to run headway h.
// f_h(z): smallest candidate headway operable with z vehicles; falls back to
// the largest candidate when even that needs more than z vehicles.
int f_v(const Line& line, double headway_min);
struct AchievableHeadway {
  double headway = 0.0;
  bool sufficient = true;  // false: z cannot even run the largest headway
};
AchievableHeadway f_h(const Line& line, int vehicles);

// Largest candidate headway strictly below `headway_min`; nullopt at h_min.
// Throws if `headway_min` is not a member of the candidate set.
std::optional<double> next_smaller_headway(const Line& line, double headway_min);

struct HeadwayProfileEntry {
  double headway = 0.0;
  int vehicles = 0;  // phi_lh = f_v(line, headway)
};

// Per line: candidate headways with exact vehicle requirements, deduplicated
// so that each vehicle count appears once (keeping the smallest headway that
// attains it).
struct HeadwayProfile {
  LineId line = -1;
  std::vector<HeadwayProfileEntry> entries;  // headway ascending
  double h_min = 0.0;
  double h_max = 0.0;
  int v_min = 0;  // f_v(h_max)

  bool contains(double headway) const;
};

HeadwayProfile build_headway_profile(const Line& line);

// Full structural validation; throws ValidationError with context on the
// first violated invariant. Called by the loader, usable on hand-built
// instances too.
void validate_instance(const Instance& instance);

// Derives stop sequences, roundtrip times and sorts headways in place.
// Throws ValidationError when an edge sequence is not a simple path.
void derive_line_fields(Instance& instance);

}  // namespace lpp
