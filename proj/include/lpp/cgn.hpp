#pragma once

#include <iosfwd>
#include <map>
#include <vector>

#include "lpp/model.hpp"

namespace lpp {

enum class NodeKind { Access, Egress, Transfer, LineStop };
enum class ArcKind { InVehicle, Access, Egress, Transfer, AlternativeMode };

struct CgnNode {
  int id = -1;
  NodeKind kind = NodeKind::Access;
  StopId stop = -1;
  LineId line = -1;  // LineStop only
};

struct CgnArc {
  int id = -1;
  ArcKind kind = ArcKind::InVehicle;
  int tail = -1;
  int head = -1;
  LineId line = -1;       // riding / boarded / receiving line; -1 for AlternativeMode
  double headway = -1.0;  // frequency-dependent kinds; -1 otherwise
  double cost = 0.0;
  EdgeId edge = -1;       // InVehicle only
  bool forward = true;    // InVehicle: direction along the line's stop sequence
};

// Frequency-expanded multigraph over the line pool. Transfer nodes mark
// stops served by at least two lines; a transfer itself is a single arc
// between the two lines' stop nodes, replicated per candidate headway of the
// receiving line.
struct ChangeAndGoNetwork {
  std::vector<CgnNode> nodes;
  std::vector<CgnArc> arcs;

  std::map<StopId, int> access_node;
  std::map<StopId, int> egress_node;
  std::map<StopId, int> transfer_node;
  std::map<LineId, std::vector<int>> line_stop_nodes;  // by stop position

  std::vector<std::vector<int>> out_arcs;  // node id -> arc ids

  int count_nodes(NodeKind kind) const;
  int count_arcs(ArcKind kind) const;
};

// Waiting cost of boarding a line with the given headway at the start of a
// journey: expected wait of half a headway, split into perceived time up to
// the cap and hidden time beyond it.
double access_wait_cost(double headway_min, const CostParameters& costs);

// Cost of one transfer onto a line with the given headway.
double transfer_cost(double headway_min, const CostParameters& costs);

double in_vehicle_cost(double travel_time_min, const CostParameters& costs);

double arc_cost(const CgnArc& arc, const Instance& instance, const CostParameters& costs);

ChangeAndGoNetwork build_cgn(const Instance& instance);

// Delimited node/arc dump for debugging.
void dump_cgn(const ChangeAndGoNetwork& cgn, std::ostream& out);

const char* to_string(NodeKind kind);
const char* to_string(ArcKind kind);

}  // namespace lpp
