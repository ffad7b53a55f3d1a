#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lpp/model.hpp"

namespace lpp {

struct LoadError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Loads an instance directory:
//   stops.csv   id;name;x;y
//   edges.csv   id;from;to;travel_time_min
//   od.csv      origin;destination;passengers
//   pool.csv    line_id;edge_id;position
//   config      flat key = value file (cost parameters, lambda, budget,
//               candidate headways, turnaround buffer)
// All files are semicolon-delimited UTF-8 with a header row. Errors carry
// file/line context and the load fails atomically.
Instance load_instance(const std::filesystem::path& dir);

// Writes the instance back in the same format. Number formatting is
// canonical (shortest round-tripping decimal), so save -> load -> save is
// byte-identical.
void save_instance(const Instance& instance, const std::filesystem::path& dir);

// Shortest decimal representation that parses back to exactly `v`.
std::string fmt_double(double v);

// Flat key=value config file support ('#' comments, blank lines ignored).
std::map<std::string, std::string> read_key_value_file(const std::filesystem::path& path);

}  // namespace lpp
