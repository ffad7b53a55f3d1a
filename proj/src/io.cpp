#include "lpp/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace lpp {

namespace {

namespace fs = std::filesystem;

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(s);
  while (std::getline(in, field, sep)) out.push_back(trim(field));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

struct CsvRow {
  std::vector<std::string> fields;
  int line_no = 0;
};

[[noreturn]] void fail(const fs::path& file, int line_no, const std::string& msg) {
  throw LoadError(file.filename().string() + ":" + std::to_string(line_no) + ": " + msg);
}

std::vector<CsvRow> read_csv(const fs::path& file, size_t expected_fields) {
  std::ifstream in(file);
  if (!in) throw LoadError("cannot open " + file.string());
  std::vector<CsvRow> rows;
  std::string raw;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    if (!header_seen) {  // header row carries column names, content unchecked
      header_seen = true;
      continue;
    }
    auto fields = split(s, ';');
    if (fields.size() != expected_fields) {
      fail(file, line_no,
           "malformed row: expected " + std::to_string(expected_fields) + " fields, got " +
               std::to_string(fields.size()));
    }
    rows.push_back({std::move(fields), line_no});
  }
  return rows;
}

int parse_int(const fs::path& file, const CsvRow& row, size_t idx) {
  try {
    size_t pos = 0;
    int v = std::stoi(row.fields[idx], &pos);
    if (pos != row.fields[idx].size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    fail(file, row.line_no, "expected integer in field " + std::to_string(idx + 1) + ", got '" +
                                row.fields[idx] + "'");
  }
}

double parse_double(const fs::path& file, const CsvRow& row, size_t idx) {
  try {
    size_t pos = 0;
    double v = std::stod(row.fields[idx], &pos);
    if (pos != row.fields[idx].size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    fail(file, row.line_no, "expected number in field " + std::to_string(idx + 1) + ", got '" +
                                row.fields[idx] + "'");
  }
}

double config_double(const std::map<std::string, std::string>& cfg, const std::string& key,
                     double fallback) {
  auto it = cfg.find(key);
  if (it == cfg.end()) return fallback;
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    throw LoadError("config: key '" + key + "' is not a number: '" + it->second + "'");
  }
}

std::vector<double> parse_headways(const std::string& value, const std::string& key) {
  std::vector<double> out;
  for (const auto& tok : split(value, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw LoadError("config: bad headway '" + tok + "' in " + key);
    }
  }
  if (out.empty()) throw LoadError("config: empty headway list in " + key);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> default_headways() {
  std::vector<double> hs;
  for (int h = 2; h <= 20; ++h) hs.push_back(h);
  return hs;
}

}  // namespace

std::string fmt_double(double v) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::stod(buf) == v) break;
  }
  return buf;
}

std::map<std::string, std::string> read_key_value_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path.string());
  std::map<std::string, std::string> out;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    size_t eq = s.find('=');
    if (eq == std::string::npos) fail(path, line_no, "expected 'key = value'");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key.empty()) fail(path, line_no, "empty key");
    out[key] = value;
  }
  return out;
}

Instance load_instance(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw LoadError("not a directory: " + dir.string());
  for (const char* name : {"stops.csv", "edges.csv", "od.csv", "pool.csv", "config"}) {
    if (!fs::exists(dir / name)) throw LoadError("missing file: " + (dir / name).string());
  }

  Instance instance;

  auto stops_file = dir / "stops.csv";
  for (const auto& row : read_csv(stops_file, 4)) {
    Stop s;
    s.id = parse_int(stops_file, row, 0);
    s.name = row.fields[1];
    if (!row.fields[2].empty()) s.x = parse_double(stops_file, row, 2);
    if (!row.fields[3].empty()) s.y = parse_double(stops_file, row, 3);
    instance.network.stops.push_back(std::move(s));
  }

  auto edges_file = dir / "edges.csv";
  for (const auto& row : read_csv(edges_file, 4)) {
    Edge e;
    e.id = parse_int(edges_file, row, 0);
    e.from = parse_int(edges_file, row, 1);
    e.to = parse_int(edges_file, row, 2);
    e.travel_time_min = parse_double(edges_file, row, 3);
    instance.network.edges.push_back(e);
  }

  auto od_file = dir / "od.csv";
  int next_od = 0;
  for (const auto& row : read_csv(od_file, 3)) {
    ODPair d;
    d.id = next_od++;
    d.origin = parse_int(od_file, row, 0);
    d.destination = parse_int(od_file, row, 1);
    d.demand = parse_double(od_file, row, 2);
    instance.od.push_back(d);
  }

  auto cfg = read_key_value_file(dir / "config");
  auto& c = instance.costs;
  c.ivt_rate = config_double(cfg, "ivt_rate", c.ivt_rate);
  c.perceived_wait_rate = config_double(cfg, "perceived_wait_rate", c.perceived_wait_rate);
  c.hidden_wait_rate = config_double(cfg, "hidden_wait_rate", c.hidden_wait_rate);
  c.perceived_wait_cap_min = config_double(cfg, "perceived_wait_cap_min", c.perceived_wait_cap_min);
  c.transfer_wait_rate = config_double(cfg, "transfer_wait_rate", c.transfer_wait_rate);
  c.transfer_penalty = config_double(cfg, "transfer_penalty", c.transfer_penalty);
  c.vehicle_cost = config_double(cfg, "vehicle_cost", c.vehicle_cost);
  c.line_fixed_cost = config_double(cfg, "line_fixed_cost", c.line_fixed_cost);
  c.vehicle_capacity = config_double(cfg, "vehicle_capacity", c.vehicle_capacity);
  c.fare = config_double(cfg, "fare", c.fare);
  c.lambda = config_double(cfg, "lambda", c.lambda);
  c.rigid_tolerance_min = config_double(cfg, "rigid_tolerance_min", c.rigid_tolerance_min);
  if (auto it = cfg.find("budget"); it != cfg.end()) {
    c.budget = (it->second == "inf" || it->second == "unbounded")
                   ? kInfiniteBudget
                   : config_double(cfg, "budget", kInfiniteBudget);
  }
  if (cfg.count("threshold_override")) {
    c.threshold_override = config_double(cfg, "threshold_override", 0.0);
  }
  instance.turnaround_buffer_min = config_double(cfg, "turnaround_buffer_min", 0.0);

  std::vector<double> global_headways = default_headways();
  if (auto it = cfg.find("headways"); it != cfg.end()) {
    global_headways = parse_headways(it->second, "headways");
  }

  // pool.csv rows may arrive in any order; `position` orders edges per line.
  auto pool_file = dir / "pool.csv";
  std::map<LineId, std::vector<std::pair<int, EdgeId>>> pool;
  for (const auto& row : read_csv(pool_file, 3)) {
    LineId lid = parse_int(pool_file, row, 0);
    EdgeId eid = parse_int(pool_file, row, 1);
    int pos = parse_int(pool_file, row, 2);
    pool[lid].push_back({pos, eid});
  }
  for (auto& [lid, entries] : pool) {
    std::sort(entries.begin(), entries.end());
    Line line;
    line.id = lid;
    for (auto& [pos, eid] : entries) line.edge_sequence.push_back(eid);
    std::string key = "headways_line_" + std::to_string(lid);
    line.candidate_headways =
        cfg.count(key) ? parse_headways(cfg.at(key), key) : global_headways;
    instance.lines.push_back(std::move(line));
  }

  instance.vehicle_types = {{0, c.vehicle_cost, c.vehicle_capacity}};

  derive_line_fields(instance);
  validate_instance(instance);
  return instance;
}

void save_instance(const Instance& instance, const fs::path& dir) {
  fs::create_directories(dir);

  std::ofstream stops(dir / "stops.csv");
  stops << "id;name;x;y\n";
  for (const auto& s : instance.network.stops) {
    stops << s.id << ";" << s.name << ";" << (s.x ? fmt_double(*s.x) : "") << ";"
          << (s.y ? fmt_double(*s.y) : "") << "\n";
  }

  std::ofstream edges(dir / "edges.csv");
  edges << "id;from;to;travel_time_min\n";
  for (const auto& e : instance.network.edges) {
    edges << e.id << ";" << e.from << ";" << e.to << ";" << fmt_double(e.travel_time_min) << "\n";
  }

  std::ofstream od(dir / "od.csv");
  od << "origin;destination;passengers\n";
  for (const auto& d : instance.od) {
    od << d.origin << ";" << d.destination << ";" << fmt_double(d.demand) << "\n";
  }

  std::ofstream pool(dir / "pool.csv");
  pool << "line_id;edge_id;position\n";
  for (const auto& line : instance.lines) {
    for (size_t i = 0; i < line.edge_sequence.size(); ++i) {
      pool << line.id << ";" << line.edge_sequence[i] << ";" << i << "\n";
    }
  }

  const auto& c = instance.costs;
  std::ofstream cfg(dir / "config");
  cfg << "ivt_rate = " << fmt_double(c.ivt_rate) << "\n";
  cfg << "perceived_wait_rate = " << fmt_double(c.perceived_wait_rate) << "\n";
  cfg << "hidden_wait_rate = " << fmt_double(c.hidden_wait_rate) << "\n";
  cfg << "perceived_wait_cap_min = " << fmt_double(c.perceived_wait_cap_min) << "\n";
  cfg << "transfer_wait_rate = " << fmt_double(c.transfer_wait_rate) << "\n";
  cfg << "transfer_penalty = " << fmt_double(c.transfer_penalty) << "\n";
  cfg << "vehicle_cost = " << fmt_double(c.vehicle_cost) << "\n";
  cfg << "line_fixed_cost = " << fmt_double(c.line_fixed_cost) << "\n";
  cfg << "vehicle_capacity = " << fmt_double(c.vehicle_capacity) << "\n";
  cfg << "fare = " << fmt_double(c.fare) << "\n";
  cfg << "lambda = " << fmt_double(c.lambda) << "\n";
  cfg << "rigid_tolerance_min = " << fmt_double(c.rigid_tolerance_min) << "\n";
  cfg << "budget = " << (c.budget == kInfiniteBudget ? "inf" : fmt_double(c.budget)) << "\n";
  if (c.threshold_override) {
    cfg << "threshold_override = " << fmt_double(*c.threshold_override) << "\n";
  }
  cfg << "turnaround_buffer_min = " << fmt_double(instance.turnaround_buffer_min) << "\n";
  for (const auto& line : instance.lines) {
    cfg << "headways_line_" << line.id << " = ";
    for (size_t i = 0; i < line.candidate_headways.size(); ++i) {
      cfg << (i ? "," : "") << fmt_double(line.candidate_headways[i]);
    }
    cfg << "\n";
  }
}

}  // namespace lpp
