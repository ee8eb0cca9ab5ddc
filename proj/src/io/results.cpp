// Copyright 2026 The qsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsim/io/results.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "qsim/io/scenario.hpp"

namespace qsim::io {

namespace {

constexpr const char* kHeader =
    "qulet_id,status,node_id,t_n,t_c,t_s,t_w,t_q,total,cost";

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) fields.push_back(field);
  return fields;
}

double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw SchemaError(std::string("results: malformed ") + what + " \"" + s +
                      "\"");
  }
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw SchemaError(std::string("results: malformed ") + what + " \"" + s +
                      "\"");
  }
}

}  // namespace

void write_results(const RunResult& result, std::ostream& out) {
  out << kHeader << '\n';
  for (const auto& row : result.rows) {
    out << row.qulet_id << ',' << to_string(row.status) << ',' << row.node_id
        << ',' << fixed4(row.times.network) << ',' << fixed4(row.times.compile)
        << ',' << fixed4(row.times.scheduling) << ','
        << fixed4(row.times.waiting) << ',' << fixed4(row.times.quantum) << ','
        << fixed4(row.times.total()) << ',' << fixed4(row.cost) << '\n';
  }
  out << "# makespan," << fixed4(result.summary.makespan) << '\n';
  out << "# success_count," << result.summary.success_count << '\n';
  out << "# total_cost," << fixed4(result.summary.total_cost) << '\n';
  for (const auto& node : result.summary.nodes) {
    out << "# node," << node.node_id << ',' << fixed4(node.busy) << ','
        << fixed4(node.utilization) << '\n';
  }
}

std::string format_results(const RunResult& result) {
  std::ostringstream out;
  write_results(result, out);
  return out.str();
}

ResultsData read_results(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw SchemaError("results: malformed header");
  }
  ResultsData data;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      const auto fields = split(line.substr(2), ',');
      if (fields.empty()) throw SchemaError("results: malformed summary line");
      if (fields[0] == "makespan" && fields.size() == 2) {
        data.summary.makespan = parse_double(fields[1], "makespan");
      } else if (fields[0] == "success_count" && fields.size() == 2) {
        data.summary.success_count =
            static_cast<std::size_t>(parse_int(fields[1], "success_count"));
      } else if (fields[0] == "total_cost" && fields.size() == 2) {
        data.summary.total_cost = parse_double(fields[1], "total_cost");
      } else if (fields[0] == "node" && fields.size() == 4) {
        NodeUsage usage;
        usage.node_id = parse_int(fields[1], "node id");
        usage.busy = parse_double(fields[2], "node busy time");
        usage.utilization = parse_double(fields[3], "node utilization");
        data.summary.nodes.push_back(usage);
      } else {
        throw SchemaError("results: malformed summary line \"" + line + "\"");
      }
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 10) {
      throw SchemaError("results: malformed row \"" + line + "\"");
    }
    QuletRow row;
    row.qulet_id = parse_int(fields[0], "qulet id");
    const auto status = qulet_status_from_string(fields[1]);
    if (!status) {
      throw SchemaError("results: unknown status \"" + fields[1] + "\"");
    }
    row.status = *status;
    row.node_id = parse_int(fields[2], "node id");
    row.times.network = parse_double(fields[3], "t_n");
    row.times.compile = parse_double(fields[4], "t_c");
    row.times.scheduling = parse_double(fields[5], "t_s");
    row.times.waiting = parse_double(fields[6], "t_w");
    row.times.quantum = parse_double(fields[7], "t_q");
    parse_double(fields[8], "total");
    row.cost = parse_double(fields[9], "cost");
    data.rows.push_back(row);
  }
  return data;
}

}  // namespace qsim::io
