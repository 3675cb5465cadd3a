#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "netdrift/dynamics.hpp"
#include "netdrift/graph.hpp"
#include "netdrift/simulation.hpp"
#include "netdrift/sweep.hpp"

namespace netdrift {

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double x);
double parse_double(const std::string& text);

/// Edge-list text format: a required "# n=<N>" header line, then one edge
/// per line as two whitespace-separated node ids with u < v. Other lines
/// starting with '#' and blank lines are ignored on input.
void write_edge_list(const Graph& g, const std::filesystem::path& path);
Graph read_edge_list(const std::filesystem::path& path);

/// State CSV: header "node,state", one row per node id in ascending order.
void write_states(const StateVector& s, const std::filesystem::path& path);
StateVector read_states(const std::filesystem::path& path);

/// Trajectory CSV: header
/// "iteration,global_average,global_sum,degree_weighted_sum,predicted_drift_rate,correlation",
/// one row per iteration from 0 to T. Values round-trip exactly.
void write_trajectory(const TrajectoryRecord& record, const std::filesystem::path& path);
std::vector<TrajectoryRow> read_trajectory(const std::filesystem::path& path);

/// Sweep CSV: header "p,alpha,replicate,delta_s" with one row per run, plus
/// a companion summary file (header
/// "p,alpha,mean_delta_s,sd_delta_s,n_replicates") written next to it at
/// default_summary_path(path).
void write_sweep(const SweepResult& result, const std::filesystem::path& path);
SweepResult read_sweep(const std::filesystem::path& cells_path,
                       const std::filesystem::path& summary_path);

/// "dir/out.csv" -> "dir/out_summary.csv"; no extension -> "out_summary".
std::filesystem::path default_summary_path(const std::filesystem::path& path);

/// Drift prediction report: CSV header "node,degree,v", one row per node,
/// then a trailing comment "# drift_rate=<value> corr=<value>".
void write_prediction(std::ostream& out, const Graph& g, const StateVector& s, double c);

}  // namespace netdrift
