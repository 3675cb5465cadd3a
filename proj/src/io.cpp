#include "netdrift/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <ostream>
#include <string>
#include <system_error>
#include <vector>

#include "netdrift/drift.hpp"
#include "netdrift/errors.hpp"

namespace netdrift {
namespace {

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::io_error, "cannot open " + path.string() + " for reading");
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) raise(Errc::io_error, "cannot open " + path.string() + " for writing");
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) raise(Errc::io_error, "failed writing " + path.string());
}

[[noreturn]] void fail_at(const std::filesystem::path& path, std::size_t line_no,
                          const std::string& message) {
    raise(Errc::parse_error,
          path.string() + " line " + std::to_string(line_no) + ": " + message);
}

/// getline with CRLF tolerance.
bool next_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

std::uint64_t parse_uint(const std::string& text) {
    std::uint64_t value = 0;
    const char* last = text.data() + text.size();
    const auto result = std::from_chars(text.data(), last, value);
    if (result.ec != std::errc{} || result.ptr != last || text.empty()) {
        raise(Errc::parse_error, "invalid integer \"" + text + "\"");
    }
    return value;
}

void expect_header(std::istream& in, const char* header, const std::filesystem::path& path) {
    std::string line;
    if (!next_line(in, line) || line != header) {
        raise(Errc::parse_error, path.string() + ": expected header \"" + std::string(header) + "\"");
    }
}

}  // namespace

std::string format_double(double x) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, x);
    return std::string(buffer, result.ptr);
}

double parse_double(const std::string& text) {
    double value = 0.0;
    const char* last = text.data() + text.size();
    const auto result = std::from_chars(text.data(), last, value);
    if (result.ec != std::errc{} || result.ptr != last || text.empty()) {
        raise(Errc::parse_error, "invalid number \"" + text + "\"");
    }
    return value;
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "# n=" << g.node_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
    finish(out, path);
}

Graph read_edge_list(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    std::string line;
    std::size_t line_no = 0;
    bool have_n = false;
    std::uint64_t n = 0;
    std::vector<NodePair> pairs;
    while (next_line(in, line)) {
        ++line_no;
        const std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            std::string body = line.substr(first + 1);
            const std::size_t start = body.find_first_not_of(" \t");
            if (start == std::string::npos || body.compare(start, 2, "n=") != 0) {
                continue;  // ordinary comment
            }
            if (have_n) fail_at(path, line_no, "duplicate \"# n=<N>\" header");
            const std::size_t end = body.find_last_not_of(" \t");
            n = parse_uint(body.substr(start + 2, end - (start + 2) + 1));
            if (n > std::numeric_limits<NodeId>::max()) {
                fail_at(path, line_no, "node count out of range");
            }
            have_n = true;
            continue;
        }
        if (!have_n) fail_at(path, line_no, "edge listed before the \"# n=<N>\" header");
        std::uint64_t u = 0;
        std::uint64_t v = 0;
        const char* cursor = line.data() + first;
        const char* last = line.data() + line.size();
        auto result = std::from_chars(cursor, last, u);
        if (result.ec != std::errc{}) fail_at(path, line_no, "expected two node ids");
        cursor = result.ptr;
        while (cursor != last && (*cursor == ' ' || *cursor == '\t')) ++cursor;
        result = std::from_chars(cursor, last, v);
        if (result.ec != std::errc{}) fail_at(path, line_no, "expected two node ids");
        cursor = result.ptr;
        while (cursor != last && (*cursor == ' ' || *cursor == '\t')) ++cursor;
        if (cursor != last) fail_at(path, line_no, "trailing characters after the node ids");
        if (u >= v) fail_at(path, line_no, "edges must be written with u < v");
        if (v >= n) {
            fail_at(path, line_no, "node id " + std::to_string(v) + " out of range for n=" +
                                       std::to_string(n));
        }
        pairs.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
    if (in.bad()) raise(Errc::io_error, "failed reading " + path.string());
    if (!have_n) {
        raise(Errc::parse_error, path.string() + ": missing \"# n=<N>\" header");
    }
    return build_graph(static_cast<NodeId>(n), pairs);
}

void write_states(const StateVector& s, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "node,state\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out << i << ',' << format_double(s[i]) << '\n';
    }
    finish(out, path);
}

StateVector read_states(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    expect_header(in, "node,state", path);
    StateVector s;
    std::string line;
    std::size_t line_no = 1;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_csv(line);
        if (fields.size() != 2) fail_at(path, line_no, "expected \"node,state\"");
        if (parse_uint(fields[0]) != s.size()) {
            fail_at(path, line_no, "expected node " + std::to_string(s.size()) +
                                       " (rows must cover ids 0..n-1 in order)");
        }
        s.push_back(parse_double(fields[1]));
    }
    if (in.bad()) raise(Errc::io_error, "failed reading " + path.string());
    return s;
}

void write_trajectory(const TrajectoryRecord& record, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "iteration,global_average,global_sum,degree_weighted_sum,predicted_drift_rate,"
           "correlation\n";
    for (const TrajectoryRow& row : record.rows) {
        out << row.iteration << ',' << format_double(row.global_average) << ','
            << format_double(row.global_sum) << ',' << format_double(row.degree_weighted_sum)
            << ',' << format_double(row.predicted_drift_rate) << ','
            << format_double(row.correlation) << '\n';
    }
    finish(out, path);
}

std::vector<TrajectoryRow> read_trajectory(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    expect_header(
        in, "iteration,global_average,global_sum,degree_weighted_sum,predicted_drift_rate,correlation",
        path);
    std::vector<TrajectoryRow> rows;
    std::string line;
    std::size_t line_no = 1;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_csv(line);
        if (fields.size() != 6) fail_at(path, line_no, "expected 6 fields");
        TrajectoryRow row;
        row.iteration = parse_uint(fields[0]);
        row.global_average = parse_double(fields[1]);
        row.global_sum = parse_double(fields[2]);
        row.degree_weighted_sum = parse_double(fields[3]);
        row.predicted_drift_rate = parse_double(fields[4]);
        row.correlation = parse_double(fields[5]);
        rows.push_back(row);
    }
    if (in.bad()) raise(Errc::io_error, "failed reading " + path.string());
    return rows;
}

void write_sweep(const SweepResult& result, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "p,alpha,replicate,delta_s\n";
    for (const SweepCell& cell : result.cells) {
        out << format_double(cell.p) << ',' << format_double(cell.alpha) << ',' << cell.replicate
            << ',' << format_double(cell.delta_s) << '\n';
    }
    finish(out, path);

    const std::filesystem::path summary_path = default_summary_path(path);
    std::ofstream summary = open_out(summary_path);
    summary << "p,alpha,mean_delta_s,sd_delta_s,n_replicates\n";
    for (const SweepCellSummary& cell : result.summaries) {
        summary << format_double(cell.p) << ',' << format_double(cell.alpha) << ','
                << format_double(cell.mean_delta_s) << ',' << format_double(cell.sd_delta_s)
                << ',' << cell.n_replicates << '\n';
    }
    finish(summary, summary_path);
}

SweepResult read_sweep(const std::filesystem::path& cells_path,
                       const std::filesystem::path& summary_path) {
    SweepResult result;
    {
        std::ifstream in = open_in(cells_path);
        expect_header(in, "p,alpha,replicate,delta_s", cells_path);
        std::string line;
        std::size_t line_no = 1;
        while (next_line(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            const std::vector<std::string> fields = split_csv(line);
            if (fields.size() != 4) fail_at(cells_path, line_no, "expected 4 fields");
            SweepCell cell;
            cell.p = parse_double(fields[0]);
            cell.alpha = parse_double(fields[1]);
            cell.replicate = static_cast<std::uint32_t>(parse_uint(fields[2]));
            cell.delta_s = parse_double(fields[3]);
            result.cells.push_back(cell);
        }
        if (in.bad()) raise(Errc::io_error, "failed reading " + cells_path.string());
    }
    {
        std::ifstream in = open_in(summary_path);
        expect_header(in, "p,alpha,mean_delta_s,sd_delta_s,n_replicates", summary_path);
        std::string line;
        std::size_t line_no = 1;
        while (next_line(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            const std::vector<std::string> fields = split_csv(line);
            if (fields.size() != 5) fail_at(summary_path, line_no, "expected 5 fields");
            SweepCellSummary summary;
            summary.p = parse_double(fields[0]);
            summary.alpha = parse_double(fields[1]);
            summary.mean_delta_s = parse_double(fields[2]);
            summary.sd_delta_s = parse_double(fields[3]);
            summary.n_replicates = static_cast<std::uint32_t>(parse_uint(fields[4]));
            result.summaries.push_back(summary);
        }
        if (in.bad()) raise(Errc::io_error, "failed reading " + summary_path.string());
    }
    return result;
}

std::filesystem::path default_summary_path(const std::filesystem::path& path) {
    std::filesystem::path out = path;
    out.replace_filename(out.stem().string() + "_summary" + out.extension().string());
    return out;
}

void write_prediction(std::ostream& out, const Graph& g, const StateVector& s, double c) {
    const DriftVector v = drift_vector(g);
    const double rate = drift_rate(g, s, c);
    const double correlation = state_degree_correlation(g, s);
    out << "node,degree,v\n";
    for (NodeId i = 0; i < g.node_count(); ++i) {
        out << i << ',' << g.degree(i) << ',' << format_double(v[i]) << '\n';
    }
    out << "# drift_rate=" << format_double(rate) << " corr=" << format_double(correlation)
        << '\n';
}

}  // namespace netdrift
