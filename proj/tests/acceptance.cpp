// Release gate for the simulator. Each criterion prints one [PASS]/[FAIL]
// line; the process exits nonzero if any failed. Tolerances are fixed by
// contract and must not be loosened to make a run green.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "netdrift/adaptive.hpp"
#include "netdrift/config.hpp"
#include "netdrift/drift.hpp"
#include "netdrift/dynamics.hpp"
#include "netdrift/graph.hpp"
#include "netdrift/io.hpp"
#include "netdrift/rng.hpp"
#include "netdrift/simulation.hpp"
#include "netdrift/sweep.hpp"

#include "oracles.hpp"

using namespace netdrift;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kMasterSeed = 1;

struct Criterion {
    std::string name;
    std::function<void(std::ostringstream&)> body;  // throws or writes FAIL detail
};

void fail(std::ostringstream& detail, const std::string& message) {
    if (detail.tellp() > 0) detail << "; ";
    detail << message;
}

double plain_sum(const StateVector& s) {
    double total = 0.0;
    for (const double value : s) total += value;
    return total;
}

// ---- 1: the classical averaging rule conserves the plain sum --------------

void conservation_classical(std::ostringstream& detail) {
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        const Graph g = oracle::random_connected_graph(50, 200, kMasterSeed + trial);
        Rng rng(1000 + trial);
        StateVector s = make_initial_state(50, {.low = 0.0, .high = 1.0}, rng);
        StateVector scratch(s.size());
        const double h0 = plain_sum(s);
        const double bound = 1e-9 * std::max(1.0, std::abs(h0));
        for (int t = 0; t < 10000; ++t) {
            step_classical_euler_into(g, s, 0.01, 1.0, scratch);
            s.swap(scratch);
            const double drift = std::abs(plain_sum(s) - h0);
            if (drift > bound) {
                fail(detail, "trial " + std::to_string(trial) + " step " +
                                 std::to_string(t) + " sum moved by " +
                                 format_double(drift));
                return;
            }
        }
    }
}

// ---- 2: one social step changes the sum by exactly the predicted rate -----

void drift_identity(std::ostringstream& detail) {
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        const NodeId n = static_cast<NodeId>(5 + trial % 60);
        const std::uint64_t cap = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        const std::uint64_t m = std::min<std::uint64_t>(cap, n / 2 + trial % (2 * n));
        const Graph g = oracle::random_graph(n, m, kMasterSeed + 7 * trial);
        const StateVector s = oracle::random_states(n, trial + 1, -2.0, 2.0);
        const double c = 0.05 + 0.009 * static_cast<double>(trial % 100);
        const double before = plain_sum(s);
        const double after = plain_sum(step_social_discrete(g, s, c));
        const double predicted = drift_rate(g, s, c);
        const double gap = std::abs((after - before) - predicted);
        if (gap > 1e-10 * std::max(1.0, std::abs(before))) {
            fail(detail, "trial " + std::to_string(trial) + " identity off by " +
                             format_double(gap));
            return;
        }
    }
}

// ---- 3: the drift vector closed form -------------------------------------

void drift_vector_closed_form(std::ostringstream& detail) {
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        const NodeId n = static_cast<NodeId>(4 + trial % 47);
        const std::uint64_t cap = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        const std::uint64_t m = std::min<std::uint64_t>(cap, n + trial % n);
        const Graph g = oracle::random_graph(n, m, kMasterSeed + 13 * trial);
        const DriftVector got = drift_vector(g);
        const DriftVector want = oracle::drift_vector(g);
        for (NodeId i = 0; i < n; ++i) {
            if (std::abs(got[i] - want[i]) > 1e-12) {
                fail(detail, "trial " + std::to_string(trial) + " node " +
                                 std::to_string(i) + " off the dense value");
                return;
            }
        }
        double total = 0.0;
        for (const double value : got) total += value;
        if (std::abs(total) > 1e-10) {
            fail(detail, "trial " + std::to_string(trial) + " entries sum to " +
                             format_double(total));
            return;
        }
    }
    for (const Graph& g : {oracle::cycle(20), oracle::complete(10),
                           oracle::random_regular_graph(30, 4, kMasterSeed)}) {
        for (const double value : drift_vector(g)) {
            if (std::abs(value) > 1e-12) {
                fail(detail, "nonzero drift entry on a regular graph: " +
                                 format_double(value));
                return;
            }
        }
    }
}

// ---- 4: fixed-topology runs land on the degree-weighted consensus ---------

void consensus_oracle(std::ostringstream& detail) {
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        const Graph g = oracle::random_connected_graph(50, 200, kMasterSeed + 31 * trial);
        Rng rng(5000 + trial);
        StateVector s = make_initial_state(50, {.low = 0.0, .high = 1.0}, rng);
        StateVector scratch(s.size());
        const double target =
            oracle::degree_weighted_sum(g, s) / (2.0 * static_cast<double>(g.edge_count()));

        bool converged = false;
        for (int t = 0; t < 200000 && !converged; ++t) {
            step_social_discrete_into(g, s, 0.5, scratch);
            s.swap(scratch);
            const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
            converged = (*hi - *lo) <= 1e-6;
        }
        if (!converged) {
            fail(detail, "trial " + std::to_string(trial) + " never settled");
            return;
        }
        for (const double value : s) {
            if (std::abs(value - target) > 1e-6) {
                fail(detail, "trial " + std::to_string(trial) +
                                 " settled away from the weighted mean by " +
                                 format_double(std::abs(value - target)));
                return;
            }
        }
    }
}

// ---- 5: the rewiring sweep reproduces the drift landscape -----------------

// Jonckheere-style ordered trend statistic over the replicate values of the
// alpha groups, standardized; >= 3 demands a clearly increasing trend.
double ordered_trend_z(const std::vector<std::vector<double>>& groups) {
    double jt = 0.0;
    double n_total = 0.0;
    double sq_sum = 0.0;
    double cube_weight = 0.0;
    for (const auto& g : groups) {
        const double size = static_cast<double>(g.size());
        n_total += size;
        sq_sum += size * size;
        cube_weight += size * size * (2.0 * size + 3.0);
    }
    for (std::size_t i = 0; i < groups.size(); ++i) {
        for (std::size_t j = i + 1; j < groups.size(); ++j) {
            for (const double x : groups[i]) {
                for (const double y : groups[j]) {
                    if (y > x) jt += 1.0;
                    else if (y == x) jt += 0.5;
                }
            }
        }
    }
    const double mean = (n_total * n_total - sq_sum) / 4.0;
    const double var =
        (n_total * n_total * (2.0 * n_total + 3.0) - cube_weight) / 72.0;
    return (jt - mean) / std::sqrt(var);
}

void sweep_landscape(std::ostringstream& detail) {
    SweepSpec spec;
    spec.base.n = 100;
    spec.base.m = 1000;
    spec.base.c = 0.001;
    spec.base.noise.enabled = false;
    spec.base.seed = kMasterSeed;
    spec.p_values = {0.0, 0.05};
    spec.alpha_values = {0.0, 0.5, 1.0, 2.0};
    spec.replicates = 10;
    spec.measure_at = 2000;

    const SweepResult result = run_sweep(spec);

    const auto summary_of = [&](double p, double alpha) -> const SweepCellSummary& {
        for (const SweepCellSummary& s : result.summaries) {
            if (s.p == p && s.alpha == alpha) return s;
        }
        throw std::logic_error("missing sweep cell");
    };

    // (a) state-seeking rewiring produces a clearly positive shift
    const SweepCellSummary& active = summary_of(0.05, 1.0);
    const double active_se =
        active.sd_delta_s / std::sqrt(static_cast<double>(active.n_replicates));
    if (!(active.mean_delta_s > 0.0 && active.mean_delta_s > 3.0 * active_se)) {
        fail(detail, "p=0.05 alpha=1 mean " + format_double(active.mean_delta_s) +
                         " not above 3 SE (" + format_double(active_se) + ")");
    }

    // (b) no rewiring, or rewiring blind to state, gives no systematic shift
    const std::pair<double, double> null_cells[] = {
        {0.0, 0.0}, {0.0, 0.5}, {0.0, 1.0}, {0.0, 2.0}, {0.05, 0.0},
    };
    for (const auto& [p, alpha] : null_cells) {
        const SweepCellSummary& cell = summary_of(p, alpha);
        const double se =
            cell.sd_delta_s / std::sqrt(static_cast<double>(cell.n_replicates));
        if (std::abs(cell.mean_delta_s) > 3.0 * se) {
            fail(detail, "p=" + format_double(p) + " alpha=" + format_double(alpha) +
                             " mean " + format_double(cell.mean_delta_s) +
                             " exceeds 3 SE (" + format_double(se) + ")");
        }
    }

    // (c) at p=0.05 the shift grows with alpha: rank trend over replicates
    std::vector<std::vector<double>> groups(4);
    for (const SweepCell& cell : result.cells) {
        if (cell.p != 0.05) continue;
        const auto it = std::find(spec.alpha_values.begin(), spec.alpha_values.end(),
                                  cell.alpha);
        groups[static_cast<std::size_t>(it - spec.alpha_values.begin())].push_back(
            cell.delta_s);
    }
    const double z = ordered_trend_z(groups);
    if (!(z >= 3.0)) {
        fail(detail, "alpha trend statistic z=" + format_double(z) + " below 3");
    }
}

// ---- 6: long runs plateau without noise and keep climbing with it ---------

void long_run_plateau(std::ostringstream& detail) {
    const std::uint64_t iterations = 50000;
    const int replicates = 5;

    SimConfig cfg;
    cfg.n = 100;
    cfg.m = 1000;
    cfg.c = 0.001;
    cfg.rewire.p = 0.05;
    cfg.rewire.alpha = 1.0;
    cfg.iterations = iterations;

    const auto mean_trajectory = [&](bool with_noise, std::uint64_t tag,
                                     std::vector<double>& out, double& final_sd) {
        out.assign(iterations + 1, 0.0);
        std::vector<double> finals;
        for (int rep = 0; rep < replicates; ++rep) {
            SimConfig run_cfg = cfg;
            run_cfg.noise.enabled = with_noise;
            run_cfg.noise.sigma = 0.01;
            run_cfg.seed = derive_run_seed(kMasterSeed, tag, static_cast<std::uint64_t>(rep));
            const TrajectoryRecord record = run_simulation(run_cfg);
            for (std::size_t t = 0; t < record.rows.size(); ++t) {
                out[t] += record.rows[t].global_average;
            }
            finals.push_back(record.rows.back().global_average);
        }
        for (double& value : out) value /= static_cast<double>(replicates);
        double mean = 0.0;
        for (const double value : finals) mean += value;
        mean /= static_cast<double>(replicates);
        double var = 0.0;
        for (const double value : finals) var += (value - mean) * (value - mean);
        var /= static_cast<double>(replicates - 1);
        final_sd = std::sqrt(var);
    };

    std::vector<double> quiet, noisy;
    double quiet_sd = 0.0;
    double noisy_sd = 0.0;
    mean_trajectory(false, 600, quiet, quiet_sd);
    mean_trajectory(true, 601, noisy, noisy_sd);

    const std::size_t tail_start = (iterations * 9) / 10;
    const double total_rise = quiet.back() - quiet.front();
    const double tail_rise = quiet.back() - quiet[tail_start];
    if (!(total_rise > 0.0)) {
        fail(detail, "no overall rise without noise: " + format_double(total_rise));
    } else if (!(tail_rise < 0.05 * total_rise)) {
        fail(detail, "late rise " + format_double(tail_rise) + " is " +
                         format_double(tail_rise / total_rise) + " of the total");
    }

    const double gap = noisy.back() - quiet.back();
    const double se = std::sqrt((quiet_sd * quiet_sd + noisy_sd * noisy_sd) /
                                static_cast<double>(replicates));
    if (!(gap > 3.0 * se)) {
        fail(detail, "noisy final mean leads by " + format_double(gap) +
                         ", needs more than " + format_double(3.0 * se));
    }
}

// ---- 7: the command line tool is bit-reproducible -------------------------

int run_cli(const std::string& args) {
    const std::string command = std::string(NETDRIFT_CLI_PATH) + " " + args;
    const int status = std::system(command.c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

void cli_determinism(std::ostringstream& detail) {
    const fs::path dir = fs::temp_directory_path() / "netdrift_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);

    const fs::path sim_cfg = dir / "sim.json";
    write_text(sim_cfg, R"({
        "n": 50, "m": 200, "c": 0.005, "iterations": 50, "seed": 12,
        "snapshot_every": 10,
        "rewire": {"p": 0.1, "alpha": 1.0},
        "noise": {"sigma": 0.01, "enabled": true}
    })");

    for (const char* run : {"a", "b"}) {
        const std::string traj = (dir / (std::string("traj_") + run + ".csv")).string();
        const std::string snaps = (dir / (std::string("snaps_") + run)).string();
        if (run_cli("simulate --config " + sim_cfg.string() + " --out-traj " + traj +
                    " --out-snapshots " + snaps) != 0) {
            fail(detail, "simulate invocation failed");
            return;
        }
    }
    if (slurp(dir / "traj_a.csv") != slurp(dir / "traj_b.csv")) {
        fail(detail, "trajectories differ between runs");
        return;
    }
    if (slurp(dir / "traj_a.csv").empty()) {
        fail(detail, "trajectory came out empty");
        return;
    }
    for (const std::uint64_t t : {0, 10, 20, 30, 40, 50}) {
        const std::string stem = "snap_" + std::to_string(t);
        for (const char* ext : {".edges", ".csv"}) {
            const fs::path a = dir / "snaps_a" / (stem + ext);
            const fs::path b = dir / "snaps_b" / (stem + ext);
            if (!fs::exists(a) || slurp(a) != slurp(b)) {
                fail(detail, "snapshot " + stem + ext + " missing or differs");
                return;
            }
        }
    }

    const fs::path sweep_cfg = dir / "sweep.json";
    write_text(sweep_cfg, R"({
        "base": {"n": 30, "m": 90, "c": 0.005, "seed": 21},
        "p_values": [0.0, 0.1],
        "alpha_values": [0.5, 1.5],
        "replicates": 2,
        "measure_at": 25
    })");
    const std::string serial = (dir / "sweep_serial.csv").string();
    const std::string wide = (dir / "sweep_wide.csv").string();
    const std::string wide2 = (dir / "sweep_wide2.csv").string();
    if (run_cli("sweep --config " + sweep_cfg.string() + " --out " + serial +
                " --threads 1") != 0 ||
        run_cli("sweep --config " + sweep_cfg.string() + " --out " + wide +
                " --threads 4") != 0 ||
        run_cli("sweep --config " + sweep_cfg.string() + " --out " + wide2 +
                " --threads 4") != 0) {
        fail(detail, "sweep invocation failed");
        return;
    }
    if (slurp(serial) != slurp(wide) || slurp(wide) != slurp(wide2)) {
        fail(detail, "sweep cell files differ across executions");
        return;
    }
    const auto summary = [](const std::string& path) {
        return default_summary_path(fs::path(path));
    };
    if (slurp(summary(serial)) != slurp(summary(wide)) ||
        slurp(summary(wide)) != slurp(summary(wide2))) {
        fail(detail, "sweep summary files differ across executions");
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1. averaging dynamics conserve the state sum", conservation_classical},
        {"2. per-step sum change equals the predicted drift rate", drift_identity},
        {"3. drift vector matches its closed form", drift_vector_closed_form},
        {"4. fixed topology converges to the degree-weighted mean", consensus_oracle},
        {"5. rewiring sweep reproduces the drift landscape", sweep_landscape},
        {"6. drift plateaus without noise, persists with noise", long_run_plateau},
        {"7. simulate and sweep are bit-reproducible", cli_determinism},
    };

    int failed = 0;
    for (const Criterion& criterion : criteria) {
        std::ostringstream detail;
        try {
            criterion.body(detail);
        } catch (const std::exception& e) {
            fail(detail, std::string("threw: ") + e.what());
        }
        const std::string problems = detail.str();
        if (problems.empty()) {
            std::cout << "[PASS] " << criterion.name << "\n";
        } else {
            std::cout << "[FAIL] " << criterion.name << " (" << problems << ")\n";
            ++failed;
        }
    }
    if (failed > 0) {
        std::cout << failed << " of " << criteria.size() << " criteria failed\n";
        return 1;
    }
    std::cout << "all " << criteria.size() << " criteria passed\n";
    return 0;
}
