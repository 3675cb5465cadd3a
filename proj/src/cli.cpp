#include "netdrift/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <system_error>

#include <CLI11.hpp>

#include "netdrift/config.hpp"
#include "netdrift/errors.hpp"
#include "netdrift/graph.hpp"
#include "netdrift/io.hpp"
#include "netdrift/rng.hpp"
#include "netdrift/simulation.hpp"
#include "netdrift/sweep.hpp"

namespace netdrift {

int cli_main(int argc, char** argv) {
    CLI::App app{"social diffusion and global drift on adaptive networks"};
    app.set_version_flag("--version", "netdrift 0.1.0");
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen-graph", "Generate a uniform random graph with exactly m edges");
    std::uint32_t gen_n = 0;
    std::uint64_t gen_m = 0;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--n", gen_n, "node count")->required();
    gen->add_option("--m", gen_m, "edge count")->required();
    gen->add_option("--seed", gen_seed, "rng seed (default 1)");
    gen->add_option("--out", gen_out, "output edge-list path")->required();

    auto* simulate = app.add_subcommand("simulate", "Run one adaptive-network simulation");
    std::string sim_config;
    std::string sim_traj;
    std::string sim_snapshots;
    simulate->add_option("--config", sim_config, "JSON config path")->required();
    simulate->add_option("--out-traj", sim_traj, "output trajectory CSV path")->required();
    simulate->add_option("--out-snapshots", sim_snapshots,
                         "directory for snap_<iteration>.edges/.csv files");

    auto* predict = app.add_subcommand("predict", "Per-node drift coefficients and the drift rate");
    std::string predict_graph;
    std::string predict_states;
    double predict_c = 0.0;
    predict->add_option("--graph", predict_graph, "edge-list path")->required();
    predict->add_option("--states", predict_states, "state CSV path")->required();
    predict->add_option("--c", predict_c, "diffusion constant")->required();

    auto* sweep = app.add_subcommand("sweep", "Run a (p, alpha) grid of simulations");
    std::string sweep_config;
    std::string sweep_out;
    int sweep_threads = 0;
    sweep->add_option("--config", sweep_config, "JSON sweep config path")->required();
    sweep->add_option("--out", sweep_out, "output CSV path (summary written alongside)")->required();
    sweep->add_option("--threads", sweep_threads, "max concurrent runs (0 = hardware default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*gen) {
            Rng rng(gen_seed);
            write_edge_list(gen_random_graph(gen_n, gen_m, rng), gen_out);
        } else if (*simulate) {
            const SimConfig config = load_config(sim_config);
            SnapshotSink sink;
            if (!sim_snapshots.empty()) {
                const std::filesystem::path dir = sim_snapshots;
                std::error_code ec;
                std::filesystem::create_directories(dir, ec);
                if (ec) raise(Errc::io_error, "cannot create directory " + dir.string());
                sink = [dir](std::uint64_t iteration, const Graph& g, const StateVector& s) {
                    const std::string stem = "snap_" + std::to_string(iteration);
                    write_edge_list(g, dir / (stem + ".edges"));
                    write_states(s, dir / (stem + ".csv"));
                };
            }
            write_trajectory(run_simulation(config, sink), sim_traj);
        } else if (*predict) {
            const Graph g = read_edge_list(predict_graph);
            const StateVector s = read_states(predict_states);
            write_prediction(std::cout, g, s, predict_c);
        } else if (*sweep) {
            write_sweep(run_sweep(load_sweep(sweep_config), sweep_threads), sweep_out);
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == Errc::io_error ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace netdrift
