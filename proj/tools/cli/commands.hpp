// commands.hpp - the muskit subcommands: reproduction recipes for the
// library's sweeps, thresholds, ensembles and witnesses, with seeded runs
// and machine-readable CSV/JSON output.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cli/table.hpp"
#include "muskit/entropy.hpp"

namespace muskit::cli {

enum class Command {
    Entropy,
    Order,
    Flip,
    QubitSweep,
    ZetaCheck,
    Ensemble,
    Fig3,
    Nogo,
    Thermo,
};

struct RunConfig {
    Command command = Command::Entropy;
    std::uint64_t seed = 0;
    std::string alpha_grid = "default";  // "default" or comma list with inf/-inf
    std::string output_path;             // empty: <command>.<ext>; "-": stdout
    OutputFormat format = OutputFormat::Csv;

    // per-command parameters
    std::vector<double> p;
    std::vector<double> q;
    std::vector<double> r;
    double alpha = 1.0;
    double gamma = 0.7853981633974483;
    double eps = 0.25;
    int purity_steps = 10;
    double alpha_min = -30.0;
    double alpha_max = 30.0;
    double alpha_step = 0.001;
    double theta_step = 0.001;
    int dimension = 3;
    int n_pairs = 100;
    int restarts = 32;
    bool per_pair = false;
    std::string variant = "mub";  // nogo: mub | highd | support
    double qutrit_angle = 0.5235987755982988;
    std::vector<double> energies;
    double beta = 1.0;
    double schedule_tmax = 5.0;
    int schedule_samples = 2000;
};

std::string command_name(Command c);
entropy::AlphaGrid parse_alpha_grid(const std::string& spec);

// Builds the table for the configured command (pure part of the CLI).
Table run_command(const RunConfig& config);

// Runs the command and writes the rendered table to the configured path
// (MUSKIT_OUTPUT_DIR prefixes relative paths). Returns the path written, or
// "-" when printed to stdout.
std::string run_and_write(const RunConfig& config);

}  // namespace muskit::cli
