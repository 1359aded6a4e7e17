#include <cstdio>
#include <exception>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "muskit/version.hpp"

namespace {

using muskit::cli::Command;
using muskit::cli::OutputFormat;
using muskit::cli::RunConfig;

void add_common_options(CLI::App* sub, RunConfig& config, std::string& format) {
    sub->add_option("--seed", config.seed, "RNG seed, echoed in the output metadata")
        ->capture_default_str();
    sub->add_option("--alpha-grid", config.alpha_grid,
                    "'default' or a comma list of orders (tokens: numbers, inf, -inf); "
                    "must contain -inf, 0, 0.5, 1, 2, inf")
        ->capture_default_str();
    sub->add_option("--output,-o", config.output_path,
                    "output path ('-' for stdout; default <command>.<ext>; relative paths "
                    "land in $MUSKIT_OUTPUT_DIR when set)");
    sub->add_option("--format", format, "csv or json")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"muskit: uncertainty orderings, Renyi entropies and "
                 "minimum-uncertainty states under uniform noise"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(muskit::kVersion));

    RunConfig config;
    std::string format = "csv";

    auto* entropy = app.add_subcommand(
        "entropy", "Renyi entropies of a distribution over the alpha grid "
                   "(columns: alpha,entropy; final row holds the support entropy)");
    entropy->add_option("--p", config.p, "probability vector, comma separated")
        ->required()->delimiter(',');
    add_common_options(entropy, config, format);

    auto* order = app.add_subcommand(
        "order", "majorization/trumping verdicts, sum-of-two-smallest values and the "
                 "catalysis check (columns: quantity,value,witness)");
    order->add_option("--p", config.p, "first distribution")->required()->delimiter(',');
    order->add_option("--q", config.q, "second distribution")->required()->delimiter(',');
    order->add_option("--r", config.r, "optional catalyst distribution")->delimiter(',');
    add_common_options(order, config, format);

    auto* flip = app.add_subcommand(
        "flip", "least noise level from which H_alpha orders p below q "
                "(columns: alpha,h2_p,h2_q,h_alpha_p,h_alpha_q,threshold)");
    flip->add_option("--p", config.p, "distribution dictated less uncertain by H2")
        ->required()->delimiter(',');
    flip->add_option("--q", config.q, "comparison distribution")->required()->delimiter(',');
    flip->add_option("--alpha", config.alpha, "finite Renyi order")->capture_default_str();
    add_common_options(flip, config, format);

    auto* sweep = app.add_subcommand(
        "qubit-sweep", "minimizing angle of the planar qubit family per order and purity "
                       "(columns: alpha,purity,theta_min,entropy_value)");
    sweep->add_option("--gamma", config.gamma, "angle between the observable axes, (0, pi/2)")
        ->capture_default_str();
    sweep->add_option("--purity-steps", config.purity_steps,
                      "Bloch radii sampled at k/steps, k = 1..steps")
        ->capture_default_str();
    add_common_options(sweep, config, format);

    auto* zeta = app.add_subcommand(
        "zeta-check", "sign scan of the bisector-family zeta function "
                      "(columns: alpha,zeta_min,zeta_max,interior_sign_changes,sign_ok)");
    zeta->add_option("--alpha-min", config.alpha_min, "")->capture_default_str();
    zeta->add_option("--alpha-max", config.alpha_max, "")->capture_default_str();
    zeta->add_option("--alpha-step", config.alpha_step, "")->capture_default_str()
        ->default_val(0.05);
    zeta->add_option("--theta-step", config.theta_step, "")->capture_default_str();
    add_common_options(zeta, config, format);

    auto* ensemble = app.add_subcommand(
        "ensemble", "Haar-random pair ensemble: overlap of the h2-optimal state with the "
                    "min-entropy candidate (summary row, or per-pair rows with --per-pair)");
    ensemble->add_option("--d", config.dimension, "dimension, 3..8")->capture_default_str();
    ensemble->add_option("--pairs", config.n_pairs, "number of Haar pairs")
        ->capture_default_str();
    ensemble->add_option("--restarts", config.restarts, "optimizer starts per pair")
        ->capture_default_str();
    ensemble->add_flag("--per-pair", config.per_pair, "emit one row per pair");
    add_common_options(ensemble, config, format);

    auto* fig3 = app.add_subcommand(
        "fig3", "qutrit (pi/6 rotation) entropy profile: candidate vs eigenstate vs "
                "per-order optimized noisy states (columns: alpha,h_candidate,h_eigen,h_optimal)");
    fig3->add_option("--eps", config.eps, "noise level")->capture_default_str();
    fig3->add_option("--restarts", config.restarts, "optimizer starts per order")
        ->capture_default_str();
    add_common_options(fig3, config, format);

    auto* nogo = app.add_subcommand(
        "nogo", "numerical witnesses of the no-go results (variants: mub, highd, support)");
    nogo->add_option("--variant", config.variant, "mub | highd | support")
        ->capture_default_str();
    nogo->add_option("--eps", config.eps, "noise level")->capture_default_str();
    nogo->add_option("--qutrit-angle", config.qutrit_angle,
                     "rotation angle of the qutrit pair (highd, support)")
        ->capture_default_str();
    add_common_options(nogo, config, format);

    auto* thermo = app.add_subcommand(
        "thermo", "alpha-free energies over the grid, plus the F2 ordering threshold and "
                  "the F1 reversal time when --q is given (columns: quantity,alpha,value)");
    thermo->add_option("--energies", config.energies, "energy levels, comma separated")
        ->required()->delimiter(',');
    thermo->add_option("--beta", config.beta, "inverse temperature, > 0")
        ->capture_default_str();
    thermo->add_option("--p", config.p, "population vector")->required()->delimiter(',');
    thermo->add_option("--q", config.q, "optional comparison populations")->delimiter(',');
    thermo->add_option("--alpha", config.alpha, "order for the F2 ordering threshold")
        ->capture_default_str();
    thermo->add_option("--tmax", config.schedule_tmax,
                       "time horizon of the thermalisation schedule 1-exp(-t)")
        ->capture_default_str();
    thermo->add_option("--samples", config.schedule_samples, "schedule sample count")
        ->capture_default_str();
    add_common_options(thermo, config, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (entropy->parsed()) config.command = Command::Entropy;
    if (order->parsed()) config.command = Command::Order;
    if (flip->parsed()) config.command = Command::Flip;
    if (sweep->parsed()) config.command = Command::QubitSweep;
    if (zeta->parsed()) config.command = Command::ZetaCheck;
    if (ensemble->parsed()) config.command = Command::Ensemble;
    if (fig3->parsed()) config.command = Command::Fig3;
    if (nogo->parsed()) config.command = Command::Nogo;
    if (thermo->parsed()) config.command = Command::Thermo;

    if (format == "csv") {
        config.format = OutputFormat::Csv;
    } else if (format == "json") {
        config.format = OutputFormat::Json;
    } else {
        std::fprintf(stderr, "error: unknown format '%s' (expected csv or json)\n",
                     format.c_str());
        return 2;
    }

    try {
        const std::string path = muskit::cli::run_and_write(config);
        if (path != "-") {
            std::fprintf(stderr, "wrote %s\n", path.c_str());
        }
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
