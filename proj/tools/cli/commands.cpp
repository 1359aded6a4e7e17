#include "cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "muskit/mus.hpp"
#include "muskit/order.hpp"
#include "muskit/quantum.hpp"
#include "muskit/thermo.hpp"
#include "muskit/uncertainty.hpp"
#include "muskit/version.hpp"

namespace muskit::cli {

namespace {

using entropy::AlphaGrid;
using entropy::ProbDist;
using entropy::RenyiOrder;
using uncertainty::NoiseLevel;

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string join_doubles(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ",";
        out += format_double(v[i]);
    }
    return out;
}

std::string grid_to_string(const AlphaGrid& grid) {
    std::string out;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i > 0) out += ",";
        out += format_double(grid.orders()[i].value());
    }
    return out;
}

std::string relation_name(order::Relation r) {
    switch (r) {
        case order::Relation::StrictlyLessUncertain: return "strictly-less-uncertain";
        case order::Relation::StrictlyMoreUncertain: return "strictly-more-uncertain";
        case order::Relation::EquivalentUpToPermutation: return "equivalent-up-to-permutation";
        case order::Relation::Incomparable: return "incomparable";
    }
    return "unknown";
}

Table base_table(const RunConfig& config, const AlphaGrid* grid) {
    Table t;
    t.add_meta("command", command_name(config.command));
    t.add_meta("version", std::string(muskit::kVersion));
    t.add_meta("seed", static_cast<std::int64_t>(config.seed));
    if (grid != nullptr) t.add_meta("alpha_grid", grid_to_string(*grid));
    return t;
}

// ------------------------------- subcommands --------------------------------

Table cmd_entropy(const RunConfig& config) {
    const AlphaGrid grid = parse_alpha_grid(config.alpha_grid);
    const ProbDist p(config.p);
    Table t = base_table(config, &grid);
    t.add_meta("p", join_doubles(config.p));
    t.columns = {"alpha", "entropy"};
    for (const RenyiOrder& a : grid) {
        t.rows.push_back({Cell{a.value()}, Cell{entropy::renyi_entropy(p, a)}});
    }
    t.rows.push_back({Cell{std::string("support")}, Cell{entropy::support_entropy(p)}});
    return t;
}

Table cmd_order(const RunConfig& config) {
    const AlphaGrid grid = parse_alpha_grid(config.alpha_grid);
    const ProbDist p(config.p);
    const ProbDist q(config.q);
    Table t = base_table(config, &grid);
    t.add_meta("p", join_doubles(config.p));
    t.add_meta("q", join_doubles(config.q));
    t.columns = {"quantity", "value", "witness"};

    auto add = [&](const std::string& k, const Cell& v, const std::string& w = "") {
        t.rows.push_back({Cell{k}, v, Cell{w}});
    };
    add("majorizes_p_q", Cell{order::majorizes(p, q)});
    add("majorizes_q_p", Cell{order::majorizes(q, p)});

    const order::OrderVerdict vs = order::uncertainty_verdict_S(p, q);
    add("verdict_majorization", Cell{relation_name(vs.relation)},
        vs.witness_index ? std::to_string(*vs.witness_index) : "");
    const order::OrderVerdict vt = order::trumping_verdict(p, q, grid);
    add("verdict_trumping", Cell{relation_name(vt.relation)},
        vt.witness_alpha ? format_double(*vt.witness_alpha) : "");

    add("sum_two_smallest_p", Cell{order::sum_two_smallest(p)});
    add("sum_two_smallest_q", Cell{order::sum_two_smallest(q)});
    if (!config.r.empty()) {
        const ProbDist r(config.r);
        t.add_meta("r", join_doubles(config.r));
        add("catalysis_witness", Cell{order::catalysis_witness(p, q, r)});
    }
    return t;
}

Table cmd_flip(const RunConfig& config) {
    const ProbDist p(config.p);
    const ProbDist q(config.q);
    const RenyiOrder alpha(config.alpha);
    Table t = base_table(config, nullptr);
    t.add_meta("p", join_doubles(config.p));
    t.add_meta("q", join_doubles(config.q));
    t.columns = {"alpha", "h2_p", "h2_q", "h_alpha_p", "h_alpha_q", "threshold"};
    const RenyiOrder two = RenyiOrder::finite(2.0);
    const auto threshold = uncertainty::flip_threshold(p, q, alpha);
    t.rows.push_back({Cell{alpha.value()},
                      Cell{entropy::renyi_entropy(p, two)},
                      Cell{entropy::renyi_entropy(q, two)},
                      Cell{entropy::renyi_entropy(p, alpha)},
                      Cell{entropy::renyi_entropy(q, alpha)},
                      threshold ? Cell{*threshold} : Cell{std::string("none")}});
    return t;
}

Table cmd_qubit_sweep(const RunConfig& config) {
    const AlphaGrid grid = parse_alpha_grid(config.alpha_grid);
    if (config.purity_steps < 1) {
        throw std::invalid_argument("qubit-sweep: --purity-steps must be >= 1");
    }
    Table t = base_table(config, &grid);
    t.add_meta("gamma", config.gamma);
    t.add_meta("purity_steps", static_cast<std::int64_t>(config.purity_steps));
    t.columns = {"alpha", "purity", "theta_min", "entropy_value"};
    for (const RenyiOrder& a : grid) {
        for (int k = 1; k <= config.purity_steps; ++k) {
            const double purity = static_cast<double>(k) / config.purity_steps;
            const mus::MusCurvePoint pt =
                mus::qubit_mus_theta(config.gamma, NoiseLevel(1.0 - purity), a);
            t.rows.push_back({Cell{a.value()}, Cell{pt.purity}, Cell{pt.theta_min},
                              Cell{pt.entropy_value}});
        }
    }
    return t;
}

Table cmd_zeta_check(const RunConfig& config) {
    if (!(config.alpha_step > 0.0) || !(config.theta_step > 0.0)) {
        throw std::invalid_argument("zeta-check: step sizes must be positive");
    }
    Table t = base_table(config, nullptr);
    t.add_meta("alpha_min", config.alpha_min);
    t.add_meta("alpha_max", config.alpha_max);
    t.add_meta("alpha_step", config.alpha_step);
    t.add_meta("theta_step", config.theta_step);
    t.columns = {"alpha", "zeta_min", "zeta_max", "interior_sign_changes", "sign_ok"};

    const double theta_end = kPi / 8.0;
    const int n_alpha =
        static_cast<int>(std::floor((config.alpha_max - config.alpha_min) / config.alpha_step)) + 1;
    for (int ia = 0; ia < n_alpha; ++ia) {
        const double a = config.alpha_min + ia * config.alpha_step;
        if (std::abs(a) < config.alpha_step / 2.0 || std::abs(a - 1.0) < config.alpha_step / 2.0) {
            continue;  // the Burg and Shannon orders are handled separately
        }
        double zmin = std::numeric_limits<double>::infinity();
        double zmax = -std::numeric_limits<double>::infinity();
        int sign_changes = 0;
        int prev_sign = 0;
        for (double th = config.theta_step; th <= theta_end + 1e-15; th += config.theta_step) {
            const double z = mus::qubit_zeta(a, std::min(th, theta_end));
            zmin = std::min(zmin, z);
            zmax = std::max(zmax, z);
            const int sign = z > 0.0 ? 1 : (z < 0.0 ? -1 : 0);
            if (prev_sign != 0 && sign != 0 && sign != prev_sign) ++sign_changes;
            if (sign != 0) prev_sign = sign;
        }
        bool ok = false;
        if (a >= 2.0) {
            ok = zmax < 0.0;
        } else if (a <= -3.0) {
            ok = zmin > 0.0;
        } else {
            ok = sign_changes == 0;
        }
        t.rows.push_back({Cell{a}, Cell{zmin}, Cell{zmax},
                          Cell{static_cast<std::int64_t>(sign_changes)}, Cell{ok}});
    }
    return t;
}

Table cmd_ensemble(const RunConfig& config) {
    Table t = base_table(config, nullptr);
    t.add_meta("d", static_cast<std::int64_t>(config.dimension));
    t.add_meta("pairs", static_cast<std::int64_t>(config.n_pairs));
    t.add_meta("restarts", static_cast<std::int64_t>(config.restarts));
    const mus::EnsembleRun run =
        mus::ensemble_overlap_run(config.dimension, config.n_pairs, config.restarts, config.seed);
    if (config.per_pair) {
        t.add_meta("mean_overlap", run.summary.mean_overlap);
        t.add_meta("min_overlap", run.summary.min_overlap);
        t.columns = {"pair_index", "overlap"};
        for (std::size_t k = 0; k < run.overlaps.size(); ++k) {
            t.rows.push_back({Cell{static_cast<std::int64_t>(k)}, Cell{run.overlaps[k]}});
        }
    } else {
        t.columns = {"dimension", "n_pairs", "mean_overlap", "min_overlap", "seed"};
        t.rows.push_back({Cell{static_cast<std::int64_t>(run.summary.dimension)},
                          Cell{static_cast<std::int64_t>(run.summary.n_pairs)},
                          Cell{run.summary.mean_overlap}, Cell{run.summary.min_overlap},
                          Cell{static_cast<std::int64_t>(run.summary.seed)}});
    }
    return t;
}

Table cmd_fig3(const RunConfig& config) {
    const AlphaGrid grid = parse_alpha_grid(config.alpha_grid);
    Table t = base_table(config, &grid);
    t.add_meta("eps", config.eps);
    t.add_meta("restarts", static_cast<std::int64_t>(config.restarts));
    t.columns = {"alpha", "h_candidate", "h_eigen", "h_optimal"};
    const auto rows = mus::fig3_profile(NoiseLevel(config.eps), grid, config.restarts, config.seed);
    for (const mus::Fig3Row& row : rows) {
        t.rows.push_back({Cell{row.alpha.value()}, Cell{row.h_candidate}, Cell{row.h_eigen},
                          Cell{row.h_optimal}});
    }
    return t;
}

Table cmd_nogo(const RunConfig& config) {
    Table t = base_table(config, nullptr);
    t.add_meta("variant", config.variant);
    if (config.variant == "mub") {
        t.add_meta("eps", config.eps);
        const mus::MubWitness w = mus::nogo_witness_mub(NoiseLevel(config.eps));
        t.columns = {"eps", "h1_eigen", "h1_psi_inf", "margin"};
        t.rows.push_back({Cell{config.eps}, Cell{w.h1_eigen}, Cell{w.h1_psi_inf},
                          Cell{w.h1_psi_inf - w.h1_eigen}});
        return t;
    }
    if (config.variant == "highd") {
        t.add_meta("eps", config.eps);
        t.add_meta("qutrit_angle", config.qutrit_angle);
        const auto pair = quantum::rotation_pair_qutrit(config.qutrit_angle);
        const mus::HighdWitness w = mus::nogo_witness_highd(pair, NoiseLevel(config.eps));
        const double closed = 2.0 * std::log(config.eps / 3.0);
        t.columns = {"eps", "hminf_psi_inf", "hminf_xi", "closed_form", "margin"};
        t.rows.push_back({Cell{config.eps}, Cell{w.hminf_psi_inf}, Cell{w.hminf_xi},
                          Cell{closed}, Cell{w.hminf_psi_inf - w.hminf_xi}});
        return t;
    }
    if (config.variant == "support") {
        const AlphaGrid grid = parse_alpha_grid(config.alpha_grid);
        t.add_meta("qutrit_angle", config.qutrit_angle);
        const auto pair = quantum::rotation_pair_qutrit(config.qutrit_angle);
        const bool witness = mus::theorem1_witness(pair, grid);
        const auto psi = mus::psi_infinity(pair);
        const auto joint_psi =
            uncertainty::joint_stat(quantum::pure_to_density(psi), pair).dist;
        const auto joint_eig =
            uncertainty::joint_stat(quantum::pure_to_density(pair.a().eigenstate(0)), pair).dist;
        t.columns = {"support_entropy_psi_inf", "support_entropy_eigen",
                     "maassen_uffink_bound", "witness"};
        t.rows.push_back({Cell{entropy::support_entropy(joint_psi)},
                          Cell{entropy::support_entropy(joint_eig)},
                          Cell{mus::maassen_uffink_bound(pair)}, Cell{witness}});
        return t;
    }
    throw std::invalid_argument("nogo: unknown variant '" + config.variant +
                                "' (expected mub, highd or support)");
}

Table cmd_thermo(const RunConfig& config) {
    const AlphaGrid grid = parse_alpha_grid(config.alpha_grid);
    if (config.energies.empty()) {
        throw std::invalid_argument("thermo: --energies is required");
    }
    const thermo::ThermoContext ctx(config.energies, config.beta);
    const ProbDist p(config.p);
    Table t = base_table(config, &grid);
    t.add_meta("energies", join_doubles(config.energies));
    t.add_meta("beta", config.beta);
    t.add_meta("p", join_doubles(config.p));
    t.columns = {"quantity", "alpha", "value"};

    for (const RenyiOrder& a : grid) {
        t.rows.push_back({Cell{std::string("free_energy_p")}, Cell{a.value()},
                          Cell{thermo::free_energy(p, ctx, a)}});
    }
    if (!config.q.empty()) {
        const ProbDist q(config.q);
        t.add_meta("q", join_doubles(config.q));
        for (const RenyiOrder& a : grid) {
            t.rows.push_back({Cell{std::string("free_energy_q")}, Cell{a.value()},
                              Cell{thermo::free_energy(q, ctx, a)}});
        }
        const auto thr = thermo::f2_ordering_threshold(p, q, ctx, RenyiOrder(config.alpha));
        t.rows.push_back({Cell{std::string("f2_ordering_threshold")}, Cell{config.alpha},
                          thr ? Cell{*thr} : Cell{std::string("none")}});
        t.add_meta("schedule", "1-exp(-t)");
        t.add_meta("schedule_tmax", config.schedule_tmax);
        t.add_meta("schedule_samples", static_cast<std::int64_t>(config.schedule_samples));
        const auto t_r = thermo::f1_reversal_time(
            p, q, ctx, [](double time) { return 1.0 - std::exp(-time); },
            config.schedule_tmax, config.schedule_samples);
        t.rows.push_back({Cell{std::string("f1_reversal_time")}, Cell{1.0},
                          t_r ? Cell{*t_r} : Cell{std::string("none")}});
    }
    return t;
}

}  // namespace

std::string command_name(Command c) {
    switch (c) {
        case Command::Entropy: return "entropy";
        case Command::Order: return "order";
        case Command::Flip: return "flip";
        case Command::QubitSweep: return "qubit-sweep";
        case Command::ZetaCheck: return "zeta-check";
        case Command::Ensemble: return "ensemble";
        case Command::Fig3: return "fig3";
        case Command::Nogo: return "nogo";
        case Command::Thermo: return "thermo";
    }
    return "unknown";
}

AlphaGrid parse_alpha_grid(const std::string& spec) {
    if (spec == "default" || spec.empty()) {
        return AlphaGrid::default_grid();
    }
    std::vector<RenyiOrder> orders;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "inf" || tok == "+inf") {
            orders.push_back(RenyiOrder::plus_infinity());
        } else if (tok == "-inf") {
            orders.push_back(RenyiOrder::minus_infinity());
        } else {
            std::size_t pos = 0;
            const double v = std::stod(tok, &pos);
            if (pos != tok.size()) {
                throw std::invalid_argument("alpha-grid: cannot parse order '" + tok + "'");
            }
            orders.push_back(RenyiOrder::finite(v));
        }
    }
    return AlphaGrid(std::move(orders));
}

Table run_command(const RunConfig& config) {
    switch (config.command) {
        case Command::Entropy: return cmd_entropy(config);
        case Command::Order: return cmd_order(config);
        case Command::Flip: return cmd_flip(config);
        case Command::QubitSweep: return cmd_qubit_sweep(config);
        case Command::ZetaCheck: return cmd_zeta_check(config);
        case Command::Ensemble: return cmd_ensemble(config);
        case Command::Fig3: return cmd_fig3(config);
        case Command::Nogo: return cmd_nogo(config);
        case Command::Thermo: return cmd_thermo(config);
    }
    throw std::invalid_argument("unknown command");
}

std::string run_and_write(const RunConfig& config) {
    const Table table = run_command(config);
    const std::string rendered = render(table, config.format);
    if (config.output_path == "-") {
        std::fputs(rendered.c_str(), stdout);
        return "-";
    }
    std::string path = config.output_path;
    if (path.empty()) {
        path = command_name(config.command) +
               (config.format == OutputFormat::Csv ? ".csv" : ".json");
    }
    const bool is_absolute = !path.empty() && path.front() == '/';
    if (!is_absolute) {
        if (const char* dir = std::getenv("MUSKIT_OUTPUT_DIR"); dir != nullptr && dir[0] != '\0') {
            path = std::string(dir) + "/" + path;
        }
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    out << rendered;
    if (!out) {
        throw std::runtime_error("failed writing output file: " + path);
    }
    return path;
}

}  // namespace muskit::cli
