#include "muskit/mus.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>

#include "muskit/rng.hpp"

namespace muskit::mus {

namespace {

using quantum::Complex;
using quantum::ComplexMatrix;
using quantum::ComplexVector;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSharedEigenstateTol = 1e-10;
constexpr double kTieTol = 1e-12;
constexpr double kPi = 3.141592653589793238462643383279502884;

// ---------------------------- Nelder-Mead ----------------------------------

struct NmResult {
    std::vector<double> x;
    double value = kInf;
};

// Minimization with the standard reflection/expansion/contraction/shrink
// coefficients. Stops when the value spread across the simplex falls below
// ftol or the evaluation budget runs out.
NmResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                     const std::vector<double>& x0, double step, double ftol,
                     int max_evals) {
    const std::size_t n = x0.size();
    struct Vertex {
        std::vector<double> x;
        double fx;
    };
    std::vector<Vertex> simplex;
    simplex.reserve(n + 1);
    int evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return f(x);
    };
    simplex.push_back({x0, eval(x0)});
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> x = x0;
        x[i] += step;
        simplex.push_back({std::move(x), 0.0});
        simplex.back().fx = eval(simplex.back().x);
    }
    auto by_value = [](const Vertex& a, const Vertex& b) { return a.fx < b.fx; };

    while (evals < max_evals) {
        std::sort(simplex.begin(), simplex.end(), by_value);
        const double spread = simplex.back().fx - simplex.front().fx;
        if (spread <= ftol || (std::isinf(simplex.front().fx) && simplex.front().fx < 0)) {
            break;
        }
        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t v = 0; v < n; ++v) centroid[i] += simplex[v].x[i];
            centroid[i] /= static_cast<double>(n);
        }
        const Vertex& worst = simplex.back();
        auto affine = [&](double t) {
            std::vector<double> x(n);
            for (std::size_t i = 0; i < n; ++i) x[i] = centroid[i] + t * (centroid[i] - worst.x[i]);
            return x;
        };

        std::vector<double> xr = affine(1.0);
        const double fr = eval(xr);
        if (fr < simplex.front().fx) {
            std::vector<double> xe = affine(2.0);
            const double fe = eval(xe);
            if (fe < fr) {
                simplex.back() = {std::move(xe), fe};
            } else {
                simplex.back() = {std::move(xr), fr};
            }
        } else if (fr < simplex[n - 1].fx) {
            simplex.back() = {std::move(xr), fr};
        } else {
            const bool outside = fr < worst.fx;
            std::vector<double> xc = affine(outside ? 0.5 : -0.5);
            const double fc = eval(xc);
            if (fc < (outside ? fr : worst.fx)) {
                simplex.back() = {std::move(xc), fc};
            } else {
                // shrink toward the best vertex
                for (std::size_t v = 1; v <= n; ++v) {
                    for (std::size_t i = 0; i < n; ++i) {
                        simplex[v].x[i] =
                            simplex[0].x[i] + 0.5 * (simplex[v].x[i] - simplex[0].x[i]);
                    }
                    simplex[v].fx = eval(simplex[v].x);
                }
            }
        }
    }
    std::sort(simplex.begin(), simplex.end(), by_value);
    return {simplex.front().x, simplex.front().fx};
}

// ------------------------ pure-state parametrization ------------------------

// 2d-2 real parameters: d-1 hyperspherical magnitude angles followed by d-1
// relative phases; the first amplitude is real with the global phase fixed.
ComplexVector state_from_params(const std::vector<double>& x, int d) {
    ComplexVector amps(d);
    double chain = 1.0;
    for (int k = 0; k < d - 1; ++k) {
        const double mag = chain * std::cos(x[static_cast<std::size_t>(k)]);
        if (k == 0) {
            amps[k] = Complex(mag, 0.0);
        } else {
            const double ph = x[static_cast<std::size_t>(d - 2 + k)];
            amps[k] = mag * Complex(std::cos(ph), std::sin(ph));
        }
        chain *= std::sin(x[static_cast<std::size_t>(k)]);
    }
    const double ph = x[static_cast<std::size_t>(2 * d - 3)];
    amps[d - 1] = chain * Complex(std::cos(ph), std::sin(ph));
    return amps;
}

std::vector<double> params_from_state(const ComplexVector& psi) {
    const int d = static_cast<int>(psi.size());
    ComplexVector v = psi;
    const double ph0 = std::arg(v[0]);
    v *= Complex(std::cos(-ph0), std::sin(-ph0));
    std::vector<double> x(static_cast<std::size_t>(2 * d - 2), 0.0);
    double chain = 1.0;
    for (int k = 0; k < d - 1; ++k) {
        double ratio = chain > 1e-300 ? std::abs(v[k]) / chain : 0.0;
        ratio = std::clamp(ratio, 0.0, 1.0);
        const double th = std::acos(ratio);
        x[static_cast<std::size_t>(k)] = th;
        chain *= std::sin(th);
    }
    for (int k = 1; k < d; ++k) {
        x[static_cast<std::size_t>(d - 2 + k)] = std::arg(v[k]);
    }
    return x;
}

// ------------------------------ objectives ----------------------------------

struct PairContext {
    ComplexMatrix a_dag;
    ComplexMatrix b_dag;
    int d;

    explicit PairContext(const ObservablePair& pair)
        : a_dag(pair.a().eigenvectors().adjoint()),
          b_dag(pair.b().eigenvectors().adjoint()),
          d(pair.dim()) {}

    void outcome_probs(const ComplexVector& psi, std::vector<double>& pa,
                       std::vector<double>& pb) const {
        const ComplexVector va = a_dag * psi;
        const ComplexVector vb = b_dag * psi;
        pa.resize(static_cast<std::size_t>(d));
        pb.resize(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            pa[static_cast<std::size_t>(i)] = std::norm(va[i]);
            pb[static_cast<std::size_t>(i)] = std::norm(vb[i]);
        }
    }
};

double h2_value(const PairContext& ctx, const ComplexVector& psi) {
    std::vector<double> pa, pb;
    ctx.outcome_probs(psi, pa, pb);
    double s = 0.0;
    for (double x : pa) s += x * x;
    for (double x : pb) s += x * x;
    return s;
}

// H_alpha of the joint distribution of the eps-pseudo-pure state with pure
// component psi; uses additivity over the two factors.
double joint_entropy_value(const PairContext& ctx, const ComplexVector& psi,
                           const NoiseLevel& eps, const RenyiOrder& alpha) {
    std::vector<double> pa, pb;
    ctx.outcome_probs(psi, pa, pb);
    const double u = eps.epsilon() / ctx.d;
    const double r = eps.r();
    for (double& x : pa) x = u + r * x;
    for (double& x : pb) x = u + r * x;
    const double ha = entropy::detail::renyi_unchecked(pa.data(), pa.size(), alpha);
    const double hb = entropy::detail::renyi_unchecked(pb.data(), pb.size(), alpha);
    if (std::isinf(ha) || std::isinf(hb)) {
        return (ha < 0 || hb < 0) ? -kInf : kInf;
    }
    return ha + hb;
}

// ----------------------------- multi-start ----------------------------------

std::vector<std::vector<double>> member_seeds(const ObservablePair& pair) {
    const int d = pair.dim();
    std::vector<std::pair<double, std::vector<double>>> ranked;
    ranked.reserve(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            ranked.emplace_back(std::abs(pair.overlap()(i, j)),
                                params_from_state(member_state(pair, i, j).amplitudes()));
        }
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<std::vector<double>> seeds;
    seeds.reserve(ranked.size());
    for (auto& r : ranked) seeds.push_back(std::move(r.second));
    return seeds;
}

std::vector<double> random_seed_point(int d, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> mag(0.0, kPi);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    std::vector<double> x(static_cast<std::size_t>(2 * d - 2));
    for (int k = 0; k < d - 1; ++k) x[static_cast<std::size_t>(k)] = mag(gen);
    for (int k = d - 1; k < 2 * d - 2; ++k) x[static_cast<std::size_t>(k)] = phase(gen);
    return x;
}

OptResult multistart_minimize(const ObservablePair& pair,
                              const std::function<double(const ComplexVector&)>& objective,
                              std::vector<std::vector<double>> extra_seeds, int restarts,
                              std::uint64_t seed) {
    if (restarts < 1) {
        throw std::invalid_argument("multistart optimizer: restarts must be >= 1");
    }
    const int d = pair.dim();
    auto f = [&](const std::vector<double>& x) { return objective(state_from_params(x, d)); };

    std::vector<std::vector<double>> seeds = member_seeds(pair);
    seeds.insert(seeds.begin(), extra_seeds.begin(), extra_seeds.end());
    if (static_cast<int>(seeds.size()) > restarts) {
        seeds.resize(static_cast<std::size_t>(restarts));
    }
    auto gen = rng::engine(seed);
    while (static_cast<int>(seeds.size()) < restarts) {
        seeds.push_back(random_seed_point(d, gen));
    }

    const int budget = 4000 * (2 * d - 2);
    NmResult best;
    for (const auto& s : seeds) {
        NmResult r = nelder_mead(f, s, 0.2, 1e-12, budget);
        NmResult polished = nelder_mead(f, r.x, 0.01, 1e-13, budget);
        if (polished.value < best.value) best = polished;
    }
    NmResult final_pass = nelder_mead(f, best.x, 1e-3, 1e-14, budget);
    if (final_pass.value < best.value) best = final_pass;

    ComplexVector psi = state_from_params(best.x, d);
    psi.normalize();
    return OptResult{PureState(psi), best.value};
}

// ------------------------------- threading ----------------------------------

void parallel_for(int n, const std::function<void(int)>& body) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const int workers = static_cast<int>(std::min<unsigned>(hw, static_cast<unsigned>(n)));
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

// ------------------------------ overlap, psi_inf -----------------------------

MaxOverlap max_overlap(const ObservablePair& pair) {
    const ComplexMatrix& v = pair.overlap();
    MaxOverlap best;
    best.c = -1.0;
    for (int i = 0; i < v.rows(); ++i) {
        for (int j = 0; j < v.cols(); ++j) {
            const double m = std::abs(v(i, j));
            if (m > best.c + kTieTol) {
                best = MaxOverlap{m, i, j, std::arg(v(i, j))};
            }
        }
    }
    if (best.c >= 1.0 - kSharedEigenstateTol) {
        throw std::domain_error(
            "max_overlap: observables share an eigenstate (max |V_ij| = 1)");
    }
    return best;
}

std::vector<MaxOverlap> max_overlap_all(const ObservablePair& pair) {
    const MaxOverlap top = max_overlap(pair);
    const ComplexMatrix& v = pair.overlap();
    std::vector<MaxOverlap> out;
    for (int i = 0; i < v.rows(); ++i) {
        for (int j = 0; j < v.cols(); ++j) {
            const double m = std::abs(v(i, j));
            if (m >= top.c - kTieTol) {
                out.push_back(MaxOverlap{m, i, j, std::arg(v(i, j))});
            }
        }
    }
    return out;
}

PureState member_state(const ObservablePair& pair, int i, int j) {
    const int d = pair.dim();
    if (i < 0 || i >= d || j < 0 || j >= d) {
        throw std::invalid_argument("member_state: index out of range");
    }
    const double phi = std::arg(pair.overlap()(i, j));
    ComplexVector psi = pair.a().eigenvectors().col(i) +
                        Complex(std::cos(-phi), std::sin(-phi)) * pair.b().eigenvectors().col(j);
    psi.normalize();
    return PureState(psi);
}

PureState psi_infinity(const ObservablePair& pair) {
    const MaxOverlap m = max_overlap(pair);
    return member_state(pair, m.i_max, m.j_max);
}

PmaxSmax pmax_smax(const PureState& psi, const ObservablePair& pair) {
    const PairContext ctx(pair);
    std::vector<double> pa, pb;
    ctx.outcome_probs(psi.amplitudes(), pa, pb);
    const double ma = *std::max_element(pa.begin(), pa.end());
    const double mb = *std::max_element(pb.begin(), pb.end());
    return PmaxSmax{ma * mb, ma + mb};
}

double maassen_uffink_bound(const ObservablePair& pair) {
    return -2.0 * std::log(max_overlap(pair).c);
}

// ------------------------------ qubit sweeps --------------------------------

ProbDist qubit_planar_joint(double gamma, const NoiseLevel& eps, double theta) {
    const double r = eps.r();
    const double pa = (1.0 + r * std::cos(theta)) / 2.0;
    const double pb = (1.0 + r * std::cos(gamma - theta)) / 2.0;
    return ProbDist({pa * pb, pa * (1.0 - pb), (1.0 - pa) * pb, (1.0 - pa) * (1.0 - pb)});
}

MusCurvePoint qubit_mus_theta(double gamma, const NoiseLevel& eps, const RenyiOrder& alpha) {
    constexpr double half_pi = 1.5707963267948966;
    if (!(gamma > 0.0 && gamma < half_pi)) {
        throw std::invalid_argument("qubit_mus_theta: gamma must lie in (0, pi/2)");
    }
    if (eps.epsilon() >= 1.0) {
        throw std::invalid_argument("qubit_mus_theta: eps must be < 1");
    }
    const double r = eps.r();
    auto objective = [&](double theta) {
        double p[2] = {(1.0 + r * std::cos(theta)) / 2.0, 0.0};
        p[1] = 1.0 - p[0];
        double q[2] = {(1.0 + r * std::cos(gamma - theta)) / 2.0, 0.0};
        q[1] = 1.0 - q[0];
        const double ha = entropy::detail::renyi_unchecked(p, 2, alpha);
        const double hb = entropy::detail::renyi_unchecked(q, 2, alpha);
        if (std::isinf(ha) || std::isinf(hb)) {
            return (ha < 0 || hb < 0) ? -kInf : kInf;
        }
        return ha + hb;
    };

    constexpr int kGridPoints = 10000;
    int best_i = 0;
    double best_v = kInf;
    for (int i = 0; i <= kGridPoints; ++i) {
        const double th = gamma * i / kGridPoints;
        const double v = objective(th);
        if (v < best_v) {
            best_v = v;
            best_i = i;
        }
    }
    double lo = gamma * std::max(0, best_i - 1) / kGridPoints;
    double hi = gamma * std::min(kGridPoints, best_i + 1) / kGridPoints;

    // golden-section refinement
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = objective(x1);
    double f2 = objective(x2);
    while (hi - lo > 1e-10) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = objective(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = objective(x2);
        }
    }
    const double theta_min = 0.5 * (lo + hi);
    return MusCurvePoint{alpha, r, theta_min, objective(theta_min)};
}

double qubit_zeta(double alpha, double theta) {
    if (theta < -1e-15 || theta > kPi / 8.0 + 1e-15) {
        throw std::invalid_argument("qubit_zeta: theta must lie in [0, pi/8]");
    }
    if (!std::isfinite(alpha) || alpha == 0.0 || alpha == 1.0) {
        throw std::domain_error("qubit_zeta: alpha must be finite and outside {0, 1}");
    }
    const double c8 = std::cos(kPi / 8.0);
    const double s8 = std::sin(kPi / 8.0);
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    // t^{sign_outer}_{sign_inner} = [2 +- cos(pi/8 +- theta)]^(alpha-1)
    const double tpp = std::pow(2.0 + std::cos(kPi / 8.0 + theta), alpha - 1.0);
    const double tpm = std::pow(2.0 + std::cos(kPi / 8.0 - theta), alpha - 1.0);
    const double tmp = std::pow(2.0 - std::cos(kPi / 8.0 + theta), alpha - 1.0);
    const double tmm = std::pow(2.0 - std::cos(kPi / 8.0 - theta), alpha - 1.0);
    const double big_a = (2.0 * c8 - ct) * tmm * tmp - (2.0 * c8 + ct) * tpm * tpp;
    const double big_b = (2.0 * s8 + st) * tpm * tmp - (2.0 * s8 - st) * tmm * tpp;
    return big_a * st + big_b * ct;
}

// ----------------------------- optimization ---------------------------------

OptResult optimize_h2_pure(const ObservablePair& pair, int restarts, std::uint64_t seed) {
    const PairContext ctx(pair);
    auto objective = [&ctx](const ComplexVector& psi) { return -h2_value(ctx, psi); };
    OptResult r = multistart_minimize(pair, objective, {}, restarts, seed);
    r.value = -r.value;
    return r;
}

OptResult minimize_joint_entropy_pure(const ObservablePair& pair, const NoiseLevel& eps,
                                      const RenyiOrder& alpha, int restarts,
                                      std::uint64_t seed) {
    const PairContext ctx(pair);
    auto objective = [&](const ComplexVector& psi) {
        return joint_entropy_value(ctx, psi, eps, alpha);
    };
    // Eigenstates of both observables seed the search alongside the member
    // states; for small positive orders the optimum sits near an eigenstate.
    std::vector<std::vector<double>> seeds;
    for (int i = 0; i < pair.dim(); ++i) {
        seeds.push_back(params_from_state(pair.a().eigenvectors().col(i)));
        seeds.push_back(params_from_state(pair.b().eigenvectors().col(i)));
    }
    return multistart_minimize(pair, objective, std::move(seeds), restarts, seed);
}

// -------------------------------- ensembles ---------------------------------

EnsembleRun ensemble_overlap_run(int d, int n_pairs, int restarts, std::uint64_t seed) {
    if (d < 3 || d > 8) {
        throw std::invalid_argument("ensemble_overlap: dimension must lie in {3,...,8}");
    }
    if (n_pairs < 1) {
        throw std::invalid_argument("ensemble_overlap: n_pairs must be >= 1");
    }
    std::vector<double> overlaps(static_cast<std::size_t>(n_pairs), 0.0);
    parallel_for(n_pairs, [&](int k) {
        const auto uk = static_cast<std::uint64_t>(k);
        const ObservablePair pair =
            quantum::pair_from_unitary(quantum::haar_unitary(d, rng::derive(seed, 2 * uk)));
        const PureState target = psi_infinity(pair);
        const OptResult opt = optimize_h2_pure(pair, restarts, rng::derive(seed, 2 * uk + 1));
        const Complex ip = (target.amplitudes().adjoint() * opt.psi_opt.amplitudes())(0, 0);
        overlaps[static_cast<std::size_t>(k)] = std::abs(ip);
    });
    double sum = 0.0;
    double mn = kInf;
    for (double o : overlaps) {
        sum += o;
        mn = std::min(mn, o);
    }
    EnsembleSummary s{d, n_pairs, sum / n_pairs, mn, seed};
    return EnsembleRun{s, std::move(overlaps)};
}

EnsembleSummary ensemble_overlap(int d, int n_pairs, int restarts, std::uint64_t seed) {
    return ensemble_overlap_run(d, n_pairs, restarts, seed).summary;
}

// -------------------------------- witnesses ---------------------------------

MubWitness nogo_witness_mub(const NoiseLevel& eps) {
    if (eps.epsilon() >= 1.0) {
        throw std::invalid_argument("nogo_witness_mub: eps must be < 1");
    }
    const ObservablePair pair = quantum::qubit_mub_pair();
    const quantum::DensityMatrix rho_eigen =
        uncertainty::pseudo_pure(pair.a().eigenstate(0), eps);
    const quantum::DensityMatrix rho_psi = uncertainty::pseudo_pure(psi_infinity(pair), eps);
    MubWitness w;
    w.h1_eigen = entropy::shannon(uncertainty::joint_stat(rho_eigen, pair).dist);
    w.h1_psi_inf = entropy::shannon(uncertainty::joint_stat(rho_psi, pair).dist);
    return w;
}

HighdWitness nogo_witness_highd(const ObservablePair& pair, const NoiseLevel& eps) {
    const int d = pair.dim();
    if (d < 3) {
        throw std::invalid_argument("nogo_witness_highd: dimension must be >= 3");
    }
    if (!(eps.epsilon() > 0.0 && eps.epsilon() < 1.0)) {
        throw std::invalid_argument("nogo_witness_highd: eps must lie in (0,1)");
    }
    const ComplexMatrix& v = pair.overlap();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (std::abs(v(i, j)) <= kSharedEigenstateTol) {
                throw std::domain_error("nogo_witness_highd: requires all V_ij nonzero");
            }
        }
    }
    // xi in span{a_1, a_2} orthogonal to b_1
    ComplexVector xi = std::conj(v(1, 0)) * pair.a().eigenvectors().col(0) -
                       std::conj(v(0, 0)) * pair.a().eigenvectors().col(1);
    xi.normalize();

    const RenyiOrder minus_inf = RenyiOrder::minus_infinity();
    HighdWitness w;
    w.hminf_psi_inf = entropy::renyi_entropy(
        uncertainty::joint_stat(uncertainty::pseudo_pure(psi_infinity(pair), eps), pair).dist,
        minus_inf);
    w.hminf_xi = entropy::renyi_entropy(
        uncertainty::joint_stat(uncertainty::pseudo_pure(PureState(xi), eps), pair).dist,
        minus_inf);
    return w;
}

bool theorem1_witness(const ObservablePair& pair, const AlphaGrid& grid) {
    const int d = pair.dim();
    const ComplexMatrix& v = pair.overlap();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (std::abs(v(i, j)) <= kSharedEigenstateTol) {
                throw std::domain_error("theorem1_witness: requires all V_ij nonzero");
            }
        }
    }
    const ProbDist joint_psi =
        uncertainty::joint_stat(quantum::pure_to_density(psi_infinity(pair)), pair).dist;
    const ProbDist joint_eigen =
        uncertainty::joint_stat(quantum::pure_to_density(pair.a().eigenstate(0)), pair).dist;

    auto support = [](const ProbDist& p) {
        std::size_t n = 0;
        for (double x : p.probs()) {
            if (x > entropy::kSupportTol) ++n;
        }
        return n;
    };
    const bool full_support = support(joint_psi) == static_cast<std::size_t>(d) * d;
    const bool eigen_small = support(joint_eigen) <= static_cast<std::size_t>(d);

    bool eigenstate_wins_somewhere = false;
    for (const RenyiOrder& a : grid.orders()) {
        if (!a.is_finite() || a.value() <= 0.0) continue;
        const double he = entropy::renyi_entropy(joint_eigen, a);
        const double hp = entropy::renyi_entropy(joint_psi, a);
        if (he < hp - 1e-10) {
            eigenstate_wins_somewhere = true;
            break;
        }
    }
    const RenyiOrder inf = RenyiOrder::plus_infinity();
    const bool psi_wins_at_inf = entropy::renyi_entropy(joint_psi, inf) <
                                 entropy::renyi_entropy(joint_eigen, inf) - 1e-10;

    return full_support && eigen_small && eigenstate_wins_somewhere && psi_wins_at_inf;
}

std::vector<Fig3Row> fig3_profile(const NoiseLevel& eps, const AlphaGrid& grid, int restarts,
                                  std::uint64_t seed) {
    const ObservablePair pair = quantum::rotation_pair_qutrit(kPi / 6.0);
    const quantum::DensityMatrix rho_cand = uncertainty::pseudo_pure(psi_infinity(pair), eps);
    const quantum::DensityMatrix rho_eigen =
        uncertainty::pseudo_pure(pair.a().eigenstate(0), eps);
    const ProbDist joint_cand = uncertainty::joint_stat(rho_cand, pair).dist;
    const ProbDist joint_eigen = uncertainty::joint_stat(rho_eigen, pair).dist;

    const auto& orders = grid.orders();
    std::vector<Fig3Row> rows(orders.size());
    parallel_for(static_cast<int>(orders.size()), [&](int i) {
        const RenyiOrder& a = orders[static_cast<std::size_t>(i)];
        Fig3Row row;
        row.alpha = a;
        row.h_candidate = entropy::renyi_entropy(joint_cand, a);
        row.h_eigen = entropy::renyi_entropy(joint_eigen, a);
        row.h_optimal =
            minimize_joint_entropy_pure(pair, eps, a, restarts,
                                        rng::derive(seed, static_cast<std::uint64_t>(i)))
                .value;
        rows[static_cast<std::size_t>(i)] = row;
    });
    return rows;
}

}  // namespace muskit::mus
