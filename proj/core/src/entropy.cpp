#include "muskit/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace muskit::entropy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSumTol = 1e-10;
constexpr double kNegClampTol = 1e-12;
// Inside this window around alpha = 1 the generic formula loses all digits
// to cancellation; switch to the Shannon formula.
constexpr double kShannonWindow = 1e-7;

double shannon_raw(const std::vector<double>& p) {
    double h = 0.0;
    for (double x : p) {
        if (x > 0.0) h -= x * std::log(x);
    }
    return h;
}

}  // namespace

ProbDist::ProbDist(std::vector<double> probs) : p_(std::move(probs)) {
    if (p_.empty()) {
        throw std::invalid_argument("ProbDist: empty vector");
    }
    double sum = 0.0;
    for (double& x : p_) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("ProbDist: entries must be finite");
        }
        if (x < 0.0) {
            if (x < -kNegClampTol) {
                throw std::invalid_argument("ProbDist: negative entry beyond -1e-12");
            }
            x = 0.0;
        }
        sum += x;
    }
    if (std::abs(sum - 1.0) > kSumTol) {
        throw std::invalid_argument("ProbDist: entries must sum to 1 within 1e-10");
    }
}

std::vector<double> ProbDist::sorted_desc() const {
    std::vector<double> s = p_;
    std::sort(s.begin(), s.end(), std::greater<double>());
    return s;
}

ProbDist ProbDist::uniform(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("ProbDist::uniform: n must be positive");
    }
    return ProbDist(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

RenyiOrder::RenyiOrder(double alpha) : alpha_(alpha) {
    if (std::isnan(alpha)) {
        throw std::invalid_argument("RenyiOrder: NaN order");
    }
}

RenyiOrder RenyiOrder::plus_infinity() { return RenyiOrder(kInf); }
RenyiOrder RenyiOrder::minus_infinity() { return RenyiOrder(-kInf); }

bool RenyiOrder::is_finite() const { return std::isfinite(alpha_); }
bool RenyiOrder::is_plus_infinity() const { return alpha_ == kInf; }
bool RenyiOrder::is_minus_infinity() const { return alpha_ == -kInf; }

AlphaGrid::AlphaGrid(std::vector<RenyiOrder> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) {
        throw std::invalid_argument("AlphaGrid: empty grid");
    }
    for (std::size_t i = 1; i < orders_.size(); ++i) {
        if (!(orders_[i - 1].value() < orders_[i].value())) {
            throw std::invalid_argument("AlphaGrid: orders must be strictly ascending");
        }
    }
    const double required[] = {-kInf, 0.0, 0.5, 1.0, 2.0, kInf};
    for (double r : required) {
        bool found = false;
        for (const auto& o : orders_) {
            if (o.value() == r) { found = true; break; }
        }
        if (!found) {
            throw std::invalid_argument(
                "AlphaGrid: missing mandatory order (needs -inf, 0, 1/2, 1, 2, +inf)");
        }
    }
}

AlphaGrid AlphaGrid::default_grid() {
    std::vector<RenyiOrder> g;
    g.push_back(RenyiOrder::minus_infinity());
    for (double a : {-10.0, -5.0, -3.0, -2.0, -1.0, -0.5, 0.0, 0.1, 0.25, 0.5,
                     0.75, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0}) {
        g.push_back(RenyiOrder::finite(a));
    }
    g.push_back(RenyiOrder::plus_infinity());
    return AlphaGrid(std::move(g));
}

namespace detail {

double renyi_unchecked(const double* p, std::size_t n, const RenyiOrder& alpha) {
    if (alpha.is_plus_infinity()) {
        double m = 0.0;
        for (std::size_t i = 0; i < n; ++i) m = std::max(m, p[i]);
        return -std::log(m);
    }
    if (alpha.is_minus_infinity()) {
        double m = kInf;
        for (std::size_t i = 0; i < n; ++i) m = std::min(m, p[i]);
        return m > 0.0 ? std::log(m) : -kInf;
    }

    const double a = alpha.value();
    if (alpha.is_burg()) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (p[i] <= 0.0) return -kInf;
            s += std::log(p[i]);
        }
        return s / static_cast<double>(n);
    }
    if (std::abs(a - 1.0) < kShannonWindow) {
        double h = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (p[i] > 0.0) h -= p[i] * std::log(p[i]);
        }
        return h;
    }
    if (a < 0.0) {
        for (std::size_t i = 0; i < n; ++i) {
            if (p[i] <= 0.0) return -kInf;
        }
    }
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (p[i] > 0.0) s += std::pow(p[i], a);
    }
    const double sgn = a > 0.0 ? 1.0 : -1.0;
    return sgn / (1.0 - a) * std::log(s);
}

}  // namespace detail

double renyi_entropy(const ProbDist& p, const RenyiOrder& alpha) {
    return detail::renyi_unchecked(p.probs().data(), p.size(), alpha);
}

double shannon(const ProbDist& p) {
    return shannon_raw(p.probs());
}

double support_entropy(const ProbDist& p) {
    std::size_t n = 0;
    for (double x : p.probs()) {
        if (x > kSupportTol) ++n;
    }
    return std::log(static_cast<double>(n));
}

double von_neumann(const quantum::DensityMatrix& rho) {
    const Eigen::VectorXd ev = rho.eigenvalues();
    double h = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev[i] > 0.0) h -= ev[i] * std::log(ev[i]);
    }
    return h;
}

double renyi_divergence(const ProbDist& p, const ProbDist& q, const RenyiOrder& alpha) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("renyi_divergence: length mismatch");
    }
    for (double x : q.probs()) {
        if (x <= 0.0) {
            throw std::domain_error(
                "renyi_divergence: q must have full support (zero entry unsupported)");
        }
    }
    const std::vector<double>& pv = p.probs();
    const std::vector<double>& qv = q.probs();
    const std::size_t n = pv.size();

    if (alpha.is_plus_infinity()) {
        double m = -kInf;
        for (std::size_t i = 0; i < n; ++i) m = std::max(m, pv[i] / qv[i]);
        return std::log(m);
    }
    if (alpha.is_minus_infinity()) {
        // S_{-inf}(p||q) = S_{+inf}(q||p) = ln max q_i/p_i
        double m = -kInf;
        for (std::size_t i = 0; i < n; ++i) {
            m = std::max(m, pv[i] > 0.0 ? qv[i] / pv[i] : kInf);
        }
        return std::log(m);
    }

    const double a = alpha.value();
    if (alpha.is_burg()) {
        // S_0 = -ln sum_{i: p_i != 0} q_i
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (pv[i] > 0.0) s += qv[i];
        }
        return -std::log(s);
    }
    if (std::abs(a - 1.0) < kShannonWindow) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (pv[i] > 0.0) s += pv[i] * std::log(pv[i] / qv[i]);
        }
        return s;
    }
    if (a < 0.0) {
        for (double x : pv) {
            if (x <= 0.0) return kInf;
        }
    }
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (pv[i] > 0.0) s += std::pow(pv[i], a) * std::pow(qv[i], 1.0 - a);
    }
    const double sgn = a > 0.0 ? 1.0 : -1.0;
    return sgn / (a - 1.0) * std::log(s);
}

}  // namespace muskit::entropy
