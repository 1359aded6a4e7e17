// entropy.hpp - Renyi entropy family over all extended-real orders, von
// Neumann entropy, and Renyi divergences.
//
// Order convention: H_alpha = sgn(alpha)/(1-alpha) ln sum_i p_i^alpha for
// finite alpha not in {0,1}; alpha = 0 is the Burg entropy (1/d) sum ln p_i,
// not the alpha->0 limit (the limit ln|supp p| is exposed separately as
// support_entropy); alpha = 1 is Shannon; +inf is -ln max p; -inf is
// ln min p. The sgn factor keeps every order Schur-concave, at the price of
// making H_alpha(uniform) = -ln d for alpha < 0.
//
// Returns are extended reals: -inf and +inf are first-class values.

#pragma once

#include <cstddef>
#include <vector>

#include "muskit/quantum.hpp"

namespace muskit::entropy {

// Entries below this magnitude count as zero for support counting.
inline constexpr double kSupportTol = 1e-12;

// Finite probability vector: entries >= 0, sum within 1e-10 of 1.
// Tiny negative entries (>= -1e-12) from floating-point projections are
// clamped to zero; anything more negative is rejected.
class ProbDist {
public:
    explicit ProbDist(std::vector<double> probs);

    const std::vector<double>& probs() const { return p_; }
    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }

    // Entries rearranged in decreasing order.
    std::vector<double> sorted_desc() const;

    static ProbDist uniform(std::size_t n);

private:
    std::vector<double> p_;
};

// Extended-real Renyi order: finite value (0 meaning Burg), +inf or -inf.
class RenyiOrder {
public:
    explicit RenyiOrder(double alpha);

    static RenyiOrder finite(double alpha) { return RenyiOrder(alpha); }
    static RenyiOrder burg() { return RenyiOrder(0.0); }
    static RenyiOrder shannon() { return RenyiOrder(1.0); }
    static RenyiOrder plus_infinity();
    static RenyiOrder minus_infinity();

    double value() const { return alpha_; }
    bool is_finite() const;
    bool is_burg() const { return alpha_ == 0.0; }
    bool is_plus_infinity() const;
    bool is_minus_infinity() const;

    friend bool operator==(const RenyiOrder& a, const RenyiOrder& b) {
        return a.alpha_ == b.alpha_;
    }

private:
    double alpha_;
};

// Finite sample of orders standing in for "all alpha": must contain the
// special points {-inf, 0, 1/2, 1, 2, +inf}, sorted ascending, no duplicates.
class AlphaGrid {
public:
    explicit AlphaGrid(std::vector<RenyiOrder> orders);

    const std::vector<RenyiOrder>& orders() const { return orders_; }
    std::size_t size() const { return orders_.size(); }
    auto begin() const { return orders_.begin(); }
    auto end() const { return orders_.end(); }

    // {-inf, -10, -5, -3, -2, -1, -0.5, 0, 0.1, 0.25, 0.5, 0.75, 1,
    //  1.5, 2, 3, 5, 10, +inf}
    static AlphaGrid default_grid();

private:
    std::vector<RenyiOrder> orders_;
};

// H_alpha(p) in nats, extended real.
double renyi_entropy(const ProbDist& p, const RenyiOrder& alpha);

// Shannon entropy, alias of renyi_entropy at alpha = 1.
double shannon(const ProbDist& p);

// ln |supp p| with support threshold 1e-12 (the alpha->0+ limit of H_alpha).
double support_entropy(const ProbDist& p);

// von Neumann entropy -sum lambda ln lambda in nats, 0 ln 0 = 0.
double von_neumann(const quantum::DensityMatrix& rho);

// S_alpha(p||q) in nats. q must have full support; a zero entry of q is
// rejected as unsupported input.
double renyi_divergence(const ProbDist& p, const ProbDist& q, const RenyiOrder& alpha);

namespace detail {

// H_alpha on a raw buffer without ProbDist validation, for optimizer inner
// loops. Entries must be nonnegative and sum to 1.
double renyi_unchecked(const double* p, std::size_t n, const RenyiOrder& alpha);

}  // namespace detail

}  // namespace muskit::entropy
