#include "muskit/order.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace muskit::order {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> padded_sorted_desc(const ProbDist& p, std::size_t n) {
    std::vector<double> s = p.sorted_desc();
    s.resize(n, 0.0);
    return s;
}

// First 1-based index where p's partial sums fail to dominate q's, or nullopt
// if p majorizes q. Only the first n-1 partial sums carry information; the
// full sums are both 1 by the ProbDist invariant.
std::optional<std::size_t> dominance_failure(const std::vector<double>& p_desc,
                                             const std::vector<double>& q_desc) {
    double cp = 0.0;
    double cq = 0.0;
    for (std::size_t k = 0; k + 1 < p_desc.size(); ++k) {
        cp += p_desc[k];
        cq += q_desc[k];
        if (cp < cq - kPartialSumTol) {
            return k + 1;
        }
    }
    return std::nullopt;
}

// 1-based index of the smallest dominance surplus, for strict witnesses.
std::size_t tightest_dominance_index(const std::vector<double>& p_desc,
                                     const std::vector<double>& q_desc) {
    double cp = 0.0, cq = 0.0, best = kInf;
    std::size_t arg = 1;
    for (std::size_t k = 0; k + 1 < p_desc.size(); ++k) {
        cp += p_desc[k];
        cq += q_desc[k];
        if (cp - cq < best) {
            best = cp - cq;
            arg = k + 1;
        }
    }
    return arg;
}

bool sorted_equal(const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > kPartialSumTol) return false;
    }
    return true;
}

// Extended-real strict comparison with the tie margin applied to the finite
// vs finite case only; equal infinities are ties.
bool strictly_less(double x, double y) {
    if (x == -kInf) return y > -kInf;
    if (x == kInf) return false;
    if (y == kInf) return true;
    if (y == -kInf) return false;
    return x < y - kStrictnessMargin;
}

double separation(double x, double y) {
    if (std::isinf(x) || std::isinf(y)) return kInf;
    return std::abs(x - y);
}

}  // namespace

bool majorizes(const ProbDist& p, const ProbDist& q) {
    const std::size_t n = std::max(p.size(), q.size());
    return !dominance_failure(padded_sorted_desc(p, n), padded_sorted_desc(q, n)).has_value();
}

ProbDist tensor(const ProbDist& p, const ProbDist& q) {
    std::vector<double> out;
    out.reserve(p.size() * q.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            out.push_back(p[i] * q[j]);
        }
    }
    return ProbDist(std::move(out));
}

bool catalysis_witness(const ProbDist& p, const ProbDist& q, const ProbDist& r) {
    return !majorizes(p, q) && majorizes(tensor(p, r), tensor(q, r));
}

double sum_two_smallest(const ProbDist& p) {
    if (p.size() < 2) {
        throw std::invalid_argument("sum_two_smallest: length >= 2 required");
    }
    std::vector<double> s = p.sorted_desc();
    return s[s.size() - 1] + s[s.size() - 2];
}

OrderVerdict trumping_verdict(const ProbDist& p, const ProbDist& q, const AlphaGrid& grid) {
    const std::size_t n = std::max(p.size(), q.size());
    const std::vector<double> ps = padded_sorted_desc(p, n);
    const std::vector<double> qs = padded_sorted_desc(q, n);
    if (sorted_equal(ps, qs)) {
        return {Relation::EquivalentUpToPermutation, std::nullopt, std::nullopt};
    }

    bool all_less = true;
    bool all_greater = true;
    double first_failure_less = 0.0, first_failure_greater = 0.0;
    bool have_fail_less = false, have_fail_greater = false;
    double tightest = kInf;
    double tightest_alpha = 0.0;

    for (const RenyiOrder& a : grid.orders()) {
        const double hp = entropy::renyi_entropy(p, a);
        const double hq = entropy::renyi_entropy(q, a);
        if (!strictly_less(hp, hq)) {
            if (all_less && !have_fail_less) {
                first_failure_less = a.value();
                have_fail_less = true;
            }
            all_less = false;
        }
        if (!strictly_less(hq, hp)) {
            if (all_greater && !have_fail_greater) {
                first_failure_greater = a.value();
                have_fail_greater = true;
            }
            all_greater = false;
        }
        const double sep = separation(hp, hq);
        if (sep < tightest) {
            tightest = sep;
            tightest_alpha = a.value();
        }
    }

    OrderVerdict v;
    if (all_less) {
        v.relation = Relation::StrictlyLessUncertain;
        v.witness_alpha = tightest_alpha;
    } else if (all_greater) {
        v.relation = Relation::StrictlyMoreUncertain;
        v.witness_alpha = tightest_alpha;
    } else {
        v.relation = Relation::Incomparable;
        // Report where the direction suggested by the other points breaks:
        // if neither direction ever held, the first grid order is as good a
        // witness as any.
        v.witness_alpha = have_fail_less ? first_failure_less : first_failure_greater;
    }
    return v;
}

OrderVerdict uncertainty_verdict_S(const ProbDist& p, const ProbDist& q) {
    const std::size_t n = std::max(p.size(), q.size());
    const std::vector<double> ps = padded_sorted_desc(p, n);
    const std::vector<double> qs = padded_sorted_desc(q, n);

    if (sorted_equal(ps, qs)) {
        return {Relation::EquivalentUpToPermutation, std::nullopt, std::nullopt};
    }
    const std::optional<std::size_t> fail_pq = dominance_failure(ps, qs);
    const std::optional<std::size_t> fail_qp = dominance_failure(qs, ps);

    OrderVerdict v;
    if (!fail_pq && fail_qp) {
        v.relation = Relation::StrictlyLessUncertain;
        v.witness_index = tightest_dominance_index(ps, qs);
    } else if (fail_pq && !fail_qp) {
        v.relation = Relation::StrictlyMoreUncertain;
        v.witness_index = tightest_dominance_index(qs, ps);
    } else if (fail_pq && fail_qp) {
        v.relation = Relation::Incomparable;
        v.witness_index = *fail_pq;
    } else {
        // Both dominate within tolerance yet the sorted vectors differ beyond
        // it: a knife-edge tie; report as incomparable at the first index.
        v.relation = Relation::Incomparable;
        v.witness_index = 1;
    }
    return v;
}

}  // namespace muskit::order
