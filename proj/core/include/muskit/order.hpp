// order.hpp - preorders on probability vectors: majorization, trumping
// (catalytic majorization) certified on an alpha grid, and the catalysis
// phenomenon.

#pragma once

#include <cstddef>
#include <optional>

#include "muskit/entropy.hpp"

namespace muskit::order {

using entropy::AlphaGrid;
using entropy::ProbDist;
using entropy::RenyiOrder;

// Margin below which two entropy values are treated as tied. Ties are
// reported as grid-limited incomparability rather than guessed.
inline constexpr double kStrictnessMargin = 1e-10;
// Tolerance for partial-sum dominance and permutation equivalence.
inline constexpr double kPartialSumTol = 1e-12;

enum class Relation {
    StrictlyLessUncertain,
    StrictlyMoreUncertain,
    EquivalentUpToPermutation,
    Incomparable,
};

// Verdict of an uncertainty comparison between p and q. The witness is
// present exactly for strict and incomparable verdicts:
//   - strict: the grid order (or partial-sum index, 1-based) with the
//     smallest separating margin, i.e. the tightest certificate;
//   - incomparable: the first order/index at which the comparison fails.
struct OrderVerdict {
    Relation relation = Relation::Incomparable;
    std::optional<double> witness_alpha;
    std::optional<std::size_t> witness_index;
};

// p majorizes q: every partial sum of sorted-descending p dominates q's,
// within tolerance 1e-12. Vectors of unequal length are zero-padded first.
bool majorizes(const ProbDist& p, const ProbDist& q);

// Product distribution p (x) q, flattened row-major (index i*m + j).
ProbDist tensor(const ProbDist& p, const ProbDist& q);

// True iff r catalyzes the conversion: p does not majorize q, yet
// p (x) r majorizes q (x) r.
bool catalysis_witness(const ProbDist& p, const ProbDist& q, const ProbDist& r);

// Sum of the two smallest entries; a Schur-concave but non-additive
// uncertainty function. Length >= 2 required.
double sum_two_smallest(const ProbDist& p);

// Grid-certified trumping verdict: p is strictly less uncertain than q iff
// H_alpha(p) < H_alpha(q) at every grid order, with exact extended-real
// handling of +-inf and the Burg order. The verdict is relative to the grid:
// a sound but grid-limited certificate, not a decision procedure.
OrderVerdict trumping_verdict(const ProbDist& p, const ProbDist& q, const AlphaGrid& grid);

// Verdict under the Schur-concave family: the order is majorization itself.
OrderVerdict uncertainty_verdict_S(const ProbDist& p, const ProbDist& q);

}  // namespace muskit::order
