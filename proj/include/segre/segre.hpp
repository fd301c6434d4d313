#pragma once

#include "segre/series.hpp"

#include <span>

namespace segre {

// The binomial product A_{i,j,n} = C(b1+j-i, n-i) * C(b2+i-j, n-j) attached to
// numerator indices i, j of two series with pole orders b1+1, b2+1.
struct BinomialProductTerm {
    Exp b1 = 0;
    Exp b2 = 0;
    Exp i = 0;
    Exp j = 0;
    Exp n = 0;

    Int value() const;
};

// r_{i,j}: the largest n with A_{i,j,n} != 0. The min branch applies exactly
// when both upper binomial arguments are nonnegative; at most one can fail.
Exp term_degree_bound(Exp b1, Exp b2, Exp i, Exp j);

// Coefficientwise product, computed by brute force: expand both factors over a
// window known to contain the whole numerator of the result, multiply
// pointwise, reconstruct. Zero when either factor is zero.
RationalGF segre_oracle(const RationalGF& a, const RationalGF& b);

// Coefficientwise product in closed form, without expanding either series.
// Throws HypothesisError when an operand is zero.
RationalGF segre_closed(const RationalGF& a, const RationalGF& b);

// Closed form of t^i/(1-t)^d1 (x) t^j/(1-t)^d2 for d1, d2 >= 1.
RationalGF segre_monomial(Exp d1, Exp i, Exp d2, Exp j);

// s-fold coefficientwise product (s >= 2) via the one-shot nested sum over
// binomial product terms. Every factor must be nonzero with pole order >= 1
// and 0 <= ord <= deg < pole order; violations throw HypothesisError.
RationalGF segre_multi_hvector(std::span<const RationalGF> series);

// The pair condition (**): b_b + ord(a) - deg(b) >= 0 and
// b_a + ord(b) - deg(a) >= 0. Requires both series nonzero with pole >= 1.
bool condition_star_star(const RationalGF& a, const RationalGF& b);

struct BoundsReport {
    Exp upper_max = 0;        // bound that always holds
    Exp upper_min = 0;        // sharper bound, valid under (**)
    bool star_star_holds = false;
    bool nonneg_inputs = false;
    Exp actual_degree = 0;    // numerator degree of the actual product
    bool equality_attained = false;  // actual == applicable bound
};

// Degree bounds for the numerator of a (x) b, plus the actual product degree.
// Cross-checks the bound statements against the computed product and throws
// VerificationError if any fails, which would be a bug here, not bad input.
BoundsReport segre_degree_bounds(const RationalGF& a, const RationalGF& b);

// Same report for an s-fold product (s >= 2): upper_max is
// (b_1+...+b_s+1) - min alpha_i and upper_min is (b_1+...+b_s+1) - max alpha_i
// with alpha_i = pole_i - deg_i; star_star_holds chains (**) over the partial
// products left to right.
BoundsReport multi_degree_bounds(std::span<const RationalGF> series);

}  // namespace segre
