#pragma once

#include "segre/segre.hpp"

#include <span>
#include <vector>

namespace segre {

// Hilbert data of a graded module together with the declared Cohen-Macaulay
// assumption. The flag is trusted, never derived: the series alone cannot
// certify it. dim must equal the canonical pole order.
class GradedCMModule {
public:
    GradedCMModule(RationalGF hilbert, Exp dim, bool cm_declared);

    const RationalGF& hilbert() const { return hilbert_; }
    Exp dim() const { return dim_; }
    bool cm_declared() const { return cm_; }
    Exp reg() const { return hilbert_.degree(); }
    Exp alpha() const { return dim_ - reg(); }

private:
    RationalGF hilbert_;
    Exp dim_ = 0;
    bool cm_ = false;
};

// Castelnuovo-Mumford regularity, read off the canonical numerator degree.
// Rejects modules not declared Cohen-Macaulay.
Exp regularity(const GradedCMModule& m);

// n-th Veronese transform: coefficient l of the result is a_{n*l}. Requires
// n >= 1 (std::invalid_argument) and, for nonzero a, ord(a) >= 0
// (HypothesisError).
RationalGF veronese(const RationalGF& a, Exp n);

// reg of the n-th Veronese of m, via dim - ceil(alpha/n), cross-checked
// against the transformed series. Requires m declared CM, reg < dim, series
// starting in degree 0 with nonnegative numerator coefficients.
Exp veronese_regularity_check(const GradedCMModule& m, Exp n);

// reg of the Segre product of declared-CM modules with reg(M_i) < dim(M_i):
// (b_1+...+b_s+1) - max alpha_i with b_i = dim_i - 1, alpha_i = dim_i - reg_i.
// With verify set, recomputes the product numerator and the chained (**)
// condition and throws VerificationError on any disagreement.
Exp segre_regularity_cm(std::span<const GradedCMModule> modules, bool verify = false);

// reg of the Segre product of the n_i-th Veronese transforms:
// (b_1+...+b_s+1) - max ceil(alpha_i/n_i), same hypotheses per factor plus
// n_i >= 1. verify recomputes via the transformed series.
Exp segre_veronese_regularity(std::span<const GradedCMModule> modules,
                              std::span<const Exp> veronese_indices,
                              bool verify = false);

struct ZeroDimReport {
    Exp regularity = 0;
    // Whether the product numerator degree attains the minimum. Reported, not
    // asserted: it holds iff the top-degree coefficients multiply to nonzero.
    bool degree_equality = false;
};

// reg of a Segre product containing at least one zero-dimensional factor:
// the minimum of reg over the zero-dimensional ones. All modules must be
// declared CM; gradings may start in negative degrees here.
Exp zero_dim_segre_regularity(std::span<const GradedCMModule> modules);
// Same, plus the product cross-check and the equality flag.
ZeroDimReport zero_dim_segre_regularity_verified(std::span<const GradedCMModule> modules);

struct NewcombQuery {
    std::vector<Exp> b;
    Exp k = 0;
};

// Largest k with A([b], k) != 0, namely sum(b) - max(b). Entries must be >= 0.
Exp newcomb_max_k(std::span<const Exp> b);

// Simon Newcomb number A([b], k): the k-th numerator coefficient of the s-fold
// coefficientwise product of 1/(1-t)^{b_j+1}. Zero outside [0, newcomb_max_k].
Int newcomb(const NewcombQuery& q);

// All of A([b], 0..newcomb_max_k(b)).
std::vector<Int> newcomb_row(std::span<const Exp> b);

}  // namespace segre
