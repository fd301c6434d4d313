#pragma once

#include "segre/laurent.hpp"

#include <optional>
#include <vector>

namespace segre {

// Polynomial in one variable with rational coefficients, stored densely in
// ascending powers. This is the eventual value Phi of a series' coefficient
// function: a_n = Phi(n) for all n past the postulation number.
class HilbertPolynomial {
public:
    HilbertPolynomial() = default;
    explicit HilbertPolynomial(std::vector<Rational> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    Exp degree() const;  // throws std::domain_error on the zero polynomial
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational operator()(const Int& n) const;
    bool operator==(const HilbertPolynomial&) const = default;

private:
    std::vector<Rational> coeffs_;
};

// Series of the form h(t)/(1-t)^d with h a Laurent polynomial and d >= 0, kept
// canonical: either d = 0 or (1-t) does not divide h. The zero series is
// {h = 0, d = 0}. Construction normalizes, so every reachable value is
// canonical and equality of values is equality of representations.
class RationalGF {
public:
    RationalGF() = default;  // the zero series
    RationalGF(LaurentPoly numerator, Exp pole_order);

    bool is_zero() const { return num_.is_zero(); }
    const LaurentPoly& numerator() const { return num_; }
    Exp pole_order() const { return pole_; }
    // Order / degree of the numerator. Throw std::domain_error on zero.
    Exp order() const { return num_.order(); }
    Exp degree() const { return num_.degree(); }
    bool operator==(const RationalGF&) const = default;

private:
    LaurentPoly num_;
    Exp pole_ = 0;
};

// Single coefficient a_k, via the binomial expansion of 1/(1-t)^d.
Rational coefficient(const RationalGF& a, Exp k);

// Coefficients a_from..a_to by repeated prefix summation of the numerator.
// Throws std::invalid_argument when from > to.
std::vector<Rational> expand(const RationalGF& a, Exp from, Exp to);

// Reconstructs the canonical series from a coefficient window
// coeffs[i] = a_{start+i}, assuming the series has the given pole order and no
// support below start. The window certifies itself by producing pole_order + 1
// trailing zero h-values; nullopt when it cannot.
std::optional<RationalGF> hvector_from_window(const std::vector<Rational>& coeffs,
                                              Exp start, Exp pole_order);

// Phi with deg Phi = pole_order - 1; the zero polynomial when pole_order = 0.
HilbertPolynomial hilbert_polynomial(const RationalGF& a);

// deg h - d, the last n at which a_n may differ from Phi(n). Throws
// HypothesisError on the zero series.
Exp postulation_number(const RationalGF& a);

RationalGF gf_add(const RationalGF& a, const RationalGF& b);
RationalGF gf_scale(const Rational& c, const RationalGF& a);

}  // namespace segre
