#include "segre/series.hpp"

#include "segre/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace segre {

HilbertPolynomial::HilbertPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Exp HilbertPolynomial::degree() const {
    if (coeffs_.empty()) throw std::domain_error("degree of the zero polynomial");
    return static_cast<Exp>(coeffs_.size()) - 1;
}

Rational HilbertPolynomial::operator()(const Int& n) const {
    Rational value = 0;
    Rational power = 1;
    for (const Rational& c : coeffs_) {
        value += c * power;
        power *= Rational(n);
    }
    return value;
}

RationalGF::RationalGF(LaurentPoly numerator, Exp pole_order)
    : num_(std::move(numerator)), pole_(pole_order) {
    if (pole_ < 0) throw std::invalid_argument("pole_order must be >= 0");
    if (num_.is_zero()) {
        pole_ = 0;
        return;
    }
    while (pole_ > 0) {
        auto quotient = divide_by_one_minus_t(num_);
        if (!quotient) break;
        num_ = std::move(*quotient);
        --pole_;
    }
}

Rational coefficient(const RationalGF& a, Exp k) {
    if (a.is_zero()) return 0;
    if (a.pole_order() == 0) return a.numerator().coeff(k);
    if (k < a.order()) return 0;
    const Exp b = a.pole_order() - 1;
    Rational acc = 0;
    for (const auto& [i, h] : a.numerator().terms()) {
        if (i > k) break;
        acc += h * Rational(binomial(b + k - i, k - i));
    }
    return acc;
}

std::vector<Rational> expand(const RationalGF& a, Exp from, Exp to) {
    if (from > to) throw std::invalid_argument("expand: from > to");
    std::vector<Rational> out(static_cast<std::size_t>(to - from + 1));
    if (a.is_zero()) return out;
    const Exp base = a.order();
    if (to < base) return out;
    std::vector<Rational> window(static_cast<std::size_t>(to - base + 1));
    for (const auto& [e, c] : a.numerator().terms())
        if (e <= to) window[static_cast<std::size_t>(e - base)] = c;
    for (Exp pass = 0; pass < a.pole_order(); ++pass)
        for (std::size_t i = 1; i < window.size(); ++i) window[i] += window[i - 1];
    for (Exp k = std::max(from, base); k <= to; ++k)
        out[static_cast<std::size_t>(k - from)] = window[static_cast<std::size_t>(k - base)];
    return out;
}

std::optional<RationalGF> hvector_from_window(const std::vector<Rational>& coeffs,
                                              Exp start, Exp pole_order) {
    if (pole_order < 0) throw std::invalid_argument("pole_order must be >= 0");
    const Exp count = static_cast<Exp>(coeffs.size());
    if (count < pole_order + 1) return std::nullopt;
    std::vector<Int> alt(static_cast<std::size_t>(pole_order) + 1);
    for (Exp k = 0; k <= pole_order; ++k)
        alt[static_cast<std::size_t>(k)] = (k % 2 == 0) ? binomial(pole_order, k)
                                                        : -binomial(pole_order, k);
    // h_n = sum_k (-1)^k C(d,k) a_{n-k}; entries below the window are zero by
    // the no-support-below-start assumption.
    std::vector<Rational> h(static_cast<std::size_t>(count));
    for (Exp idx = 0; idx < count; ++idx) {
        Rational acc = 0;
        for (Exp k = 0; k <= std::min(idx, pole_order); ++k)
            acc += Rational(alt[static_cast<std::size_t>(k)]) *
                   coeffs[static_cast<std::size_t>(idx - k)];
        h[static_cast<std::size_t>(idx)] = acc;
    }
    for (Exp idx = count - pole_order - 1; idx < count; ++idx)
        if (h[static_cast<std::size_t>(idx)] != 0) return std::nullopt;
    LaurentPoly numerator;
    for (Exp idx = 0; idx < count; ++idx)
        numerator.add_term(start + idx, h[static_cast<std::size_t>(idx)]);
    return RationalGF(std::move(numerator), pole_order);
}

HilbertPolynomial hilbert_polynomial(const RationalGF& a) {
    if (a.pole_order() == 0) return {};
    const Exp b = a.pole_order() - 1;
    // Phi(n) = sum_i h_i C(b+n-i, b), each binomial expanded as the monic
    // product (n-i+1)...(n-i+b) before the common division by b!.
    std::vector<Rational> acc(static_cast<std::size_t>(b) + 1, Rational(0));
    for (const auto& [i, h] : a.numerator().terms()) {
        std::vector<Rational> prod{Rational(1)};
        for (Exp j = 1; j <= b; ++j) {
            std::vector<Rational> next(prod.size() + 1, Rational(0));
            const Rational root(j - i);
            for (std::size_t u = 0; u < prod.size(); ++u) {
                next[u] += prod[u] * root;
                next[u + 1] += prod[u];
            }
            prod = std::move(next);
        }
        for (std::size_t u = 0; u < prod.size(); ++u) acc[u] += h * prod[u];
    }
    Int bfact = 1;
    for (Exp j = 2; j <= b; ++j) bfact *= j;
    for (Rational& c : acc) c /= Rational(bfact);
    return HilbertPolynomial(std::move(acc));
}

Exp postulation_number(const RationalGF& a) {
    if (a.is_zero()) throw HypothesisError("postulation number of the zero series");
    return a.degree() - a.pole_order();
}

RationalGF gf_add(const RationalGF& a, const RationalGF& b) {
    const Exp d = std::max(a.pole_order(), b.pole_order());
    LaurentPoly numerator = a.numerator() * one_minus_t_power(d - a.pole_order()) +
                            b.numerator() * one_minus_t_power(d - b.pole_order());
    return RationalGF(std::move(numerator), d);
}

RationalGF gf_scale(const Rational& c, const RationalGF& a) {
    return RationalGF(scale(c, a.numerator()), a.pole_order());
}

}  // namespace segre
