#include "segre/segre.hpp"

#include "segre/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace segre {

namespace {

bool nonneg_numerator(const RationalGF& a) {
    for (const auto& [e, c] : a.numerator().terms())
        if (c < 0) return false;
    return true;
}

void require_positive_pole(const RationalGF& a, const char* role) {
    if (a.is_zero() || a.pole_order() < 1)
        throw HypothesisError(std::string(role) + ": nonzero series with pole order >= 1 required");
}

// Coefficientwise product where one factor is a plain Laurent polynomial. The
// result is again a Laurent polynomial supported inside the finite factor's
// support. pick(other, e) supplies the other factor's coefficient.
template <typename Pick>
RationalGF finite_product(const RationalGF& finite, Pick pick) {
    LaurentPoly out;
    for (const auto& [e, c] : finite.numerator().terms()) out.add_term(e, c * pick(e));
    return RationalGF(std::move(out), 0);
}

}  // namespace

Int BinomialProductTerm::value() const {
    return binomial(b1 + j - i, n - i) * binomial(b2 + i - j, n - j);
}

Exp term_degree_bound(Exp b1, Exp b2, Exp i, Exp j) {
    if (b2 + i - j >= 0 && b1 + j - i >= 0) return std::min(b1 + j, b2 + i);
    return std::max(b1 + j, b2 + i);
}

RationalGF segre_oracle(const RationalGF& a, const RationalGF& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.pole_order() == 0 || b.pole_order() == 0) {
        const RationalGF& finite = a.pole_order() == 0 ? a : b;
        const RationalGF& other = a.pole_order() == 0 ? b : a;
        const Exp lo = std::max(finite.order(), other.order());
        const Exp hi = finite.degree();
        if (hi < lo) return {};
        const std::vector<Rational> window = expand(other, lo, hi);
        return finite_product(finite, [&](Exp e) {
            return e < lo ? Rational(0) : window[static_cast<std::size_t>(e - lo)];
        });
    }
    const Exp ba = a.pole_order() - 1;
    const Exp bb = b.pole_order() - 1;
    const Exp sigma = std::max(a.order(), b.order());
    const Exp rbound = std::max(ba + b.degree(), bb + a.degree());
    const Exp d = a.pole_order() + b.pole_order() - 1;
    const Exp hi = rbound + d + 1;
    const std::vector<Rational> wa = expand(a, sigma, hi);
    const std::vector<Rational> wb = expand(b, sigma, hi);
    std::vector<Rational> prod(wa.size());
    for (std::size_t idx = 0; idx < wa.size(); ++idx) prod[idx] = wa[idx] * wb[idx];
    auto rebuilt = hvector_from_window(prod, sigma, d);
    if (!rebuilt) throw std::logic_error("segre_oracle: reconstruction window insufficient");
    return *rebuilt;
}

RationalGF segre_closed(const RationalGF& a, const RationalGF& b) {
    if (a.is_zero() || b.is_zero())
        throw HypothesisError("segre_closed: operands must be nonzero");
    if (a.pole_order() == 0 || b.pole_order() == 0) {
        const RationalGF& finite = a.pole_order() == 0 ? a : b;
        const RationalGF& other = a.pole_order() == 0 ? b : a;
        return finite_product(finite, [&](Exp e) { return coefficient(other, e); });
    }
    const Exp ba = a.pole_order() - 1;
    const Exp bb = b.pole_order() - 1;
    const Exp lo = std::max(a.order(), b.order());
    const Exp hi = std::max(ba + b.degree(), bb + a.degree());
    LaurentPoly out;
    for (Exp n = lo; n <= hi; ++n) {
        Rational hn = 0;
        for (const auto& [i, ha] : a.numerator().terms())
            for (const auto& [j, hb] : b.numerator().terms())
                hn += ha * hb * Rational(BinomialProductTerm{ba, bb, i, j, n}.value());
        out.add_term(n, hn);
    }
    return RationalGF(std::move(out), ba + bb + 1);
}

RationalGF segre_monomial(Exp d1, Exp i, Exp d2, Exp j) {
    if (d1 < 1 || d2 < 1)
        throw std::invalid_argument("segre_monomial: pole orders must be >= 1");
    const Exp b1 = d1 - 1;
    const Exp b2 = d2 - 1;
    const Exp top = term_degree_bound(b1, b2, i, j);
    LaurentPoly numerator;
    for (Exp n = std::max(i, j); n <= top; ++n)
        numerator.add_term(n, Rational(BinomialProductTerm{b1, b2, i, j, n}.value()));
    return RationalGF(std::move(numerator), b1 + b2 + 1);
}

RationalGF segre_multi_hvector(std::span<const RationalGF> series) {
    if (series.size() < 2)
        throw std::invalid_argument("segre_multi_hvector: need at least two series");
    for (std::size_t idx = 0; idx < series.size(); ++idx) {
        const RationalGF& s = series[idx];
        const std::string tag = "factor " + std::to_string(idx + 1);
        require_positive_pole(s, tag.c_str());
        if (s.order() < 0 || s.degree() >= s.pole_order())
            throw HypothesisError(tag + ": requires 0 <= ord <= deg < pole order");
    }
    // One level per factor: row holds the numerator coefficients of the
    // partial product a_1 (x) ... (x) a_t, indexed from the t-th factor's
    // order up to (b_1+...+b_t+1) - max(alpha_1..alpha_t), which bounds the
    // partial degree. Entries below the partial product's true order come out
    // as exact zeros.
    Exp low = series[0].order();
    Exp cap = series[0].degree();
    std::vector<Rational> row;
    for (Exp e = low; e <= cap; ++e) row.push_back(series[0].numerator().coeff(e));
    Exp bsum = series[0].pole_order() - 1;
    Exp max_alpha = series[0].pole_order() - series[0].degree();
    for (std::size_t t = 1; t < series.size(); ++t) {
        const RationalGF& factor = series[t];
        const Exp bt = factor.pole_order() - 1;
        max_alpha = std::max(max_alpha, factor.pole_order() - factor.degree());
        const Exp low_next = factor.order();
        const Exp cap_next = bsum + bt + 1 - max_alpha;
        std::vector<Rational> next(static_cast<std::size_t>(cap_next - low_next + 1));
        for (Exp in = low_next; in <= cap_next; ++in) {
            Rational acc = 0;
            for (Exp ip = low; ip <= std::min(cap, in); ++ip) {
                const Rational& hp = row[static_cast<std::size_t>(ip - low)];
                if (hp == 0) continue;
                for (const auto& [l, hl] : factor.numerator().terms())
                    acc += hp * hl * Rational(BinomialProductTerm{bsum, bt, ip, l, in}.value());
            }
            next[static_cast<std::size_t>(in - low_next)] = acc;
        }
        row = std::move(next);
        low = low_next;
        cap = cap_next;
        bsum += bt;
    }
    LaurentPoly numerator;
    for (Exp e = low; e <= cap; ++e) numerator.add_term(e, row[static_cast<std::size_t>(e - low)]);
    return RationalGF(std::move(numerator), bsum + 1);
}

bool condition_star_star(const RationalGF& a, const RationalGF& b) {
    require_positive_pole(a, "condition (**), first series");
    require_positive_pole(b, "condition (**), second series");
    const Exp ba = a.pole_order() - 1;
    const Exp bb = b.pole_order() - 1;
    return bb + a.order() - b.degree() >= 0 && ba + b.order() - a.degree() >= 0;
}

BoundsReport segre_degree_bounds(const RationalGF& a, const RationalGF& b) {
    BoundsReport report;
    report.star_star_holds = condition_star_star(a, b);
    const Exp ba = a.pole_order() - 1;
    const Exp bb = b.pole_order() - 1;
    report.upper_max = std::max(ba + b.degree(), bb + a.degree());
    report.upper_min = std::min(ba + b.degree(), bb + a.degree());
    report.nonneg_inputs = nonneg_numerator(a) && nonneg_numerator(b);
    report.actual_degree = segre_closed(a, b).degree();
    report.equality_attained =
        report.actual_degree == (report.star_star_holds ? report.upper_min : report.upper_max);
    if (report.actual_degree > report.upper_max)
        throw VerificationError("product degree " + std::to_string(report.actual_degree) +
                                " exceeds the unconditional bound " + std::to_string(report.upper_max));
    if (report.star_star_holds && report.actual_degree > report.upper_min)
        throw VerificationError("product degree " + std::to_string(report.actual_degree) +
                                " exceeds the (**) bound " + std::to_string(report.upper_min));
    if (report.star_star_holds && report.nonneg_inputs &&
        report.actual_degree != report.upper_min)
        throw VerificationError("nonnegative inputs under (**) must attain the bound " +
                                std::to_string(report.upper_min) + ", got " +
                                std::to_string(report.actual_degree));
    const bool admissible = a.order() >= 0 && a.degree() <= ba && b.order() >= 0 && b.degree() <= bb;
    if (admissible && !report.star_star_holds)
        throw VerificationError("(**) must hold when both series satisfy 0 <= ord <= deg <= pole order - 1");
    return report;
}

BoundsReport multi_degree_bounds(std::span<const RationalGF> series) {
    if (series.size() < 2)
        throw std::invalid_argument("multi_degree_bounds: need at least two series");
    Exp bsum = 0;
    Exp min_alpha = 0;
    Exp max_alpha = 0;
    bool admissible = true;
    BoundsReport report;
    report.nonneg_inputs = true;
    for (std::size_t idx = 0; idx < series.size(); ++idx) {
        const RationalGF& s = series[idx];
        const std::string tag = "factor " + std::to_string(idx + 1);
        require_positive_pole(s, tag.c_str());
        const Exp alpha = s.pole_order() - s.degree();
        bsum += s.pole_order() - 1;
        min_alpha = idx == 0 ? alpha : std::min(min_alpha, alpha);
        max_alpha = idx == 0 ? alpha : std::max(max_alpha, alpha);
        report.nonneg_inputs = report.nonneg_inputs && nonneg_numerator(s);
        admissible = admissible && s.order() >= 0 && s.degree() < s.pole_order();
    }
    report.upper_max = bsum + 1 - min_alpha;
    report.upper_min = bsum + 1 - max_alpha;
    report.star_star_holds = true;
    RationalGF product = series[0];
    for (std::size_t t = 1; t < series.size(); ++t) {
        report.star_star_holds =
            report.star_star_holds && condition_star_star(product, series[t]);
        product = segre_closed(product, series[t]);
    }
    report.actual_degree = product.degree();
    report.equality_attained =
        report.actual_degree == (report.star_star_holds ? report.upper_min : report.upper_max);
    if (report.actual_degree > report.upper_max)
        throw VerificationError("product degree " + std::to_string(report.actual_degree) +
                                " exceeds the unconditional bound " + std::to_string(report.upper_max));
    if (report.star_star_holds && report.actual_degree > report.upper_min)
        throw VerificationError("product degree " + std::to_string(report.actual_degree) +
                                " exceeds the chained (**) bound " + std::to_string(report.upper_min));
    if (report.star_star_holds && report.nonneg_inputs &&
        report.actual_degree != report.upper_min)
        throw VerificationError("nonnegative inputs under chained (**) must attain the bound " +
                                std::to_string(report.upper_min) + ", got " +
                                std::to_string(report.actual_degree));
    if (admissible && !report.star_star_holds)
        throw VerificationError("chained (**) must hold when every factor satisfies 0 <= ord <= deg < pole order");
    return report;
}

}  // namespace segre
