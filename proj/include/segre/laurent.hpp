#pragma once

#include "segre/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace segre {

// Laurent polynomial in t with exact rational coefficients, stored sparsely by
// integer exponent. Zero coefficients are never stored, so the zero polynomial
// is exactly the one with empty support.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly term(const Rational& c, Exp e);
    static LaurentPoly constant(const Rational& c) { return term(c, 0); }
    // Sums duplicate exponents.
    static LaurentPoly from_terms(const std::vector<std::pair<Exp, Rational>>& terms);

    bool is_zero() const { return terms_.empty(); }
    // Least / greatest exponent of the support. Throw std::domain_error on the
    // zero polynomial, which has neither.
    Exp order() const;
    Exp degree() const;
    Rational coeff(Exp e) const;
    const std::map<Exp, Rational>& terms() const { return terms_; }

    // Adds c*t^e, erasing the entry if the sum cancels to zero.
    void add_term(Exp e, const Rational& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    bool operator==(const LaurentPoly&) const = default;

private:
    std::map<Exp, Rational> terms_;
};

LaurentPoly scale(const Rational& c, const LaurentPoly& p);
// Multiplication by t^m.
LaurentPoly shift(const LaurentPoly& p, Exp m);
Rational eval_at_one(const LaurentPoly& p);
// Exact quotient p / (1-t); nullopt unless (1-t) divides p, which happens
// exactly when eval_at_one(p) == 0.
std::optional<LaurentPoly> divide_by_one_minus_t(const LaurentPoly& p);
// (1-t)^d for d >= 0.
LaurentPoly one_minus_t_power(Exp d);

}  // namespace segre
