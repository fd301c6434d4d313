#include "segre/laurent.hpp"

#include <stdexcept>

namespace segre {

LaurentPoly LaurentPoly::term(const Rational& c, Exp e) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<Exp, Rational>>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

Exp LaurentPoly::order() const {
    if (terms_.empty()) throw std::domain_error("order of the zero polynomial");
    return terms_.begin()->first;
}

Exp LaurentPoly::degree() const {
    if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
    return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(Exp e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(Exp e, const Rational& c) {
    if (c == 0) return;
    const auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly out;
    for (const auto& [ea, ca] : lhs.terms_)
        for (const auto& [eb, cb] : rhs.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly scale(const Rational& c, const LaurentPoly& p) {
    LaurentPoly out;
    if (c == 0) return out;
    for (const auto& [e, pc] : p.terms()) out.add_term(e, c * pc);
    return out;
}

LaurentPoly shift(const LaurentPoly& p, Exp m) {
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term(e + m, c);
    return out;
}

Rational eval_at_one(const LaurentPoly& p) {
    Rational sum = 0;
    for (const auto& [e, c] : p.terms()) sum += c;
    return sum;
}

std::optional<LaurentPoly> divide_by_one_minus_t(const LaurentPoly& p) {
    if (p.is_zero()) return LaurentPoly{};
    if (eval_at_one(p) != 0) return std::nullopt;
    // p = q * (1-t) gives the recurrence q_e = p_e + q_{e-1}; the running
    // value returns to zero at the top exactly because p(1) = 0.
    LaurentPoly q;
    Rational run = 0;
    for (Exp e = p.order(); e < p.degree(); ++e) {
        run += p.coeff(e);
        q.add_term(e, run);
    }
    return q;
}

LaurentPoly one_minus_t_power(Exp d) {
    if (d < 0) throw std::invalid_argument("one_minus_t_power: negative exponent");
    LaurentPoly out;
    for (Exp k = 0; k <= d; ++k)
        out.add_term(k, Rational((k % 2 == 0) ? binomial(d, k) : -binomial(d, k)));
    return out;
}

}  // namespace segre
