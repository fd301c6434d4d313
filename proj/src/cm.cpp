#include "segre/cm.hpp"

#include "segre/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace segre {

namespace {

Exp ceil_div(Exp a, Exp n) {
    // Only called with a >= 1, n >= 1.
    return (a + n - 1) / n;
}

bool nonneg_numerator(const RationalGF& a) {
    for (const auto& [e, c] : a.numerator().terms())
        if (c < 0) return false;
    return true;
}

std::string module_tag(std::size_t idx) { return "module " + std::to_string(idx + 1); }

void require_cm(const GradedCMModule& m, std::size_t idx) {
    if (!m.cm_declared())
        throw HypothesisError(module_tag(idx) + " is not declared Cohen-Macaulay");
}

// Shared hypotheses of the positive-dimensional regularity formulas.
void require_admissible(const GradedCMModule& m, std::size_t idx) {
    require_cm(m, idx);
    if (m.dim() < 1)
        throw HypothesisError(module_tag(idx) +
                              " has dimension 0; use the zero-dimensional form");
    if (m.hilbert().order() < 0)
        throw HypothesisError(module_tag(idx) + " must be graded in nonnegative degrees");
    if (m.reg() >= m.dim())
        throw HypothesisError(module_tag(idx) + ": requires reg < dim (reg = " +
                              std::to_string(m.reg()) + ", dim = " + std::to_string(m.dim()) + ")");
}

std::string degree_mismatch(const char* what, Exp expected, Exp actual) {
    return std::string(what) + ": formula gives " + std::to_string(expected) +
           " but the product numerator has degree " + std::to_string(actual);
}

}  // namespace

GradedCMModule::GradedCMModule(RationalGF hilbert, Exp dim, bool cm_declared)
    : hilbert_(std::move(hilbert)), dim_(dim), cm_(cm_declared) {
    if (hilbert_.is_zero())
        throw std::invalid_argument("module requires a nonzero Hilbert series");
    if (dim_ != hilbert_.pole_order())
        throw std::invalid_argument("dim (" + std::to_string(dim_) +
                                    ") must equal the canonical pole order (" +
                                    std::to_string(hilbert_.pole_order()) + ")");
}

Exp regularity(const GradedCMModule& m) {
    require_cm(m, 0);
    return m.reg();
}

RationalGF veronese(const RationalGF& a, Exp n) {
    if (n < 1) throw std::invalid_argument("veronese: n must be >= 1");
    if (a.is_zero()) return {};
    if (a.order() < 0)
        throw HypothesisError("veronese: series must be supported in degrees >= 0");
    if (n == 1) return a;
    if (a.pole_order() == 0) {
        LaurentPoly out;
        for (const auto& [e, c] : a.numerator().terms())
            if (e % n == 0) out.add_term(e / n, c);
        return RationalGF(std::move(out), 0);
    }
    const Exp d = a.pole_order();
    const Exp beta = a.degree() - d;
    // The result's numerator degree is at most max(beta,0)/n + d, so this
    // window always exhibits the d+1 trailing zeros the reconstruction needs.
    const Exp top = std::max(beta, Exp(0)) / n + 2 * d + 2;
    const std::vector<Rational> all = expand(a, 0, n * top);
    std::vector<Rational> picked(static_cast<std::size_t>(top) + 1);
    for (Exp l = 0; l <= top; ++l)
        picked[static_cast<std::size_t>(l)] = all[static_cast<std::size_t>(n * l)];
    auto rebuilt = hvector_from_window(picked, 0, d);
    if (!rebuilt) throw std::logic_error("veronese: reconstruction window insufficient");
    return *rebuilt;
}

Exp veronese_regularity_check(const GradedCMModule& m, Exp n) {
    if (n < 1) throw std::invalid_argument("veronese index must be >= 1");
    require_admissible(m, 0);
    if (m.hilbert().order() != 0)
        throw HypothesisError("module 1: requires a series starting exactly in degree 0");
    if (!nonneg_numerator(m.hilbert()))
        throw HypothesisError("module 1: requires nonnegative numerator coefficients");
    const Exp predicted = m.dim() - ceil_div(m.alpha(), n);
    const RationalGF v = veronese(m.hilbert(), n);
    if (v.degree() != predicted)
        throw std::logic_error(degree_mismatch("veronese regularity", predicted, v.degree()));
    return predicted;
}

Exp segre_regularity_cm(std::span<const GradedCMModule> modules, bool verify) {
    if (modules.empty()) throw std::invalid_argument("at least one module required");
    Exp bsum = 0;
    Exp max_alpha = 0;
    for (std::size_t idx = 0; idx < modules.size(); ++idx) {
        const GradedCMModule& m = modules[idx];
        require_admissible(m, idx);
        bsum += m.dim() - 1;
        max_alpha = idx == 0 ? m.alpha() : std::max(max_alpha, m.alpha());
    }
    const Exp result = bsum + 1 - max_alpha;
    if (verify) {
        if (modules.size() == 1) {
            if (modules[0].reg() != result)
                throw VerificationError(degree_mismatch("regularity", result, modules[0].reg()));
        } else {
            std::vector<RationalGF> series;
            series.reserve(modules.size());
            for (const GradedCMModule& m : modules) series.push_back(m.hilbert());
            const RationalGF product = segre_multi_hvector(series);
            if (product.degree() != result)
                throw VerificationError(degree_mismatch("regularity", result, product.degree()));
            // The chained pair condition is what makes the product behave like
            // a CM module of dimension b_1+...+b_s+1; it must come for free.
            RationalGF partial = series[0];
            for (std::size_t t = 1; t < series.size(); ++t) {
                if (!condition_star_star(partial, series[t]))
                    throw VerificationError("chained (**) failed at factor " + std::to_string(t + 1));
                partial = segre_closed(partial, series[t]);
            }
        }
    }
    return result;
}

Exp segre_veronese_regularity(std::span<const GradedCMModule> modules,
                              std::span<const Exp> veronese_indices, bool verify) {
    if (modules.empty()) throw std::invalid_argument("at least one module required");
    if (veronese_indices.size() != modules.size())
        throw std::invalid_argument("need one veronese index per module");
    Exp bsum = 0;
    Exp max_step = 0;
    for (std::size_t idx = 0; idx < modules.size(); ++idx) {
        const GradedCMModule& m = modules[idx];
        require_admissible(m, idx);
        if (veronese_indices[idx] < 1)
            throw std::invalid_argument(module_tag(idx) + ": veronese index must be >= 1");
        bsum += m.dim() - 1;
        const Exp step = ceil_div(m.alpha(), veronese_indices[idx]);
        max_step = idx == 0 ? step : std::max(max_step, step);
    }
    const Exp result = bsum + 1 - max_step;
    if (verify) {
        std::vector<RationalGF> series;
        series.reserve(modules.size());
        for (std::size_t idx = 0; idx < modules.size(); ++idx)
            series.push_back(veronese(modules[idx].hilbert(), veronese_indices[idx]));
        const RationalGF product =
            series.size() == 1 ? series[0] : segre_multi_hvector(series);
        if (product.degree() != result)
            throw VerificationError(degree_mismatch("veronese-segre regularity", result,
                                                    product.degree()));
    }
    return result;
}

Exp zero_dim_segre_regularity(std::span<const GradedCMModule> modules) {
    if (modules.empty()) throw std::invalid_argument("at least one module required");
    bool found = false;
    Exp result = 0;
    for (std::size_t idx = 0; idx < modules.size(); ++idx) {
        require_cm(modules[idx], idx);
        if (modules[idx].dim() != 0) continue;
        const Exp reg = modules[idx].reg();
        result = found ? std::min(result, reg) : reg;
        found = true;
    }
    if (!found) throw HypothesisError("no zero-dimensional module present");
    return result;
}

ZeroDimReport zero_dim_segre_regularity_verified(std::span<const GradedCMModule> modules) {
    const Exp result = zero_dim_segre_regularity(modules);
    RationalGF product = modules[0].hilbert();
    for (std::size_t t = 1; t < modules.size(); ++t)
        product = segre_closed(product, modules[t].hilbert());
    if (!product.is_zero() && product.pole_order() != 0)
        throw VerificationError("product of a family with a zero-dimensional factor must be a Laurent polynomial");
    Rational top_product = 1;
    for (const GradedCMModule& m : modules) top_product *= coefficient(m.hilbert(), result);
    bool equality = false;
    if (product.is_zero()) {
        if (top_product != 0)
            throw VerificationError("zero product despite nonvanishing top coefficients");
    } else {
        if (product.degree() > result)
            throw VerificationError(degree_mismatch("zero-dimensional regularity bound", result,
                                                    product.degree()));
        equality = product.degree() == result;
        if (equality != (top_product != 0))
            throw VerificationError("top-coefficient criterion disagrees with the product degree");
    }
    return {result, equality};
}

Exp newcomb_max_k(std::span<const Exp> b) {
    if (b.empty()) throw std::invalid_argument("composition must be nonempty");
    Exp sum = 0;
    Exp max = b[0];
    for (const Exp entry : b) {
        if (entry < 0) throw std::invalid_argument("composition entries must be >= 0");
        sum += entry;
        max = std::max(max, entry);
    }
    return sum - max;
}

std::vector<Int> newcomb_row(std::span<const Exp> b) {
    const Exp top = newcomb_max_k(b);
    const std::size_t n = b.size();
    if (n == 1) return {Int(1)};
    Exp bsum = b[0] + b[1];
    Exp cap = bsum - std::max(b[0], b[1]);
    std::vector<Int> row(static_cast<std::size_t>(cap) + 1);
    for (Exp i = 0; i <= cap; ++i)
        row[static_cast<std::size_t>(i)] = binomial(b[0], i) * binomial(b[1], i);
    Exp bmax = std::max(b[0], b[1]);
    for (std::size_t t = 2; t < n; ++t) {
        const Exp bsum_prev = bsum;
        bsum += b[t];
        bmax = std::max(bmax, b[t]);
        const Exp cap_next = bsum - bmax;
        std::vector<Int> next(static_cast<std::size_t>(cap_next) + 1);
        for (Exp in = 0; in <= cap_next; ++in) {
            Int acc = 0;
            for (Exp ip = 0; ip <= std::min(cap, in); ++ip) {
                const Int& prev = row[static_cast<std::size_t>(ip)];
                if (prev == 0) continue;
                acc += prev * binomial(bsum_prev - ip, in - ip) * binomial(b[t] + ip, in);
            }
            next[static_cast<std::size_t>(in)] = acc;
        }
        row = std::move(next);
        cap = cap_next;
    }
    if (cap != top) throw std::logic_error("newcomb_row: range bookkeeping broke");
    return row;
}

Int newcomb(const NewcombQuery& q) {
    const Exp top = newcomb_max_k(q.b);
    if (q.k < 0 || q.k > top) return 0;
    return newcomb_row(q.b)[static_cast<std::size_t>(q.k)];
}

}  // namespace segre
