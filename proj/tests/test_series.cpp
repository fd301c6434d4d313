#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segre/errors.hpp"
#include "segre/series.hpp"

#include "test_support.hpp"

#include <stdexcept>
#include <vector>

using namespace segre;
using testsupport::gf;
using testsupport::naive_expand;
using testsupport::naive_expand_raw;
using testsupport::poly;
using testsupport::random_series;
using testsupport::Rng;

TEST_CASE("construction cancels all 1-t factors") {
    const RationalGF a = gf({{0, 1}, {2, -1}}, 3);
    CHECK(a.numerator() == poly({{0, 1}, {1, 1}}));
    CHECK(a.pole_order() == 2);
    const RationalGF b = gf({{0, 1}, {1, 1}}, 2);
    CHECK(b == a);
    CHECK(gf({}, 5).is_zero());
    CHECK(gf({}, 5).pole_order() == 0);
    CHECK_THROWS_AS(RationalGF(poly({{0, 1}}), -1), std::invalid_argument);
}

TEST_CASE("normalization is idempotent and preserves the coefficient stream") {
    Rng rng(11);
    for (int round = 0; round < 60; ++round) {
        LaurentPoly raw;
        const Exp terms = rng.pick(1, 5);
        for (Exp t = 0; t < terms; ++t) raw.add_term(rng.pick(-3, 7), rng.rational());
        const Exp pole = rng.pick(0, 5);
        const RationalGF a(raw, pole);
        CHECK(RationalGF(a.numerator(), a.pole_order()) == a);
        if (a.is_zero()) continue;
        // Canonical: either no pole or (1-t) does not divide the numerator.
        if (a.pole_order() > 0) CHECK(eval_at_one(a.numerator()) != 0);
        const Exp from = raw.is_zero() ? 0 : raw.order() - 2;
        const Exp to = from + 14;
        CHECK(expand(a, from, to) == naive_expand_raw(raw, pole, from, to));
    }
}

TEST_CASE("expand fixed examples") {
    const std::vector<Rational> p1{Rational(1), Rational(2), Rational(3), Rational(4), Rational(5)};
    CHECK(expand(gf({{0, 1}}, 2), 0, 4) == p1);
    const std::vector<Rational> tee{Rational(0), Rational(0), Rational(3), Rational(4), Rational(5)};
    CHECK(expand(gf({{2, 3}, {3, -2}}, 2), 0, 4) == tee);
    CHECK(expand(RationalGF{}, -2, 2) == std::vector<Rational>(5, Rational(0)));
    CHECK_THROWS_AS(expand(gf({{0, 1}}, 1), 3, 2), std::invalid_argument);
}

TEST_CASE("coefficient fixed examples") {
    CHECK(coefficient(gf({{0, 1}, {1, 1}}, 3), 3) == 16);
    CHECK(coefficient(gf({{5, 1}}, 1), 4) == 0);
    CHECK(coefficient(gf({{5, 1}}, 1), 11) == 1);
    CHECK(coefficient(gf({{0, 1}}, 3), 4) == 15);
    CHECK(coefficient(gf({{0, 1}, {1, 1}}, 0), 1) == 1);
    CHECK(coefficient(gf({{0, 1}, {1, 1}}, 0), 2) == 0);
    CHECK(coefficient(RationalGF{}, 0) == 0);
}

TEST_CASE("coefficient agrees with expand everywhere") {
    Rng rng(12);
    for (int round = 0; round < 40; ++round) {
        const RationalGF a = random_series(rng);
        const Exp from = a.is_zero() ? -2 : a.order() - 2;
        const std::vector<Rational> window = expand(a, from, from + 16);
        for (Exp k = from; k <= from + 16; ++k)
            CHECK(coefficient(a, k) == window[static_cast<std::size_t>(k - from)]);
    }
}

TEST_CASE("hvector_from_window fixed examples") {
    const std::vector<Rational> squares{Rational(1), Rational(4), Rational(9), Rational(16),
                                        Rational(25), Rational(36), Rational(49)};
    const auto rebuilt = hvector_from_window(squares, 0, 3);
    REQUIRE(rebuilt.has_value());
    CHECK(*rebuilt == gf({{0, 1}, {1, 1}}, 3));
    const std::vector<Rational> shorter{Rational(1), Rational(4), Rational(9)};
    CHECK_FALSE(hvector_from_window(shorter, 0, 3).has_value());
    const std::vector<Rational> naturals{Rational(1), Rational(2), Rational(3), Rational(4),
                                         Rational(5)};
    const auto p1 = hvector_from_window(naturals, 0, 2);
    REQUIRE(p1.has_value());
    CHECK(*p1 == gf({{0, 1}}, 2));
}

TEST_CASE("hvector_from_window inverts expand") {
    Rng rng(13);
    for (int round = 0; round < 60; ++round) {
        RationalGF a = random_series(rng);
        if (a.is_zero()) continue;
        const Exp lo = a.order();
        const Exp hi = a.degree() + a.pole_order() + 1;
        const auto rebuilt = hvector_from_window(expand(a, lo, hi), lo, a.pole_order());
        REQUIRE(rebuilt.has_value());
        CHECK(*rebuilt == a);
    }
}

TEST_CASE("hvector_from_window accepts windows starting below the support") {
    const RationalGF a = gf({{2, 3}, {3, -2}}, 2);
    const auto rebuilt = hvector_from_window(expand(a, 0, 8), 0, 2);
    REQUIRE(rebuilt.has_value());
    CHECK(*rebuilt == a);
}

TEST_CASE("hilbert polynomial fixed examples") {
    const HilbertPolynomial line = hilbert_polynomial(gf({{0, 1}}, 2));
    CHECK(line.coefficients() == std::vector<Rational>{Rational(1), Rational(1)});
    const HilbertPolynomial square = hilbert_polynomial(gf({{0, 1}, {1, 1}}, 3));
    CHECK(square.coefficients() == std::vector<Rational>{Rational(1), Rational(2), Rational(1)});
    CHECK(hilbert_polynomial(gf({{0, 1}, {1, 1}}, 0)).is_zero());
    CHECK(hilbert_polynomial(RationalGF{}).is_zero());
}

TEST_CASE("hilbert polynomial matches a Lagrange fit through the tail") {
    // Fit a degree-2 polynomial through the stable coefficients (k+1)^2 at
    // k = 0, 1, 2 and compare against the rest of the stream.
    const RationalGF a = gf({{0, 1}, {1, 1}}, 3);
    const HilbertPolynomial phi = hilbert_polynomial(a);
    auto fit = [](const std::vector<std::pair<Exp, Rational>>& pts, const Int& x) {
        Rational acc = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            Rational term = pts[i].second;
            for (std::size_t j = 0; j < pts.size(); ++j) {
                if (i == j) continue;
                term *= Rational(x - pts[j].first) / Rational(pts[i].first - pts[j].first);
            }
            acc += term;
        }
        return acc;
    };
    const std::vector<std::pair<Exp, Rational>> pts{
        {0, coefficient(a, 0)}, {1, coefficient(a, 1)}, {2, coefficient(a, 2)}};
    for (Exp k = 3; k <= 8; ++k) {
        CHECK(fit(pts, Int(k)) == coefficient(a, k));
        CHECK(phi(Int(k)) == coefficient(a, k));
    }
}

TEST_CASE("hilbert polynomial degree and leading coefficient") {
    Rng rng(14);
    for (int round = 0; round < 40; ++round) {
        const RationalGF a = random_series(rng);
        if (a.is_zero() || a.pole_order() == 0) continue;
        const HilbertPolynomial phi = hilbert_polynomial(a);
        const Exp b = a.pole_order() - 1;
        REQUIRE_FALSE(phi.is_zero());
        CHECK(phi.degree() == b);
        Int bfact = 1;
        for (Exp j = 2; j <= b; ++j) bfact *= j;
        CHECK(phi.coefficients().back() == eval_at_one(a.numerator()) / Rational(bfact));
    }
}

TEST_CASE("postulation number fixed examples") {
    CHECK(postulation_number(gf({{2, 3}, {3, -2}}, 2)) == 1);
    CHECK(postulation_number(gf({{0, 1}}, 2)) == -2);
    CHECK(postulation_number(gf({{0, 1}, {1, 1}}, 0)) == 1);
    CHECK_THROWS_AS(postulation_number(RationalGF{}), HypothesisError);
}

TEST_CASE("postulation number is the last disagreement with the hilbert polynomial") {
    Rng rng(15);
    for (int round = 0; round < 50; ++round) {
        const RationalGF a = random_series(rng);
        if (a.is_zero()) continue;
        const Exp beta = postulation_number(a);
        const HilbertPolynomial phi = hilbert_polynomial(a);
        CHECK(coefficient(a, beta) != phi(Int(beta)));
        for (Exp n = beta + 1; n <= beta + 20; ++n) CHECK(coefficient(a, n) == phi(Int(n)));
    }
}

TEST_CASE("gf_add and gf_scale") {
    CHECK(gf_add(gf({{0, 1}}, 1), gf({{1, 1}}, 1)) == gf({{0, 1}, {1, 1}}, 1));
    CHECK(gf_add(gf({{0, 1}}, 2), gf_scale(Rational(-1), gf({{0, 1}}, 2))).is_zero());
    CHECK(gf_scale(Rational(0), gf({{0, 1}}, 3)).is_zero());
    CHECK(gf_scale(Rational(2, 3), gf({{0, 3}}, 1)) == gf({{0, 2}}, 1));
    Rng rng(16);
    for (int round = 0; round < 40; ++round) {
        const RationalGF a = random_series(rng);
        const RationalGF b = random_series(rng);
        const Rational c = rng.rational();
        const RationalGF sum = gf_add(a, b);
        const std::vector<Rational> wa = expand(a, -5, 15);
        const std::vector<Rational> wb = expand(b, -5, 15);
        const std::vector<Rational> ws = expand(sum, -5, 15);
        const std::vector<Rational> wc = expand(gf_scale(c, a), -5, 15);
        for (std::size_t u = 0; u < wa.size(); ++u) {
            CHECK(ws[u] == wa[u] + wb[u]);
            CHECK(wc[u] == c * wa[u]);
        }
    }
}
