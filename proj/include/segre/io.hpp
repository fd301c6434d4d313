#pragma once

#include "segre/cm.hpp"
#include "segre/errors.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace segre {

// On-disk description of a series or module. See docs/series-format.md.
struct SeriesFile {
    LaurentPoly numerator;
    Exp pole_order = 0;
    std::optional<Exp> dim;
    std::optional<bool> cm;
};

// Validates and reads a series document. Unknown fields are ignored, so any
// JSON report emitted by the CLI that carries numerator/pole_order parses
// back. Throws ParseError on any violation.
SeriesFile parse_series(const nlohmann::json& doc);
SeriesFile load_series(const std::string& path);

// Reads {"coefficients": ["1", "4", ...]} (unknown fields ignored).
std::vector<Rational> load_coefficients(const std::string& path);

RationalGF to_series(const SeriesFile& file);
// Builds the module view; when dim is absent it defaults to the canonical
// pole order, and when present it must match (ParseError otherwise). cm
// defaults to false.
GradedCMModule to_module(const SeriesFile& file);

nlohmann::json series_to_json(const RationalGF& a);

// Deterministic text forms. Terms appear in ascending exponent order, joined
// by " + " / " - "; unit coefficients drop the "1*"; exponent 0 drops the
// variable and exponent 1 drops the "^1". A nonzero pole order appends
// " / (1-t)" or " / (1-t)^d". The zero series renders as "0".
std::string poly_to_text(const LaurentPoly& p, const char* var = "t");
std::string series_to_text(const RationalGF& a);
std::string hilbert_poly_to_text(const HilbertPolynomial& p);

}  // namespace segre
