#include "segre/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace segre {

namespace {

Exp integer_field(const nlohmann::json& value, const char* name) {
    if (!value.is_number_integer())
        throw ParseError(std::string(name) + " must be an integer");
    return value.get<Exp>();
}

Rational coefficient_field(const nlohmann::json& value) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<Exp>());
    throw ParseError("coefficients must be rational strings like \"3\" or \"-2/5\"");
}

nlohmann::json parse_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace

SeriesFile parse_series(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("series document must be a JSON object");
    if (!doc.contains("numerator")) throw ParseError("missing field: numerator");
    if (!doc.contains("pole_order")) throw ParseError("missing field: pole_order");
    const nlohmann::json& numerator = doc["numerator"];
    if (!numerator.is_array())
        throw ParseError("numerator must be an array of [exponent, coefficient] pairs");
    SeriesFile file;
    std::set<Exp> seen;
    for (const nlohmann::json& entry : numerator) {
        if (!entry.is_array() || entry.size() != 2)
            throw ParseError("numerator entries must be [exponent, coefficient] pairs");
        const Exp e = integer_field(entry[0], "exponent");
        const Rational c = coefficient_field(entry[1]);
        if (c == 0)
            throw ParseError("zero coefficient at exponent " + std::to_string(e));
        if (!seen.insert(e).second)
            throw ParseError("duplicate exponent " + std::to_string(e));
        file.numerator.add_term(e, c);
    }
    file.pole_order = integer_field(doc["pole_order"], "pole_order");
    if (file.pole_order < 0) throw ParseError("pole_order must be >= 0");
    if (doc.contains("dim")) {
        const Exp dim = integer_field(doc["dim"], "dim");
        if (dim < 0) throw ParseError("dim must be >= 0");
        file.dim = dim;
    }
    if (doc.contains("cm")) {
        if (!doc["cm"].is_boolean()) throw ParseError("cm must be a boolean");
        file.cm = doc["cm"].get<bool>();
    }
    return file;
}

SeriesFile load_series(const std::string& path) { return parse_series(parse_document(path)); }

std::vector<Rational> load_coefficients(const std::string& path) {
    const nlohmann::json doc = parse_document(path);
    if (!doc.is_object() || !doc.contains("coefficients"))
        throw ParseError(path + ": expected an object with a coefficients array");
    const nlohmann::json& list = doc["coefficients"];
    if (!list.is_array()) throw ParseError(path + ": coefficients must be an array");
    std::vector<Rational> out;
    out.reserve(list.size());
    for (const nlohmann::json& entry : list) out.push_back(coefficient_field(entry));
    return out;
}

RationalGF to_series(const SeriesFile& file) {
    return RationalGF(file.numerator, file.pole_order);
}

GradedCMModule to_module(const SeriesFile& file) {
    RationalGF gf = to_series(file);
    if (gf.is_zero()) throw ParseError("module files require a nonzero series");
    const Exp dim = file.dim.value_or(gf.pole_order());
    if (dim != gf.pole_order())
        throw ParseError("dim (" + std::to_string(dim) + ") does not match the canonical pole order (" +
                         std::to_string(gf.pole_order()) + ")");
    return GradedCMModule(std::move(gf), dim, file.cm.value_or(false));
}

nlohmann::json series_to_json(const RationalGF& a) {
    nlohmann::json numerator = nlohmann::json::array();
    for (const auto& [e, c] : a.numerator().terms())
        numerator.push_back(nlohmann::json::array({e, to_string(c)}));
    return {{"numerator", std::move(numerator)}, {"pole_order", a.pole_order()}};
}

std::string poly_to_text(const LaurentPoly& p, const char* var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const Rational magnitude = negative ? Rational(-c) : c;
        if (e == 0) {
            out << to_string(magnitude);
            continue;
        }
        if (magnitude != 1) out << to_string(magnitude) << '*';
        out << var;
        if (e != 1) out << '^' << e;
    }
    return out.str();
}

std::string series_to_text(const RationalGF& a) {
    if (a.is_zero()) return "0";
    if (a.pole_order() == 0) return poly_to_text(a.numerator());
    std::string out = "(" + poly_to_text(a.numerator()) + ") / (1-t)";
    if (a.pole_order() > 1) out += "^" + std::to_string(a.pole_order());
    return out;
}

std::string hilbert_poly_to_text(const HilbertPolynomial& p) {
    LaurentPoly asPoly;
    const auto& coeffs = p.coefficients();
    for (std::size_t u = 0; u < coeffs.size(); ++u)
        asPoly.add_term(static_cast<Exp>(u), coeffs[u]);
    return poly_to_text(asPoly, "n");
}

}  // namespace segre
