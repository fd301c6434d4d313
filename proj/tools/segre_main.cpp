// Command-line front end: exact arithmetic on series h(t)/(1-t)^d, their
// coefficientwise (Segre) and Veronese transforms, postulation numbers, degree
// bounds, regularity of products of graded Cohen-Macaulay modules, and Simon
// Newcomb numbers. Exit codes: 0 success, 2 malformed input, 3 hypothesis
// violation, 4 verification mismatch (always a bug, never bad input).

#include "segre/errors.hpp"
#include "segre/io.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cstddef>
#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

using namespace segre;
using nlohmann::json;

namespace {

struct Report {
    json doc = json::object();
    std::vector<std::pair<std::string, std::string>> lines;

    void field(const std::string& key, const std::string& text, const json& value) {
        lines.emplace_back(key, text);
        doc[key] = value;
    }
    void field(const std::string& key, const std::string& text) { field(key, text, text); }
    void number(const std::string& key, Exp value) {
        field(key, std::to_string(value), json(value));
    }
    void boolean(const std::string& key, bool value) {
        field(key, value ? "true" : "false", json(value));
    }
    // Series results share one shape: numerator/pole_order fields that feed
    // back into the series parser, plus the deterministic text form.
    void series(const RationalGF& a) {
        const json encoded = series_to_json(a);
        doc["numerator"] = encoded["numerator"];
        doc["pole_order"] = encoded["pole_order"];
        doc["text"] = series_to_text(a);
        lines.emplace_back("result", series_to_text(a));
    }
    void value_line(const std::string& text, const json& value) { field("value", text, value); }
};

void emit(const Report& report, const std::string& command, const std::string& format,
          double elapsed_ms) {
    if (format == "json") {
        json out = report.doc;
        out["command"] = command;
        out["elapsed_ms"] = elapsed_ms;
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << "command: " << command << "\n";
    for (const auto& [key, text] : report.lines) std::cout << key << ": " << text << "\n";
}

std::vector<Exp> parse_exp_list(const std::string& text, const char* what) {
    std::vector<Exp> out;
    if (text.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    std::size_t pos = 0;
    for (;;) {
        const std::size_t comma = text.find(',', pos);
        const std::string item =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        Exp value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc() || ptr != item.data() + item.size())
            throw std::invalid_argument(std::string(what) + ": \"" + item +
                                        "\" is not an integer");
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

RationalGF load_gf(const std::string& path) { return to_series(load_series(path)); }

std::vector<RationalGF> load_gfs(const std::vector<std::string>& paths) {
    std::vector<RationalGF> out;
    out.reserve(paths.size());
    for (const std::string& path : paths) out.push_back(load_gf(path));
    return out;
}

std::vector<GradedCMModule> load_modules(const std::vector<std::string>& paths) {
    std::vector<GradedCMModule> out;
    out.reserve(paths.size());
    for (const std::string& path : paths) out.push_back(to_module(load_series(path)));
    return out;
}

RationalGF closed_for_check(const RationalGF& a, const RationalGF& b) {
    RationalGF out = segre_closed(a, b);
#ifdef SEGRE_INJECT_FAULT
    // Test scaffolding: perturb the result so every cross-check must fail.
    LaurentPoly numerator = out.numerator();
    numerator.add_term(out.is_zero() ? 0 : out.degree() + 1, Rational(1));
    out = RationalGF(std::move(numerator), out.pole_order());
#endif
    return out;
}

int report_mismatch(Report& report, const std::string& expected_name, const std::string& expected,
                    const std::string& actual_name, const std::string& actual) {
    report.field("verification", "FAILED");
    report.field(expected_name, expected);
    report.field(actual_name, actual);
    return 4;
}

int cmd_normalize(const std::string& path, Report& report) {
    report.series(load_gf(path));
    report.field("verification", "skipped");
    return 0;
}

int cmd_expand(const std::string& path, Exp from, Exp to, Report& report) {
    const std::vector<Rational> coeffs = expand(load_gf(path), from, to);
    report.number("from", from);
    report.number("to", to);
    std::string text;
    json values = json::array();
    for (const Rational& c : coeffs) {
        if (!text.empty()) text += ", ";
        text += to_string(c);
        values.push_back(to_string(c));
    }
    report.field("coefficients", text, values);
    report.field("verification", "skipped");
    return 0;
}

int cmd_hvector(const std::string& coeffs_path, Exp start, Exp pole_order, Report& report) {
    const std::vector<Rational> coeffs = load_coefficients(coeffs_path);
    const auto rebuilt = hvector_from_window(coeffs, start, pole_order);
    if (!rebuilt)
        throw HypothesisError(
            "window too short: the final " + std::to_string(pole_order + 1) +
            " reconstructed h-values must vanish to certify the result; supply more coefficients");
    report.series(*rebuilt);
    report.field("verification", "skipped");
    return 0;
}

int cmd_segre(const std::string& path_a, const std::string& path_b, const std::string& method,
              Report& report) {
    const RationalGF a = load_gf(path_a);
    const RationalGF b = load_gf(path_b);
    if (method == "closed") {
        report.series(segre_closed(a, b));
        report.field("verification", "skipped");
        return 0;
    }
    if (method == "oracle") {
        report.series(segre_oracle(a, b));
        report.field("verification", "skipped");
        return 0;
    }
    const RationalGF closed = closed_for_check(a, b);
    const RationalGF oracle = segre_oracle(a, b);
    report.series(closed);
    if (closed == oracle) {
        report.field("verification", "passed");
        return 0;
    }
    return report_mismatch(report, "closed", series_to_text(closed), "oracle",
                           series_to_text(oracle));
}

int cmd_segre_multi(const std::vector<std::string>& paths, bool verify, Report& report) {
    const std::vector<RationalGF> series = load_gfs(paths);
    const RationalGF nested = segre_multi_hvector(series);
    report.series(nested);
    if (!verify) {
        report.field("verification", "skipped");
        return 0;
    }
    RationalGF closed = series[0];
    RationalGF oracle = series[0];
    for (std::size_t t = 1; t < series.size(); ++t) {
        closed = closed_for_check(closed, series[t]);
        oracle = segre_oracle(oracle, series[t]);
    }
    if (nested == closed && nested == oracle) {
        report.field("verification", "passed");
        return 0;
    }
    const RationalGF& other = nested == closed ? oracle : closed;
    return report_mismatch(report, "nested_sum", series_to_text(nested), "pairwise_fold",
                           series_to_text(other));
}

int cmd_monomial(Exp d1, Exp i, Exp d2, Exp j, bool verify, Report& report) {
    const RationalGF result = segre_monomial(d1, i, d2, j);
    report.series(result);
    if (!verify) {
        report.field("verification", "skipped");
        return 0;
    }
    const RationalGF oracle =
        segre_oracle(RationalGF(LaurentPoly::term(Rational(1), i), d1),
                     RationalGF(LaurentPoly::term(Rational(1), j), d2));
    if (result == oracle) {
        report.field("verification", "passed");
        return 0;
    }
    return report_mismatch(report, "closed", series_to_text(result), "oracle",
                           series_to_text(oracle));
}

int cmd_veronese(const std::string& path, Exp n, bool verify, Report& report) {
    const RationalGF a = load_gf(path);
    const RationalGF v = veronese(a, n);
    report.series(v);
    if (!verify) {
        report.field("verification", "skipped");
        return 0;
    }
    const Exp top = (v.is_zero() ? 0 : v.degree()) + v.pole_order() + 4;
    const std::vector<Rational> picked = expand(v, 0, top);
    for (Exp l = 0; l <= top; ++l) {
        const Rational original = coefficient(a, n * l);
        if (picked[static_cast<std::size_t>(l)] != original)
            return report_mismatch(report, "transformed",
                                   to_string(picked[static_cast<std::size_t>(l)]) + " at index " +
                                       std::to_string(l),
                                   "original", to_string(original) + " at index " +
                                                   std::to_string(n * l));
    }
    report.field("verification", "passed");
    return 0;
}

int cmd_postulation(const std::string& path, Report& report) {
    report.number("value", postulation_number(load_gf(path)));
    report.field("verification", "skipped");
    return 0;
}

int cmd_hilbert_poly(const std::string& path, Report& report) {
    const HilbertPolynomial phi = hilbert_polynomial(load_gf(path));
    json values = json::array();
    for (const Rational& c : phi.coefficients()) values.push_back(to_string(c));
    report.field("result", hilbert_poly_to_text(phi), hilbert_poly_to_text(phi));
    report.doc["coefficients"] = values;
    report.field("verification", "skipped");
    return 0;
}

int cmd_bounds(const std::vector<std::string>& paths, Report& report) {
    const std::vector<RationalGF> series = load_gfs(paths);
    const BoundsReport bounds = series.size() == 2
                                    ? segre_degree_bounds(series[0], series[1])
                                    : multi_degree_bounds(series);
    report.number("upper_max", bounds.upper_max);
    report.number("upper_min", bounds.upper_min);
    report.boolean("star_star_holds", bounds.star_star_holds);
    report.boolean("nonneg_inputs", bounds.nonneg_inputs);
    report.number("actual_degree", bounds.actual_degree);
    report.boolean("equality_attained", bounds.equality_attained);
    // segre_degree_bounds / multi_degree_bounds cross-check internally.
    report.field("verification", "passed");
    return 0;
}

int cmd_regularity(const std::vector<std::string>& paths, const std::string& veronese_list,
                   bool verify, Report& report) {
    const std::vector<GradedCMModule> modules = load_modules(paths);
    bool has_zero_dim = false;
    for (const GradedCMModule& m : modules) has_zero_dim = has_zero_dim || m.dim() == 0;
    if (has_zero_dim) {
        if (!veronese_list.empty())
            throw std::invalid_argument(
                "--veronese does not apply when a zero-dimensional module is present");
        if (verify) {
            const ZeroDimReport zero = zero_dim_segre_regularity_verified(modules);
            report.number("value", zero.regularity);
            report.boolean("degree_equality", zero.degree_equality);
            report.field("verification", "passed");
        } else {
            report.number("value", zero_dim_segre_regularity(modules));
            report.field("verification", "skipped");
        }
        return 0;
    }
    Exp value = 0;
    if (!veronese_list.empty()) {
        const std::vector<Exp> indices = parse_exp_list(veronese_list, "--veronese");
        value = segre_veronese_regularity(modules, indices, verify);
    } else {
        value = segre_regularity_cm(modules, verify);
    }
    report.number("value", value);
    report.field("verification", verify ? "passed" : "skipped");
    return 0;
}

int cmd_newcomb(const std::string& b_list, bool k_given, Exp k, bool verify, Report& report) {
    const std::vector<Exp> b = parse_exp_list(b_list, "--b");
    const std::vector<Int> row = newcomb_row(b);
    const Exp top = newcomb_max_k(b);
    report.number("k_max", top);
    if (k_given) {
        const Int value = (k < 0 || k > top) ? Int(0) : row[static_cast<std::size_t>(k)];
        report.number("k", k);
        report.value_line(value.str(), value.str());
    } else {
        json values = json::array();
        for (Exp idx = 0; idx <= top; ++idx) {
            const std::string text = row[static_cast<std::size_t>(idx)].str();
            report.field("A[" + std::to_string(idx) + "]", text, text);
            values.push_back(text);
        }
        report.doc["values"] = values;
    }
    if (!verify) {
        report.field("verification", "skipped");
        return 0;
    }
    RationalGF product = RationalGF(LaurentPoly::constant(Rational(1)), b[0] + 1);
    for (std::size_t t = 1; t < b.size(); ++t)
        product = segre_oracle(product, RationalGF(LaurentPoly::constant(Rational(1)), b[t] + 1));
    for (Exp idx = 0; idx <= top; ++idx)
        if (Rational(row[static_cast<std::size_t>(idx)]) != product.numerator().coeff(idx))
            return report_mismatch(report, "nested_sum", row[static_cast<std::size_t>(idx)].str(),
                                   "product_numerator",
                                   to_string(product.numerator().coeff(idx)) + " at k = " +
                                       std::to_string(idx));
    report.field("verification", "passed");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact arithmetic for rational series h(t)/(1-t)^d: coefficientwise (Segre) and\n"
        "Veronese transforms, postulation numbers, degree bounds, regularity of Segre\n"
        "products of graded Cohen-Macaulay modules, Simon Newcomb numbers.\n"
        "Exit codes: 0 ok, 2 malformed input, 3 hypothesis violation, 4 verification mismatch."};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format (text or json)")
        ->check(CLI::IsMember({"text", "json"}));

    std::function<int(Report&)> run;
    std::string command;

    std::string normalize_path;
    CLI::App* normalize = app.add_subcommand(
        "normalize", "Cancel all 1-t factors and print the canonical form");
    normalize->add_option("series", normalize_path, "series file")->required();
    normalize->callback([&] {
        command = "normalize";
        run = [&](Report& r) { return cmd_normalize(normalize_path, r); };
    });

    std::string expand_path;
    Exp expand_from = 0;
    Exp expand_to = 0;
    CLI::App* expand_cmd =
        app.add_subcommand("expand", "Print the coefficients a_from .. a_to");
    expand_cmd->add_option("series", expand_path, "series file")->required();
    expand_cmd->add_option("--from", expand_from, "first index")->required();
    expand_cmd->add_option("--to", expand_to, "last index")->required();
    expand_cmd->callback([&] {
        command = "expand";
        run = [&](Report& r) { return cmd_expand(expand_path, expand_from, expand_to, r); };
    });

    std::string hvector_coeffs;
    Exp hvector_start = 0;
    Exp hvector_pole = 0;
    CLI::App* hvector = app.add_subcommand(
        "hvector", "Reconstruct the canonical series from a coefficient window");
    hvector->add_option("--coeffs", hvector_coeffs, "JSON file with a coefficients array")
        ->required();
    hvector->add_option("--start", hvector_start, "index of the first coefficient (default 0)");
    hvector->add_option("--pole-order", hvector_pole, "pole order of the series")->required();
    hvector->callback([&] {
        command = "hvector";
        run = [&](Report& r) { return cmd_hvector(hvector_coeffs, hvector_start, hvector_pole, r); };
    });

    std::vector<std::string> segre_paths;
    std::string segre_method = "both";
    CLI::App* segre_cmd = app.add_subcommand(
        "segre", "Coefficientwise product of two series");
    segre_cmd->add_option("series", segre_paths, "two series files")->required()->expected(2);
    segre_cmd
        ->add_option("--method", segre_method,
                     "closed, oracle, or both (default: both, cross-checked)")
        ->check(CLI::IsMember({"closed", "oracle", "both"}));
    segre_cmd->callback([&] {
        command = "segre";
        run = [&](Report& r) { return cmd_segre(segre_paths[0], segre_paths[1], segre_method, r); };
    });

    std::vector<std::string> multi_paths;
    bool multi_verify = false;
    CLI::App* multi = app.add_subcommand(
        "segre-multi", "s-fold coefficientwise product via the one-shot nested sum; factors "
                       "must satisfy 0 <= ord <= deg < pole order");
    multi->add_option("series", multi_paths, "two or more series files")->required()->expected(2, -1);
    multi->add_flag("--verify", multi_verify, "cross-check against pairwise folds");
    multi->callback([&] {
        command = "segre-multi";
        run = [&](Report& r) { return cmd_segre_multi(multi_paths, multi_verify, r); };
    });

    Exp mono_d1 = 0;
    Exp mono_i = 0;
    Exp mono_d2 = 0;
    Exp mono_j = 0;
    bool mono_verify = false;
    CLI::App* monomial = app.add_subcommand(
        "monomial", "Product of t^i/(1-t)^d1 and t^j/(1-t)^d2 in closed form");
    monomial->add_option("--d1", mono_d1, "first pole order (>= 1)")->required();
    monomial->add_option("--i", mono_i, "first shift")->required();
    monomial->add_option("--d2", mono_d2, "second pole order (>= 1)")->required();
    monomial->add_option("--j", mono_j, "second shift")->required();
    monomial->add_flag("--verify", mono_verify, "cross-check against brute-force expansion");
    monomial->callback([&] {
        command = "monomial";
        run = [&](Report& r) {
            return cmd_monomial(mono_d1, mono_i, mono_d2, mono_j, mono_verify, r);
        };
    });

    std::string veronese_path;
    Exp veronese_n = 1;
    bool veronese_verify = false;
    CLI::App* veronese_cmd = app.add_subcommand(
        "veronese", "Keep every n-th coefficient: result_l = a_{n*l}");
    veronese_cmd->add_option("series", veronese_path, "series file")->required();
    veronese_cmd->add_option("--n", veronese_n, "Veronese index (>= 1)")->required();
    veronese_cmd->add_flag("--verify", veronese_verify, "re-check coefficients one by one");
    veronese_cmd->callback([&] {
        command = "veronese";
        run = [&](Report& r) { return cmd_veronese(veronese_path, veronese_n, veronese_verify, r); };
    });

    std::string postulation_path;
    CLI::App* postulation = app.add_subcommand(
        "postulation", "Last index where the coefficient differs from the Hilbert polynomial");
    postulation->add_option("series", postulation_path, "series file")->required();
    postulation->callback([&] {
        command = "postulation";
        run = [&](Report& r) { return cmd_postulation(postulation_path, r); };
    });

    std::string hilbert_path;
    CLI::App* hilbert = app.add_subcommand(
        "hilbert-poly", "Polynomial giving the coefficients past the postulation number");
    hilbert->add_option("series", hilbert_path, "series file")->required();
    hilbert->callback([&] {
        command = "hilbert-poly";
        run = [&](Report& r) { return cmd_hilbert_poly(hilbert_path, r); };
    });

    std::vector<std::string> bounds_paths;
    CLI::App* bounds = app.add_subcommand(
        "bounds", "Degree bounds for the product numerator, with the sharper bound under the\n"
                  "pair condition (**); admissibility reads 0 <= ord <= deg < pole order");
    bounds->add_option("series", bounds_paths, "two or more series files")->required()->expected(2, -1);
    bounds->callback([&] {
        command = "bounds";
        run = [&](Report& r) { return cmd_bounds(bounds_paths, r); };
    });

    std::vector<std::string> reg_paths;
    std::string reg_veronese;
    bool reg_verify = false;
    CLI::App* regularity_cmd = app.add_subcommand(
        "regularity", "Castelnuovo-Mumford regularity of a Segre product of declared-CM modules\n"
                      "(reg < dim per factor; zero-dimensional factors switch to the minimum rule)");
    regularity_cmd->add_option("modules", reg_paths, "module files (dim + cm flags)")
        ->required()
        ->expected(1, -1);
    regularity_cmd->add_option("--veronese", reg_veronese,
                               "comma-separated Veronese indices, one per module");
    regularity_cmd->add_flag("--verify", reg_verify, "recompute via the product numerator");
    regularity_cmd->callback([&] {
        command = "regularity";
        run = [&](Report& r) { return cmd_regularity(reg_paths, reg_veronese, reg_verify, r); };
    });

    std::string newcomb_b;
    Exp newcomb_k = 0;
    bool newcomb_verify = false;
    CLI::App* newcomb_cmd = app.add_subcommand(
        "newcomb", "Simon Newcomb numbers A([b], k) for a composition b");
    newcomb_cmd->add_option("--b", newcomb_b, "comma-separated composition, entries >= 0")
        ->required();
    CLI::Option* k_option = newcomb_cmd->add_option("--k", newcomb_k, "single k (default: full row)");
    newcomb_cmd->add_flag("--verify", newcomb_verify, "cross-check against brute-force expansion");
    newcomb_cmd->callback([&] {
        command = "newcomb";
        const bool k_given = k_option->count() > 0;
        run = [&, k_given](Report& r) {
            return cmd_newcomb(newcomb_b, k_given, newcomb_k, newcomb_verify, r);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Report report;
    int exit_code = 0;
    const auto started = std::chrono::steady_clock::now();
    try {
        exit_code = run(report);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 3;
    } catch (const VerificationError& e) {
        std::cerr << "verification mismatch: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    const auto finished = std::chrono::steady_clock::now();
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(finished - started).count();
    emit(report, command, format, elapsed_ms);
    return exit_code;
}
