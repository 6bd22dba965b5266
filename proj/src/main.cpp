// hermite: evaluate Plancherel-Rotach expansions of H_n(sqrt(2n+1) x) with
// certified error bounds, dump the exact rational coefficient families, and
// verify computed values against the published reference tables.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain error.

#include "hermite/coeffs.hpp"
#include "hermite/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using nlohmann::ordered_json;

namespace {

using namespace hermite;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    return Format::Text;
}

Case parse_case(const std::string& s) {
    if (s == "outer") return Case::Outer;
    if (s == "oscillatory") return Case::Oscillatory;
    return Case::Turning;
}

// Angles accept exact symbolic fractions of pi -- "pi", "pi/6", "3*pi/8",
// "3pi/8" -- or a plain decimal literal.
BigReal parse_angle(const std::string& text, mpfr_prec_t prec) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    const size_t pos = s.find("pi");
    if (pos == std::string::npos) {
        try {
            return BigReal(s.c_str(), prec);
        } catch (const domain_error&) {
            throw usage_error("cannot parse angle '" + text + "'");
        }
    }
    long num = 1, den = 1;
    try {
        std::string head = s.substr(0, pos);
        if (!head.empty() && head.back() == '*') head.pop_back();
        if (!head.empty()) num = std::stol(head);
        std::string tail = s.substr(pos + 2);
        if (!tail.empty()) {
            if (tail.front() != '/') throw usage_error("cannot parse angle '" + text + "'");
            den = std::stol(tail.substr(1));
        }
    } catch (const std::logic_error&) {
        throw usage_error("cannot parse angle '" + text + "'");
    }
    if (den == 0) throw usage_error("angle denominator must be nonzero");
    return const_pi(prec) * num / den;
}

BigReal parse_decimal(const std::string& text, const char* flag, mpfr_prec_t prec) {
    try {
        return BigReal(text.c_str(), prec);
    } catch (const domain_error&) {
        throw usage_error(std::string("cannot parse ") + flag + " '" + text + "'");
    }
}

struct EvalArgs {
    std::string regime;
    long n = 0;
    std::string beta, alpha;
    long p = 0;
};

std::string log10_string(const BigReal& natural_log, mpfr_prec_t prec) {
    if (natural_log.is_inf()) return "-inf";
    return (natural_log / ln(BigReal(10L, prec))).str(17);
}

int run_eval(const EvalArgs& args, Format format, mpfr_prec_t prec) {
    const Case regime = parse_case(args.regime);
    std::string param_label = "-";
    ExpansionRequest req = ExpansionRequest::turning(0, 3, prec);
    switch (regime) {
        case Case::Outer:
            if (args.beta.empty()) throw usage_error("--case outer requires --beta");
            param_label = args.beta;
            req = ExpansionRequest::outer(args.n, parse_decimal(args.beta, "--beta", prec),
                                          args.p, prec);
            break;
        case Case::Oscillatory:
            if (args.alpha.empty()) throw usage_error("--case oscillatory requires --alpha");
            param_label = args.alpha;
            req = ExpansionRequest::oscillatory(args.n, parse_angle(args.alpha, prec),
                                                args.p, prec);
            break;
        case Case::Turning:
            req = ExpansionRequest::turning(args.n, args.p, prec);
            break;
    }

    const CertifiedValue value = evaluate(req);
    const int sign = value.partial_sum.sign();
    const std::string log10_abs = log10_string(value.approximation_log, prec);

    switch (format) {
        case Format::Json: {
            ordered_json out{{"case", case_name(regime)},
                             {"n", req.n},
                             {"param", param_label},
                             {"p", req.p},
                             {"precision", static_cast<long>(prec)},
                             {"sign", sign},
                             {"log10_abs", log10_abs},
                             {"partial_sum", value.partial_sum.str(30)},
                             {"bound", value.bound.str(17)},
                             {"c_tilde", value.c_tilde.str(17)},
                             {"c_next", value.c_next.str(17)},
                             {"weak_bound", value.weak_bound}};
            if (value.theta0) out["theta0"] = value.theta0->str(17);
            std::cout << out.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            std::cout << "case,n,param,p,sign,log10_abs,partial_sum,bound\n"
                      << case_name(regime) << ',' << req.n << ',' << param_label << ','
                      << req.p << ',' << sign << ',' << log10_abs << ','
                      << value.partial_sum.str(30) << ',' << value.bound.str(17) << '\n';
            break;
        case Format::Text:
            std::cout << case_name(regime) << " expansion of H_n(sqrt(N) x), n=" << req.n
                      << ", N=" << 2 * req.n + 1 << ", p=" << req.p << ", precision=" << prec
                      << " bits\n"
                      << "  sign:        " << (sign > 0 ? "+1" : sign < 0 ? "-1" : "0") << '\n'
                      << "  log10|H|:    " << log10_abs << '\n'
                      << "  partial_sum: " << value.partial_sum.str(30) << '\n'
                      << "  error bound: " << value.bound.str(17) << '\n'
                      << "  c_tilde:     " << value.c_tilde.str(17) << '\n'
                      << "  c_next:      " << value.c_next.str(17) << '\n'
                      << "  weak_bound:  " << (value.weak_bound ? "yes" : "no") << '\n';
            break;
    }
    return 0;
}

std::string rational_string(const mpq_class& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

std::string poly_string(const RationalPoly& poly) {
    if (poly.is_zero()) return "0";
    std::string out;
    const auto& c = poly.coefficients();
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        mpq_class coeff = c[k];
        if (out.empty()) {
            if (coeff < 0) out += "-";
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        mpq_class mag = abs(coeff);
        const bool unit = mag == 1 && k > 0;
        if (!unit) out += rational_string(mag);
        if (k >= 1) {
            if (!unit) out += "*";
            out += "t";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

int run_coeffs(const std::string& family, long max, Format format) {
    if (max < 0) throw usage_error("--max must be nonnegative");
    if (max > 64) throw order_error("coefficient order cap is 64");

    // collect (j, coefficient list) pairs; D_j is a single rational
    std::vector<std::pair<long, std::vector<mpq_class>>> dump;
    if (family == "A") {
        for (long j = 0; j <= max; ++j) dump.emplace_back(j, a_poly(j).coefficients());
    } else if (family == "P") {
        std::vector<RationalPoly> ps = p_polys(max);
        for (long j = 0; j <= max; ++j) dump.emplace_back(j, ps[j].coefficients());
    } else if (family == "Q") {
        std::vector<RationalPoly> qs = q_polys(max);
        for (long j = 1; j <= max; ++j) dump.emplace_back(j, qs[j].coefficients());
    } else {
        for (long j = 1; j <= max; ++j) {
            dump.emplace_back(j, std::vector<mpq_class>{d_coeff(j).value});
        }
    }

    switch (format) {
        case Format::Json: {
            ordered_json out = ordered_json::array();
            for (const auto& [j, coeffs] : dump) {
                ordered_json pairs = ordered_json::array();
                for (const mpq_class& c : coeffs) {
                    pairs.push_back({c.get_num().get_str(), c.get_den().get_str()});
                }
                out.push_back(ordered_json{
                    {"family", family}, {"j", j}, {"coefficients", std::move(pairs)}});
            }
            std::cout << out.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            std::cout << "family,j,k,num,den\n";
            for (const auto& [j, coeffs] : dump) {
                for (size_t k = 0; k < coeffs.size(); ++k) {
                    std::cout << family << ',' << j << ',' << k << ','
                              << coeffs[k].get_num().get_str() << ','
                              << coeffs[k].get_den().get_str() << '\n';
                }
            }
            break;
        case Format::Text:
            for (const auto& [j, coeffs] : dump) {
                if (family == "D") {
                    std::cout << "D_" << j << " = " << rational_string(coeffs[0]) << '\n';
                } else {
                    std::cout << family << '_' << j << "(t) = "
                              << poly_string(RationalPoly(coeffs)) << '\n';
                }
            }
            break;
    }
    return 0;
}

struct VerifyArgs {
    std::string tables;
    std::string sweep;
    std::string regime;
    std::string beta, alpha;
    long p = -1;
};

std::vector<int> parse_table_ids(const std::string& arg) {
    if (arg == "all") return {1, 2, 3};
    std::vector<int> ids;
    std::string item;
    std::istringstream stream(arg);
    while (std::getline(stream, item, ',')) {
        if (item == "1" || item == "2" || item == "3") {
            ids.push_back(item[0] - '0');
        } else {
            throw usage_error("--tables takes 'all' or a comma list of 1,2,3");
        }
    }
    if (ids.empty()) throw usage_error("--tables takes 'all' or a comma list of 1,2,3");
    return ids;
}

SweepReport run_sweep(const VerifyArgs& args, mpfr_prec_t prec) {
    if (args.regime.empty()) throw usage_error("--sweep requires --case");
    const Case regime = parse_case(args.regime);
    if (args.sweep == "bounds") {
        return bound_sweep(regime, standard_grid(regime, prec), prec);
    }
    if (args.sweep != "convergence") {
        throw usage_error("--sweep takes 'bounds' or 'convergence'");
    }
    if (args.p < 0) throw usage_error("--sweep convergence requires --p");
    std::optional<LabeledParam> param;
    if (regime == Case::Outer) {
        if (args.beta.empty()) throw usage_error("convergence sweep of the outer case requires --beta");
        param = LabeledParam{args.beta, parse_decimal(args.beta, "--beta", prec)};
    } else if (regime == Case::Oscillatory) {
        if (args.alpha.empty()) throw usage_error("convergence sweep of the oscillatory case requires --alpha");
        param = LabeledParam{args.alpha, parse_angle(args.alpha, prec)};
    }
    return convergence_sweep(regime, param, args.p, {101, 201, 401, 801}, prec);
}

int run_verify(const VerifyArgs& args, Format format, mpfr_prec_t prec) {
    std::string tables_arg = args.tables;
    if (tables_arg.empty() && args.sweep.empty()) tables_arg = "all";

    std::optional<std::vector<TableRow>> rows;
    if (!tables_arg.empty()) rows = reproduce_tables(parse_table_ids(tables_arg), prec);
    std::optional<SweepReport> sweep;
    if (!args.sweep.empty()) sweep = run_sweep(args, prec);

    bool failed = false;
    if (rows) {
        for (const TableRow& row : *rows) failed = failed || !row.pass;
    }
    if (sweep && sweep->violations > 0) failed = true;

    switch (format) {
        case Format::Json: {
            if (rows && sweep) {
                std::cout << ordered_json{{"tables", to_json(*rows)},
                                          {"sweep", to_json(*sweep)}}
                                 .dump(2)
                          << '\n';
            } else if (rows) {
                std::cout << to_json(*rows).dump(2) << '\n';
            } else {
                std::cout << to_json(*sweep).dump(2) << '\n';
            }
            break;
        }
        case Format::Csv:
            if (rows) std::cout << to_csv(*rows);
            if (rows && sweep) std::cout << '\n';
            if (sweep) std::cout << to_csv(*sweep);
            break;
        case Format::Text:
            if (rows) {
                int passed = 0;
                for (const TableRow& row : *rows) {
                    passed += row.pass;
                    std::cout << (row.pass ? "[PASS] " : "[FAIL] ") << row.tag
                              << "  actual=" << row.computed_actual.str(8)
                              << " bound=" << row.computed_bound.str(8) << '\n';
                }
                std::cout << passed << '/' << rows->size() << " cells reproduced\n";
            }
            if (sweep) {
                std::cout << sweep->grid << '\n'
                          << "  points:     " << sweep->points.size() << '\n'
                          << "  violations: " << sweep->violations << '\n'
                          << "  max ratio:  " << sweep->max_ratio.str(8) << '\n';
                if (sweep->slope) {
                    std::printf("  slope:      %.4f\n", *sweep->slope);
                }
            }
            break;
    }
    return failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plancherel-Rotach expansions of Hermite polynomials with certified "
                 "error bounds"};
    app.require_subcommand(1);

    long prec_bits = 384;
    std::string format_arg = "json";
    app.add_option("--prec", prec_bits, "working precision in bits (>= 64)")
        ->envname("HERMITE_PREC_BITS");
    app.add_option("--format", format_arg, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    EvalArgs eval_args;
    CLI::App* eval = app.add_subcommand("eval", "evaluate one expansion with its bound");
    eval->fallthrough();
    eval->add_option("--case", eval_args.regime, "expansion regime")
        ->required()
        ->check(CLI::IsMember({"outer", "oscillatory", "turning"}));
    eval->add_option("--n", eval_args.n, "polynomial degree")->required();
    eval->add_option("--beta", eval_args.beta, "outer parameter, x = cosh(beta)");
    eval->add_option("--alpha", eval_args.alpha, "oscillatory angle, x = cos(alpha)");
    eval->add_option("--p", eval_args.p, "truncation order")->required();

    std::string family;
    long max_order = 0;
    CLI::App* coeffs = app.add_subcommand("coeffs", "dump exact rational coefficients");
    coeffs->fallthrough();
    coeffs->add_option("--family", family, "coefficient family")
        ->required()
        ->check(CLI::IsMember({"A", "D", "P", "Q"}));
    coeffs->add_option("--max", max_order, "largest order to dump (<= 64)")->required();

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "check tables and bound properties");
    verify->fallthrough();
    verify->add_option("--tables", verify_args.tables, "'all' or comma list of 1,2,3");
    verify->add_option("--sweep", verify_args.sweep, "'bounds' or 'convergence'");
    verify->add_option("--case", verify_args.regime, "regime for sweeps")
        ->check(CLI::IsMember({"outer", "oscillatory", "turning"}));
    verify->add_option("--beta", verify_args.beta, "outer parameter for convergence sweeps");
    verify->add_option("--alpha", verify_args.alpha, "oscillatory angle for convergence sweeps");
    verify->add_option("--p", verify_args.p, "truncation order for convergence sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (prec_bits < 64) throw hermite::domain_error("precision_bits must be >= 64");
        const Format format = parse_format(format_arg);
        const mpfr_prec_t prec = static_cast<mpfr_prec_t>(prec_bits);
        if (*eval) return run_eval(eval_args, format, prec);
        if (*coeffs) return run_coeffs(family, max_order, format);
        return run_verify(verify_args, format, prec);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const hermite::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const hermite::capability_error& e) {
        std::cerr << "capability error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
