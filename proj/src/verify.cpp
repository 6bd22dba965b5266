#include "hermite/verify.hpp"

#include "hermite/coeffs.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>

namespace hermite {

namespace {

Case case_for_table(int table_id) {
    switch (table_id) {
        case 1: return Case::Outer;
        case 2: return Case::Oscillatory;
        case 3: return Case::Turning;
    }
    throw domain_error("table_id must be 1, 2 or 3");
}

ExpansionRequest request_for(const TableFixture& f, mpfr_prec_t prec) {
    switch (f.table_id) {
        case 1:
            return ExpansionRequest::outer(f.n, BigReal(f.param_num, prec) / f.param_den,
                                           f.p, prec);
        case 2:
            return ExpansionRequest::oscillatory(
                f.n, const_pi(prec) * f.param_num / f.param_den, f.p, prec);
        case 3:
            return ExpansionRequest::turning(f.n, f.p, prec);
    }
    throw domain_error("table_id must be 1, 2 or 3");
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double m = static_cast<double>(xs.size());
    double xbar = 0.0, ybar = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        xbar += xs[i];
        ybar += ys[i];
    }
    xbar /= m;
    ybar /= m;
    double sxy = 0.0, sxx = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - xbar) * (ys[i] - ybar);
        sxx += (xs[i] - xbar) * (xs[i] - xbar);
    }
    return sxy / sxx;
}

void tally(SweepReport& report, const RemainderSample& sample) {
    if (report.max_ratio.is_nan() || sample.ratio > report.max_ratio) {
        report.max_ratio = sample.ratio;
    }
    if (sample.ratio > 1L) ++report.violations;
}

std::string brace_list(const std::vector<long>& values) {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    out << '}';
    return out.str();
}

std::string brace_list(const std::vector<LabeledParam>& params) {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < params.size(); ++i) out << (i ? "," : "") << params[i].label;
    out << '}';
    return out.str();
}

const char* param_key(Case c) { return c == Case::Outer ? "beta" : "alpha"; }

std::string sample_param_label(const SweepReport& report, size_t i) {
    return i < report.labels.size() ? report.labels[i] : std::string("-");
}

void append_csv_line(std::string& out, Case c, long n, const std::string& param, long p,
                     const std::string& actual, const std::string& bound,
                     const std::string& paper_actual, const std::string& paper_bound,
                     const std::string& ratio, bool pass) {
    out += case_name(c);
    out += ',';
    out += std::to_string(n);
    out += ',';
    out += param;
    out += ',';
    out += std::to_string(p);
    out += ',';
    out += actual;
    out += ',';
    out += bound;
    out += ',';
    out += paper_actual;
    out += ',';
    out += paper_bound;
    out += ',';
    out += ratio;
    out += ',';
    out += pass ? "true" : "false";
    out += '\n';
}

constexpr const char* kCsvHeader =
    "case,n,param,p,computed_actual,computed_bound,paper_actual,paper_bound,ratio,pass\n";

} // namespace

BigReal PrintedDecimal::value(mpfr_prec_t prec) const { return BigReal(text, prec); }

BigReal PrintedDecimal::last_place(mpfr_prec_t prec) const {
    const char* dot = std::strchr(text, '.');
    const char* e = std::strchr(text, 'e');
    if (dot == nullptr || e == nullptr || e < dot) {
        throw domain_error("printed value must look like 0.dddde-k");
    }
    const long decimals = static_cast<long>(e - dot) - 1;
    const long exp10 = std::strtol(e + 1, nullptr, 10);
    char buf[32];
    std::snprintf(buf, sizeof buf, "1e%ld", exp10 - decimals);
    return BigReal(buf, prec);
}

bool matches_printed(const BigReal& computed, const PrintedDecimal& printed) {
    const mpfr_prec_t prec = computed.precision();
    BigReal paper = printed.value(prec);
    BigReal diff = abs(computed - paper);
    if (diff <= BigReal("1.5e-3", prec) * paper) return true;
    return diff <= BigReal("1.5", prec) * printed.last_place(prec);
}

std::vector<TableRow> reproduce_tables(const std::vector<int>& which, mpfr_prec_t prec) {
    for (int t : which) {
        if (t < 1 || t > 3) throw domain_error("reproduce_tables: table ids must be in {1,2,3}");
    }
    std::vector<TableRow> rows;
    for (const TableFixture& f : table_fixtures()) {
        if (std::find(which.begin(), which.end(), f.table_id) == which.end()) continue;
        RemainderSample sample = actual_epsilon(request_for(f, prec));
        BigReal computed_actual = abs(sample.actual_eps);
        BigReal paper_actual = f.actual.value(prec);
        BigReal paper_bound = f.bound.value(prec);
        bool pass = matches_printed(computed_actual, f.actual) &&
                    matches_printed(sample.bound, f.bound);
        rows.push_back(TableRow{f.table_id, f.n, f.param_label, f.p, computed_actual,
                                sample.bound, paper_actual, paper_bound, sample.ratio,
                                abs(computed_actual - paper_actual) / paper_actual,
                                abs(sample.bound - paper_bound) / paper_bound, pass,
                                f.tag});
    }
    return rows;
}

SweepGrid standard_grid(Case c, mpfr_prec_t prec) {
    SweepGrid grid;
    grid.n_values = {10, 25, 50, 100};
    switch (c) {
        case Case::Outer:
            grid.params = {{"0.5", BigReal(1L, prec) / 2L},
                           {"1", BigReal(1L, prec)},
                           {"2", BigReal(2L, prec)},
                           {"4", BigReal(4L, prec)}};
            grid.p_values = {1, 2, 3};
            break;
        case Case::Oscillatory:
            grid.params = {{"pi/6", const_pi(prec) / 6L},
                           {"pi/4", const_pi(prec) / 4L},
                           {"pi/3", const_pi(prec) / 3L},
                           {"pi/2", const_pi(prec) / 2L}};
            grid.p_values = {0, 1, 2, 3};
            break;
        case Case::Turning:
            grid.p_values = {3, 4, 5, 6, 7, 8, 9, 10};
            break;
    }
    return grid;
}

SweepReport bound_sweep(Case c, const SweepGrid& grid, mpfr_prec_t prec) {
    SweepReport report;
    {
        std::ostringstream desc;
        desc << case_name(c) << " bound sweep: n in " << brace_list(grid.n_values);
        if (!grid.params.empty()) {
            desc << " x " << param_key(c) << " in " << brace_list(grid.params);
        }
        desc << " x p in " << brace_list(grid.p_values);
        report.grid = desc.str();
    }
    for (long n : grid.n_values) {
        const size_t param_count = grid.params.empty() ? 1 : grid.params.size();
        for (size_t i = 0; i < param_count; ++i) {
            for (long p : grid.p_values) {
                ExpansionRequest req =
                    c == Case::Outer ? ExpansionRequest::outer(n, grid.params[i].value, p, prec)
                    : c == Case::Oscillatory
                        ? ExpansionRequest::oscillatory(n, grid.params[i].value, p, prec)
                        : ExpansionRequest::turning(n, p, prec);
                report.points.push_back(actual_epsilon(req));
                report.labels.push_back(grid.params.empty() ? "-" : grid.params[i].label);
                tally(report, report.points.back());
            }
        }
    }
    return report;
}

SweepReport convergence_sweep(Case c, const std::optional<LabeledParam>& param, long p,
                              const std::vector<long>& N_list, mpfr_prec_t prec) {
    if (N_list.empty()) throw domain_error("convergence_sweep: N_list must be nonempty");
    for (size_t i = 0; i < N_list.size(); ++i) {
        if (N_list[i] < 3 || N_list[i] % 2 == 0) {
            throw domain_error("convergence_sweep: every N must be odd and >= 3");
        }
        if (i > 0 && N_list[i] <= N_list[i - 1]) {
            throw domain_error("convergence_sweep: N_list must be increasing");
        }
    }
    if ((c == Case::Turning) == param.has_value()) {
        throw domain_error("convergence_sweep: parameter is required exactly for the "
                           "outer and oscillatory regimes");
    }

    SweepReport report;
    {
        std::ostringstream desc;
        desc << case_name(c) << " convergence sweep: ";
        if (param) desc << param_key(c) << '=' << param->label << ' ';
        desc << "p=" << p << " N in " << brace_list(N_list);
        report.grid = desc.str();
    }

    std::vector<double> log_n, log_eps;
    for (long N : N_list) {
        const long n = (N - 1) / 2;
        ExpansionRequest req =
            c == Case::Outer ? ExpansionRequest::outer(n, param->value, p, prec)
            : c == Case::Oscillatory ? ExpansionRequest::oscillatory(n, param->value, p, prec)
                                     : ExpansionRequest::turning(n, p, prec);
        RemainderSample sample = actual_epsilon(req);
        log_n.push_back(std::log(static_cast<double>(N)));
        log_eps.push_back(ln(abs(sample.actual_eps)).to_double());
        report.c_tilde.push_back(sample.certified.c_tilde);
        report.labels.push_back(param ? param->label : "-");
        report.points.push_back(std::move(sample));
        tally(report, report.points.back());
    }
    if (N_list.size() >= 2) report.slope = fit_slope(log_n, log_eps);

    if (c == Case::Outer) {
        // the bound constant approaches |A_p(coth beta)| from above as N grows
        BigReal coth_beta = BigReal(1L, prec) / tanh(param->value);
        BigReal limit = abs(eval_a_real(p, coth_beta));
        for (const BigReal& ct : report.c_tilde) {
            report.limit_gap.push_back(ct / limit - 1L);
        }
    }
    return report;
}

std::string to_csv(const std::vector<TableRow>& rows) {
    std::string out = kCsvHeader;
    for (const TableRow& row : rows) {
        append_csv_line(out, case_for_table(row.table_id), row.n, row.param, row.p,
                        row.computed_actual.str(17), row.computed_bound.str(17),
                        row.paper_actual.str(17), row.paper_bound.str(17),
                        row.ratio.str(17), row.pass);
    }
    return out;
}

std::string to_csv(const SweepReport& report) {
    std::string out = kCsvHeader;
    for (size_t i = 0; i < report.points.size(); ++i) {
        const RemainderSample& s = report.points[i];
        append_csv_line(out, s.request.regime, s.request.n, sample_param_label(report, i),
                        s.request.p, abs(s.actual_eps).str(17), s.bound.str(17), "-", "-",
                        s.ratio.str(17), !(s.ratio > 1L));
    }
    return out;
}

nlohmann::ordered_json to_json(const TableRow& row) {
    return nlohmann::ordered_json{{"table_id", row.table_id},
                                  {"case", case_name(case_for_table(row.table_id))},
                                  {"n", row.n},
                                  {"param", row.param},
                                  {"p", row.p},
                                  {"computed_actual", row.computed_actual.str(17)},
                                  {"computed_bound", row.computed_bound.str(17)},
                                  {"paper_actual", row.paper_actual.str(17)},
                                  {"paper_bound", row.paper_bound.str(17)},
                                  {"ratio", row.ratio.str(17)},
                                  {"rel_err_actual", row.rel_err_actual.str(17)},
                                  {"rel_err_bound", row.rel_err_bound.str(17)},
                                  {"pass", row.pass},
                                  {"tag", row.tag}};
}

nlohmann::ordered_json to_json(const std::vector<TableRow>& rows) {
    bool all_pass = true;
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const TableRow& row : rows) {
        all_pass = all_pass && row.pass;
        items.push_back(to_json(row));
    }
    return nlohmann::ordered_json{
        {"rows", std::move(items)}, {"count", rows.size()}, {"all_pass", all_pass}};
}

nlohmann::ordered_json to_json(const SweepReport& report) {
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (size_t i = 0; i < report.points.size(); ++i) {
        const RemainderSample& s = report.points[i];
        points.push_back(nlohmann::ordered_json{{"case", case_name(s.request.regime)},
                                                {"n", s.request.n},
                                                {"param", sample_param_label(report, i)},
                                                {"p", s.request.p},
                                                {"actual_eps", s.actual_eps.str(17)},
                                                {"bound", s.bound.str(17)},
                                                {"ratio", s.ratio.str(17)},
                                                {"weak_bound", s.certified.weak_bound},
                                                {"precision", s.actual_eps.precision()}});
    }
    nlohmann::ordered_json out{{"grid", report.grid},
                               {"points", std::move(points)},
                               {"max_ratio", report.max_ratio.str(17)},
                               {"violations", report.violations}};
    if (report.slope) out["slope"] = *report.slope;
    if (!report.c_tilde.empty()) {
        nlohmann::ordered_json ct = nlohmann::ordered_json::array();
        for (const BigReal& v : report.c_tilde) ct.push_back(v.str(17));
        out["c_tilde"] = std::move(ct);
    }
    if (!report.limit_gap.empty()) {
        nlohmann::ordered_json gap = nlohmann::ordered_json::array();
        for (const BigReal& v : report.limit_gap) gap.push_back(v.str(17));
        out["limit_gap"] = std::move(gap);
    }
    return out;
}

} // namespace hermite
