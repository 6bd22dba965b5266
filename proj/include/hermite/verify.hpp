#pragma once

#include "hermite/oracle.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hermite {

// One published reference value, kept verbatim as printed: a four-decimal
// mantissa times a power of ten, e.g. "0.0985e-2".
struct PrintedDecimal {
    const char* text;

    BigReal value(mpfr_prec_t prec = kDefaultPrecision) const;
    // magnitude of one unit in the last printed decimal place
    BigReal last_place(mpfr_prec_t prec = kDefaultPrecision) const;
};

// A reference-table cell: the request coordinates plus the two printed values.
// Table 1 rows carry beta = param_num/param_den, table 2 rows carry
// alpha = pi*param_num/param_den, table 3 rows have no parameter.
struct TableFixture {
    int table_id;
    long n;
    long param_num;
    long param_den;
    long p;
    const char* param_label; // "1", "4", "pi/4", ... or "-" for table 3
    PrintedDecimal actual;   // published |eps_p|
    PrintedDecimal bound;    // published C~_p / N^p (or N^{p/3})
    const char* tag;         // cell identifier, e.g. "table1 n=50 beta=1 p=1"
};

// All 22 reference cells (8 + 8 + 6), in row order.
const std::vector<TableFixture>& table_fixtures();

struct TableRow {
    int table_id;
    long n;
    std::string param;
    long p;
    BigReal computed_actual; // |eps_p| via the oracle
    BigReal computed_bound;
    BigReal paper_actual;
    BigReal paper_bound;
    BigReal ratio;           // |eps_p| / computed_bound
    BigReal rel_err_actual;  // |computed - published| / published
    BigReal rel_err_bound;
    bool pass;
    std::string tag;
};

// A computed value reproduces a printed one if it matches to 1.5e-3 relative
// tolerance, or to within 1.5 units in the last printed place (the published
// mantissas are truncated, not rounded, so the last digit may be off by one).
bool matches_printed(const BigReal& computed, const PrintedDecimal& printed);

std::vector<TableRow> reproduce_tables(const std::vector<int>& which,
                                       mpfr_prec_t prec = kDefaultPrecision);

struct LabeledParam {
    std::string label;
    BigReal value;
};

struct SweepGrid {
    std::vector<long> n_values;
    std::vector<LabeledParam> params; // empty for the turning-point case
    std::vector<long> p_values;
};

// The acceptance grids: 4x4x3 = 48 points (outer), 4x4x4 = 64 (oscillatory),
// 4x8 = 32 (turning).
SweepGrid standard_grid(Case c, mpfr_prec_t prec = kDefaultPrecision);

struct SweepReport {
    std::string grid;
    std::vector<RemainderSample> points;
    std::vector<std::string> labels; // parameter label per point: "0.5", "pi/4", "-"
    BigReal max_ratio{kDefaultPrecision}; // NaN until filled by the sweep
    long violations = 0;                  // points with |eps| > bound

    // convergence sweeps only
    std::optional<double> slope;   // least-squares slope of ln|eps| vs ln N
    std::vector<BigReal> c_tilde;  // trajectory along N_list
    std::vector<BigReal> limit_gap; // c_tilde/|A_p(coth beta)| - 1 (outer only)
};

SweepReport bound_sweep(Case c, const SweepGrid& grid,
                        mpfr_prec_t prec = kDefaultPrecision);

// Fixed (param, p), N_list strictly increasing and odd (N = 2n+1).
SweepReport convergence_sweep(Case c, const std::optional<LabeledParam>& param,
                              long p, const std::vector<long>& N_list,
                              mpfr_prec_t prec = kDefaultPrecision);

// Serialization. CSV uses the fixed column set
//   case,n,param,p,computed_actual,computed_bound,paper_actual,paper_bound,ratio,pass
// for table rows and sweep points alike (sweeps leave the paper columns "-").
// Output is byte-identical across runs at fixed precision.
std::string to_csv(const std::vector<TableRow>& rows);
std::string to_csv(const SweepReport& report);
nlohmann::ordered_json to_json(const TableRow& row);
nlohmann::ordered_json to_json(const std::vector<TableRow>& rows);
nlohmann::ordered_json to_json(const SweepReport& report);

} // namespace hermite
