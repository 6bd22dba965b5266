#include "hermite/verify.hpp"

// Reference-table cells, transcribed verbatim from the published tables.
// Values are |eps_p| and the certified bound at N = 2n+1; mantissas carry four
// decimal places. One cell per row, tagged for report output.

namespace hermite {

const std::vector<TableFixture>& table_fixtures() {
    static const std::vector<TableFixture> rows = {
        // table 1: outer regime, x = cosh(beta)
        {1, 50, 1, 1, 1, "1", {"0.0985e-2"}, {"0.1917e-2"}, "table1 n=50 beta=1 p=1"},
        {1, 50, 1, 1, 3, "1", {"0.0543e-5"}, {"0.1704e-5"}, "table1 n=50 beta=1 p=3"},
        {1, 50, 4, 1, 1, "4", {"0.8229e-3"}, {"0.9811e-3"}, "table1 n=50 beta=4 p=1"},
        {1, 50, 4, 1, 3, "4", {"0.1879e-7"}, {"0.7375e-7"}, "table1 n=50 beta=4 p=3"},
        {1, 100, 1, 1, 1, "1", {"0.5004e-3"}, {"0.7357e-3"}, "table1 n=100 beta=1 p=1"},
        {1, 100, 1, 1, 3, "1", {"0.0701e-6"}, {"0.1441e-6"}, "table1 n=100 beta=1 p=3"},
        {1, 100, 4, 1, 1, "4", {"0.4134e-3"}, {"0.4533e-3"}, "table1 n=100 beta=4 p=1"},
        {1, 100, 4, 1, 3, "4", {"0.2383e-8"}, {"0.5887e-8"}, "table1 n=100 beta=4 p=3"},
        // table 2: oscillatory regime, x = cos(alpha), alpha = pi*num/den
        {2, 50, 1, 4, 1, "pi/4", {"0.0406e-1"}, {"0.1147e-1"}, "table2 n=50 alpha=pi/4 p=1"},
        {2, 50, 1, 4, 3, "pi/4", {"0.0103e-3"}, {"0.3159e-3"}, "table2 n=50 alpha=pi/4 p=3"},
        {2, 50, 1, 3, 1, "pi/3", {"0.1551e-2"}, {"0.2779e-2"}, "table2 n=50 alpha=pi/3 p=1"},
        {2, 50, 1, 3, 3, "pi/3", {"0.0119e-4"}, {"0.1192e-4"}, "table2 n=50 alpha=pi/3 p=3"},
        {2, 100, 1, 4, 1, "pi/4", {"0.0689e-2"}, {"0.2494e-2"}, "table2 n=100 alpha=pi/4 p=1"},
        {2, 100, 1, 4, 3, "pi/4", {"0.0066e-4"}, {"0.2001e-4"}, "table2 n=100 alpha=pi/4 p=3"},
        {2, 100, 1, 3, 1, "pi/3", {"0.0932e-2"}, {"0.1249e-2"}, "table2 n=100 alpha=pi/3 p=1"},
        {2, 100, 1, 3, 3, "pi/3", {"0.1532e-6"}, {"0.8399e-6"}, "table2 n=100 alpha=pi/3 p=3"},
        // table 3: turning point, x = 1
        {3, 50, 0, 1, 4, "-", {"0.2148e-3"}, {"0.6615e-3"}, "table3 n=50 p=4"},
        {3, 50, 0, 1, 7, "-", {"0.0300e-5"}, {"0.4092e-5"}, "table3 n=50 p=7"},
        {3, 50, 0, 1, 10, "-", {"0.0538e-7"}, {"0.6667e-7"}, "table3 n=50 p=10"},
        {3, 100, 0, 1, 4, "-", {"0.0835e-3"}, {"0.2253e-3"}, "table3 n=100 p=4"},
        {3, 100, 0, 1, 7, "-", {"0.0601e-6"}, {"0.6658e-6"}, "table3 n=100 p=7"},
        {3, 100, 0, 1, 10, "-", {"0.0523e-8"}, {"0.5438e-8"}, "table3 n=100 p=10"},
    };
    return rows;
}

} // namespace hermite
