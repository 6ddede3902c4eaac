#pragma once

#include "zetamoment/bigfloat.hpp"
#include "zetamoment/zeta_eval.hpp"

#include <string>
#include <vector>

namespace zetamoment {

// Ordinates gamma of nontrivial zeros 1/2 + i*gamma, sorted ascending.
// All known zeros lie on the critical line; the empirics operate under
// that assumption throughout.
struct ZeroTable {
    std::vector<BigReal> ordinates;
    int input_digits = 0;
    bool refined = false;

    size_t count_below(const BigReal& T) const;
};

// Parse a zero table: one decimal ordinate per line, ascending, '#' comments
// allowed. Non-monotone or unparsable input raises data_error with the line.
ZeroTable load_zeros(const std::string& path, int declared_digits);

// Newton refinement of an approximate ordinate, assuming the zero lies on
// the critical line. Returns gamma with |zeta(1/2 + i gamma)| < 10^-target.
BigReal refine_zero(const BigReal& gamma_approx, const EvalConfig& cfg, int target_digits);

struct CountReport {
    long counted = 0;
    double predicted = 0; // Riemann-von Mangoldt main term
    double deviation = 0;
    bool flagged = false; // |deviation| > 2 suggests missing zeros
};

// Riemann-von Mangoldt completeness check of the table below height T.
CountReport validate_count(const ZeroTable& table, const BigReal& T);

} // namespace zetamoment
