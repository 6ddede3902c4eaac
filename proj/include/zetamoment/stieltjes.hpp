#pragma once

#include "zetamoment/bigfloat.hpp"

#include <string>
#include <vector>

namespace zetamoment {

// Stieltjes constants gamma_0..gamma_K as arbitrary-precision reals. Two
// sources exist: the bundled reference table and an independent internal
// Euler-Maclaurin computation used to cross-validate the bundle.
struct StieltjesTable {
    enum class Source { bundled, computed };

    std::vector<BigReal> values; // index n -> gamma_n
    Source source = Source::bundled;
    unsigned precision_bits = 0;

    const BigReal& gamma(int n) const;
};

// Default location of the bundled data files (set at build time; overridable
// with the ZETAMOMENT_DATA environment variable).
std::string default_data_dir();

// Load gamma_0..gamma_max_index from the bundled TSV (`n<TAB>decimal-digits`).
StieltjesTable load_bundled(int max_index);
StieltjesTable load_bundled(int max_index, const std::string& path);

// gamma_n by Euler-Maclaurin acceleration of the defining limit
//   gamma_n = lim_{m->inf} ( sum_{k<=m} (log k)^n / k - (log m)^{n+1}/(n+1) ),
// correct to at least precision_bits - 16 bits.
BigReal compute_gamma(int n, unsigned precision_bits);

// Convenience: a validated table computed internally (source = computed).
StieltjesTable compute_table(int max_index, unsigned precision_bits);

} // namespace zetamoment
