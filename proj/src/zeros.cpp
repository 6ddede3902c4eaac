#include "zetamoment/zeros.hpp"

#include "zetamoment/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace zetamoment {

size_t ZeroTable::count_below(const BigReal& T) const {
    return static_cast<size_t>(std::upper_bound(ordinates.begin(), ordinates.end(), T) -
                               ordinates.begin());
}

ZeroTable load_zeros(const std::string& path, int declared_digits) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open zero table: " + path);

    ZeroTable table;
    table.input_digits = declared_digits;
    PrecisionGuard guard(static_cast<unsigned>(declared_digits * 3.33) + 32);

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // Trim; skip comments and blank lines.
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        auto end = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(start, end - start + 1);
        if (tok.find_first_not_of("0123456789.eE+-") != std::string::npos)
            throw data_error(path + ":" + std::to_string(lineno) + ": unparsable ordinate '" + tok + "'");
        BigReal g;
        try {
            g = BigReal(tok);
        } catch (const std::exception&) {
            throw data_error(path + ":" + std::to_string(lineno) + ": unparsable ordinate '" + tok + "'");
        }
        if (!(g > 14))
            throw data_error(path + ":" + std::to_string(lineno) +
                             ": ordinate must exceed 14 (first zero is near 14.13)");
        if (!table.ordinates.empty() && !(g > table.ordinates.back()))
            throw data_error(path + ":" + std::to_string(lineno) +
                             ": ordinates must be strictly increasing");
        table.ordinates.push_back(std::move(g));
    }
    return table;
}

BigReal refine_zero(const BigReal& gamma_approx, const EvalConfig& cfg, int target_digits) {
    PrecisionGuard guard(cfg.precision_bits + 32);
    const BigReal target = pow(BigReal(10), -BigReal(target_digits));
    const BigReal half(0.5);

    BigReal t = gamma_approx;
    for (int iter = 0; iter < 30; ++iter) {
        BigComplex s(half, t);
        BigComplex f = zeta(s, cfg);
        if (abs(f) < target) return t;
        BigComplex fp = zeta_deriv(s, 1, cfg);
        // d/dt zeta(1/2 + i t) = i zeta'(1/2 + i t); the Newton step is real
        // up to noise when the zero is on the line.
        BigComplex step = f / (BigComplex(BigReal(0), BigReal(1)) * fp);
        t -= step.re;
        if (abs(step) > 1)
            throw precision_error("refine_zero: Newton step diverged near gamma ~= " +
                                      gamma_approx.convert_to<std::string>(),
                                  0.0);
    }
    throw precision_error("refine_zero: no convergence to 10^-" + std::to_string(target_digits) +
                              " near gamma ~= " + gamma_approx.convert_to<std::string>(),
                          0.0);
}

CountReport validate_count(const ZeroTable& table, const BigReal& T) {
    CountReport rep;
    rep.counted = static_cast<long>(table.count_below(T));
    double Td = T.convert_to<double>();
    if (Td > 2 * 3.14159265358979) {
        double x = Td / (2 * 3.141592653589793238);
        rep.predicted = x * std::log(x) - x + 0.875;
    }
    rep.deviation = static_cast<double>(rep.counted) - rep.predicted;
    rep.flagged = std::abs(rep.deviation) > 2.0;
    return rep;
}

} // namespace zetamoment
