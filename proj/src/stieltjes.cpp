#include "zetamoment/stieltjes.hpp"

#include "zetamoment/bernoulli.hpp"
#include "zetamoment/errors.hpp"
#include "zetamoment/rational.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef ZETAMOMENT_DATA_DIR
#define ZETAMOMENT_DATA_DIR "data"
#endif

namespace zetamoment {

const BigReal& StieltjesTable::gamma(int n) const {
    if (n < 0 || static_cast<size_t>(n) >= values.size())
        throw std::out_of_range("StieltjesTable: index " + std::to_string(n) + " not loaded");
    return values[static_cast<size_t>(n)];
}

std::string default_data_dir() {
    if (const char* env = std::getenv("ZETAMOMENT_DATA")) return env;
    return ZETAMOMENT_DATA_DIR;
}

StieltjesTable load_bundled(int max_index) {
    return load_bundled(max_index, default_data_dir() + "/stieltjes.tsv");
}

StieltjesTable load_bundled(int max_index, const std::string& path) {
    if (max_index < 0) throw std::invalid_argument("load_bundled: max_index must be >= 0");
    std::ifstream in(path);
    if (!in) throw data_error("cannot open Stieltjes bundle: " + path);

    std::vector<std::string> digits;
    std::string line;
    int lineno = 0;
    size_t min_len = std::string::npos;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        int n = -1;
        std::string value;
        if (!(ss >> n >> value))
            throw data_error(path + ":" + std::to_string(lineno) + ": malformed line");
        if (n != static_cast<int>(digits.size()))
            throw data_error(path + ":" + std::to_string(lineno) + ": indices must be contiguous from 0");
        digits.push_back(value);
        min_len = std::min(min_len, value.size());
    }
    if (max_index >= static_cast<int>(digits.size()))
        throw std::out_of_range("load_bundled: bundle holds gamma_0..gamma_" +
                                std::to_string(digits.size() - 1) + ", requested " +
                                std::to_string(max_index));

    StieltjesTable table;
    table.source = StieltjesTable::Source::bundled;
    // Conservative: the shortest entry bounds the certified precision.
    table.precision_bits = static_cast<unsigned>((min_len > 4 ? min_len - 4 : 1) * 3.32);
    PrecisionGuard guard(table.precision_bits + 32);
    for (int n = 0; n <= max_index; ++n) {
        try {
            table.values.emplace_back(digits[static_cast<size_t>(n)]);
        } catch (const std::runtime_error&) {
            throw data_error(path + ": gamma_" + std::to_string(n) + " is not a number: " +
                             digits[static_cast<size_t>(n)]);
        }
    }
    return table;
}

namespace {

// Coefficient table for derivatives of f(x) = (log x)^n / x:
//   f^(k)(x) = sum_i c[k][i] (log x)^i / x^(k+1)
// with the recurrence c[k+1][i] = (i+1) c[k][i+1] - (k+1) c[k][i].
std::vector<Integer> next_deriv_row(const std::vector<Integer>& c, int k) {
    std::vector<Integer> r(c.size(), Integer(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i + 1 < c.size()) r[i] += Integer(static_cast<long>(i + 1)) * c[i + 1];
        r[i] -= Integer(k + 1) * c[i];
    }
    return r;
}

BigReal eval_deriv_row(const std::vector<Integer>& c, const std::vector<BigReal>& logm_pows,
                       const BigReal& inv_m_pow) {
    BigReal acc = 0;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        acc += c[i].convert_to<BigReal>() * logm_pows[i];
    }
    return acc * inv_m_pow;
}

} // namespace

BigReal compute_gamma(int n, unsigned precision_bits) {
    if (n < 0) throw std::invalid_argument("compute_gamma: n must be >= 0");
    if (precision_bits < 64) throw std::invalid_argument("compute_gamma: precision_bits must be >= 64");

    const unsigned guard_bits = 64 + 8 * static_cast<unsigned>(n);
    const unsigned work_bits = precision_bits + guard_bits;
    PrecisionGuard guard(work_bits);

    // Smallest achievable tail term is ~exp(-2 pi m); size m so that it
    // undershoots the target comfortably, then verify a posteriori.
    long m = std::max<long>(48, static_cast<long>(0.1104 * work_bits) + 8 * n + 16);
    const BigReal eps = pow2(-static_cast<long>(precision_bits + 24));
    BernoulliWeights weights(work_bits);
    double achieved_bits = 0;

    for (int attempt = 0; attempt < 4; ++attempt, m *= 2) {
        // Direct sum: sum_{k=1}^{m} (log k)^n / k.
        BigReal direct = (n == 0) ? BigReal(1) : BigReal(0);
        for (long k = 2; k <= m; ++k) {
            BigReal lk = log(BigReal(k));
            BigReal term = 1;
            for (int i = 0; i < n; ++i) term *= lk;
            direct += term / BigReal(k);
        }

        BigReal logm = log(BigReal(m));
        std::vector<BigReal> logm_pows(static_cast<size_t>(n) + 2, BigReal(1));
        for (size_t i = 1; i < logm_pows.size(); ++i) logm_pows[i] = logm_pows[i - 1] * logm;

        BigReal fm = logm_pows[static_cast<size_t>(n)] / BigReal(m);
        BigReal result = direct - logm_pows[static_cast<size_t>(n) + 1] / BigReal(n + 1) - fm / 2;

        // Tail: - sum_j B_{2j}/(2j)! f^(2j-1)(m), truncated at the smallest term.
        std::vector<Integer> row(static_cast<size_t>(n) + 1, Integer(0));
        row[static_cast<size_t>(n)] = 1; // f itself
        BigReal inv_m = BigReal(1) / BigReal(m);
        BigReal inv_m_pow = inv_m; // 1/m^(k+1) for k = 0
        int deriv_order = 0;

        BigReal best_term_mag = -1;
        bool certified = false;
        for (int j = 1; j <= 4 * m; ++j) {
            while (deriv_order < 2 * j - 1) {
                row = next_deriv_row(row, deriv_order);
                ++deriv_order;
                inv_m_pow *= inv_m;
            }
            BigReal term = weights.weight(j) * eval_deriv_row(row, logm_pows, inv_m_pow);
            BigReal mag = abs(term);
            if (best_term_mag >= 0 && mag >= best_term_mag) {
                // Asymptotic series turned: the smallest term bounds the error.
                certified = best_term_mag < eps;
                break;
            }
            result -= term;
            best_term_mag = mag;
            if (mag < eps) {
                certified = true;
                break;
            }
        }
        if (certified) {
            BigReal out = result;
            out.precision(bits_to_digits10(precision_bits));
            return out;
        }
        if (best_term_mag > 0) {
            double b = -mpfr_get_exp(best_term_mag.backend().data());
            achieved_bits = std::max(achieved_bits, b);
        }
    }
    throw precision_error("compute_gamma: could not certify requested precision", achieved_bits);
}

StieltjesTable compute_table(int max_index, unsigned precision_bits) {
    StieltjesTable t;
    t.source = StieltjesTable::Source::computed;
    t.precision_bits = precision_bits;
    for (int n = 0; n <= max_index; ++n) t.values.push_back(compute_gamma(n, precision_bits));
    return t;
}

} // namespace zetamoment
