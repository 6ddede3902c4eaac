// Command-line front end: polynomial coefficients, Stieltjes constants,
// zero-table checks, discrete sums, and empirical-vs-asymptotic comparisons.

#include "zetamoment/empirics.hpp"
#include "zetamoment/errors.hpp"
#include "zetamoment/moment_poly.hpp"
#include "zetamoment/ring.hpp"
#include "zetamoment/stieltjes.hpp"
#include "zetamoment/zeros.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

using namespace zetamoment;

namespace {

constexpr int kExitData = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitUsage = 4;

std::string decimal(const BigReal& x, unsigned bits) {
    return x.str(static_cast<int>(bits_to_digits10(bits)), std::ios_base::scientific);
}

RealContext make_real_context(int mu, int nu, unsigned bits) {
    // assemble_polynomial consumes gamma_n up to roughly mu+nu+series guard.
    int max_gamma = mu + nu + 8;
    StieltjesTable table = load_bundled(max_gamma);
    RealContext ctx;
    ctx.gamma_values = table.values;
    return ctx;
    (void)bits;
}

ZeroTable load_table(const std::string& file, int declared_digits, long limit) {
    ZeroTable table = load_zeros(file, declared_digits);
    if (limit > 0 && static_cast<size_t>(limit) < table.ordinates.size())
        table.ordinates.resize(static_cast<size_t>(limit));
    if (limit > 0 && static_cast<size_t>(limit) > table.ordinates.size())
        throw data_error("zero table has only " + std::to_string(table.ordinates.size()) +
                         " entries, " + std::to_string(limit) + " requested");
    return table;
}

int run(int argc, char** argv) {
    CLI::App app{"Discrete second moments of zeta derivatives at the nontrivial zeros"};
    app.require_subcommand(1);

    // --- coeffs ---
    int c_mu = 1, c_nu = 1;
    bool c_symbolic = false, c_numeric = false;
    unsigned c_bits = 128;
    auto* coeffs = app.add_subcommand("coeffs", "Asymptotic polynomial coefficients");
    coeffs->add_option("--mu", c_mu, "first derivative order")->required();
    coeffs->add_option("--nu", c_nu, "second derivative order")->required();
    auto* symb = coeffs->add_flag("--symbolic", c_symbolic, "exact coefficients in gamma_n");
    coeffs->add_flag("--numeric", c_numeric, "decimal coefficients")->excludes(symb);
    coeffs->add_option("--bits", c_bits, "working precision for --numeric");

    // --- gamma ---
    int g_max = 10;
    unsigned g_bits = 256;
    bool g_verify = false;
    auto* gamma_cmd = app.add_subcommand("gamma", "Stieltjes constants");
    gamma_cmd->add_option("--max", g_max, "largest index")->required();
    gamma_cmd->add_option("--bits", g_bits, "working precision");
    gamma_cmd->add_flag("--verify", g_verify, "cross-check bundle against internal computation");

    // --- zeros check ---
    std::string z_file;
    bool z_refine = false;
    int z_digits = 30;
    int z_input_digits = 9;
    long z_count = 0;
    std::string z_out;
    auto* zeros_cmd = app.add_subcommand("zeros", "Zero-table operations");
    auto* check = zeros_cmd->add_subcommand("check", "Validate (optionally refine) a zero table");
    check->add_option("--file", z_file, "table of ordinates, one per line")->required();
    check->add_flag("--refine", z_refine, "Newton-refine every ordinate");
    check->add_option("--digits", z_digits, "refinement target digits");
    check->add_option("--input-digits", z_input_digits, "digits claimed by the input table");
    check->add_option("--count", z_count, "use only the first COUNT ordinates");
    check->add_option("--out", z_out, "write the refined table here");
    zeros_cmd->require_subcommand(1);

    // --- sum ---
    int s_mu = 1, s_nu = 1;
    std::string s_file;
    long s_count = 0;
    double s_height = 0;
    unsigned s_bits = 128;
    int s_workers = 1;
    bool s_no_reflection = false;
    std::string s_cache;
    auto* sum_cmd = app.add_subcommand("sum", "Discrete sum over zeros up to a height");
    sum_cmd->add_option("--mu", s_mu)->required();
    sum_cmd->add_option("--nu", s_nu)->required();
    sum_cmd->add_option("--file", s_file, "zero table")->required();
    auto* opt_count = sum_cmd->add_option("--count", s_count, "sum over the first COUNT zeros");
    sum_cmd->add_option("--height", s_height, "sum over zeros with gamma <= T")
        ->excludes(opt_count);
    sum_cmd->add_option("--bits", s_bits, "working precision");
    sum_cmd->add_option("--workers", s_workers, "evaluation threads");
    sum_cmd->add_flag("--no-reflection", s_no_reflection,
                      "evaluate zeta^(nu)(1-rho) directly and report the reflection drift");
    sum_cmd->add_option("--cache", s_cache, "persistent derivative cache file");

    // --- compare ---
    int m_mu = 1, m_nu = 1;
    std::string m_file, m_csv, m_svg, m_mode = "minus_full", m_cache;
    long m_count = 10000;
    long m_every = 250;
    unsigned m_bits = 128;
    int m_workers = 1;
    auto* cmp = app.add_subcommand("compare", "Empirical sum vs asymptotic polynomial");
    cmp->add_option("--mu", m_mu)->required();
    cmp->add_option("--nu", m_nu)->required();
    cmp->add_option("--file", m_file, "zero table")->required();
    cmp->add_option("--count", m_count, "number of zeros");
    cmp->add_option("--checkpoints-every", m_every, "zeros between checkpoints");
    cmp->add_option("--bits", m_bits, "working precision");
    cmp->add_option("--workers", m_workers, "evaluation threads");
    cmp->add_option("--out-csv", m_csv, "CSV output path")->required();
    cmp->add_option("--out-svg", m_svg, "SVG output path");
    cmp->add_option("--mode", m_mode, "SVG column: truth|minus_leading|minus_full");
    cmp->add_option("--cache", m_cache, "persistent derivative cache file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (coeffs->parsed()) {
        if (c_mu < 1 || c_nu < 1)
            throw std::invalid_argument("coeffs: --mu and --nu must be >= 1");
        if (c_numeric) {
            PrecisionGuard guard(c_bits + 32);
            RealContext ctx = make_real_context(c_mu, c_nu, c_bits);
            auto poly = assemble_polynomial(c_mu, c_nu, ctx);
            for (int m = poly.degree(); m >= 0; --m)
                std::printf("A_%d = %s\n", m,
                            decimal(poly.coeffs[static_cast<size_t>(m)], c_bits).c_str());
        } else {
            ExactContext ctx;
            auto poly = assemble_polynomial(c_mu, c_nu, ctx);
            for (int m = poly.degree(); m >= 0; --m)
                std::printf("A_%d = %s\n", m, poly.coeffs[static_cast<size_t>(m)].str().c_str());
        }
        return 0;
    }

    if (gamma_cmd->parsed()) {
        PrecisionGuard guard(g_bits + 32);
        StieltjesTable bundled = load_bundled(g_max);
        for (int n = 0; n <= g_max; ++n)
            std::printf("gamma_%d = %s\n", n, decimal(bundled.gamma(n), g_bits).c_str());
        if (g_verify) {
            // Trustworthy digits are bounded by both the bundle and the request.
            unsigned agree_bits = std::min<unsigned>(g_bits, bundled.precision_bits) - 24;
            BigReal tol = pow2(-static_cast<long>(agree_bits));
            bool ok = true;
            for (int n = 0; n <= g_max; ++n) {
                BigReal mine = compute_gamma(n, g_bits);
                BigReal diff = abs(mine - bundled.gamma(n));
                std::printf("gamma_%d |bundled - computed| = %s\n", n, decimal(diff, 16).c_str());
                if (diff > tol)
                    ok = false;
            }
            if (!ok)
                throw data_error("bundled Stieltjes constants disagree with internal computation");
            std::printf("verify: all %d constants agree to %u bits\n", g_max + 1, agree_bits);
        }
        return 0;
    }

    if (check->parsed()) {
        ZeroTable table = load_table(z_file, z_input_digits, z_count);
        std::printf("loaded %zu ordinates from %s\n", table.ordinates.size(), z_file.c_str());
        if (table.ordinates.empty())
            return 0;
        size_t stride = std::max<size_t>(1, table.ordinates.size() / 20);
        bool flagged = false;
        for (size_t i = stride - 1; i < table.ordinates.size(); i += stride) {
            auto report = validate_count(table, table.ordinates[i] + BigReal(1) / 1000);
            if (report.flagged)
                flagged = true;
            if (i + stride >= table.ordinates.size() || report.flagged)
                std::printf("T = %s: count %ld, predicted %.2f, deviation %.2f%s\n",
                            decimal(table.ordinates[i], 40).c_str(), report.counted,
                            report.predicted, report.deviation, report.flagged ? "  FLAGGED" : "");
        }
        if (flagged)
            throw data_error("zero table failed the count validation");
        std::printf("count validation passed at %zu checkpoints\n",
                    (table.ordinates.size() + stride - 1) / stride);
        if (z_refine) {
            EvalConfig cfg;
            cfg.precision_bits = static_cast<unsigned>(z_digits * 4 + 64);
            PrecisionGuard guard(cfg.precision_bits + 32);
            BigReal worst(0);
            for (BigReal& g : table.ordinates) {
                BigReal refined = refine_zero(g, cfg, z_digits);
                BigReal shift = abs(refined - g);
                if (shift > worst)
                    worst = shift;
                g = refined;
            }
            table.refined = true;
            std::printf("refined %zu ordinates to %d digits; largest shift %s\n",
                        table.ordinates.size(), z_digits, decimal(worst, 16).c_str());
            if (!z_out.empty()) {
                std::ofstream out(z_out, std::ios::trunc);
                if (!out)
                    throw data_error("cannot write refined table: " + z_out);
                out << "# Refined zero ordinates (" << z_digits << " digits)\n";
                for (const BigReal& g : table.ordinates)
                    out << g.str(z_digits + 2, std::ios_base::fixed) << '\n';
            }
        }
        return 0;
    }

    if (sum_cmd->parsed()) {
        ZeroTable table = load_table(s_file, 9, 0);
        PrecisionGuard guard(s_bits + 32);
        BigReal T;
        if (s_count > 0) {
            if (static_cast<size_t>(s_count) > table.ordinates.size())
                throw data_error("table too short for --count");
            auto cps = midpoint_checkpoints(table, static_cast<size_t>(s_count),
                                            static_cast<size_t>(s_count));
            T = cps.back();
        } else if (s_height > 0) {
            T = BigReal(s_height);
        } else {
            throw std::invalid_argument("sum: need --count or --height");
        }
        EvalConfig cfg;
        cfg.precision_bits = s_bits;
        DerivCache cache_obj(s_cache.empty() ? std::string() : s_cache);
        SumOptions opts;
        opts.workers = s_workers;
        opts.cache = s_cache.empty() ? nullptr : &cache_obj;
        opts.use_reflection = !s_no_reflection;
        BigReal drift(0);
        opts.reflection_discrepancy = &drift;
        BigComplex result = discrete_sum(s_mu, s_nu, table, T, cfg, opts);
        std::printf("T = %s\n", decimal(T, s_bits).c_str());
        std::printf("I(%d,%d;T) = %s + %s i\n", s_mu, s_nu, decimal(result.re, s_bits).c_str(),
                    decimal(result.im, s_bits).c_str());
        if (s_no_reflection)
            std::printf("max |direct - reflected| over zeros = %s\n", decimal(drift, 16).c_str());
        return 0;
    }

    if (cmp->parsed()) {
        PlotMode mode;
        if (m_mode == "truth")
            mode = PlotMode::truth;
        else if (m_mode == "minus_leading")
            mode = PlotMode::minus_leading;
        else if (m_mode == "minus_full")
            mode = PlotMode::minus_full;
        else
            throw std::invalid_argument("compare: unknown --mode " + m_mode);
        if (m_every <= 0 || m_count <= 0)
            throw std::invalid_argument("compare: --count and --checkpoints-every must be positive");

        ZeroTable table = load_table(m_file, 9, 0);
        if (static_cast<size_t>(m_count) > table.ordinates.size())
            throw data_error("table too short for --count");
        PrecisionGuard guard(m_bits + 32);
        RealContext rctx = make_real_context(m_mu, m_nu, m_bits);
        auto poly = assemble_polynomial(m_mu, m_nu, rctx);

        EvalConfig cfg;
        cfg.precision_bits = m_bits;
        DerivCache cache_obj(m_cache.empty() ? std::string() : m_cache);
        SumOptions opts;
        opts.workers = m_workers;
        opts.cache = m_cache.empty() ? nullptr : &cache_obj;
        auto cps = midpoint_checkpoints(table, static_cast<size_t>(m_every),
                                        static_cast<size_t>(m_count));
        auto rows = comparison_series(m_mu, m_nu, table, poly, cps, cfg, opts);
        emit_csv(rows, m_csv);
        std::printf("wrote %zu checkpoints to %s\n", rows.size(), m_csv.c_str());
        if (!m_svg.empty()) {
            emit_svg(rows, m_svg, mode);
            std::printf("wrote plot to %s\n", m_svg.c_str());
        }
        return 0;
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const precision_error& e) {
        std::fprintf(stderr, "precision failure: %s\n", e.what());
        return kExitPrecision;
    } catch (const data_error& e) {
        std::fprintf(stderr, "data error: %s\n", e.what());
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    }
}
