#pragma once

#include "zetamoment/bigcomplex.hpp"
#include "zetamoment/moment_poly.hpp"
#include "zetamoment/zeros.hpp"
#include "zetamoment/zeta_eval.hpp"

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace zetamoment {

// One checkpoint of the empirical-vs-asymptotic comparison.
struct ComparisonRow {
    BigReal T;
    BigComplex empirical;     // partial sum over gamma <= T
    BigReal leading_only;     // top-term prediction
    BigReal full_asymptotic;  // (T/2pi) P(log(T/2pi))
    BigReal residual_leading; // Re(empirical) - leading_only
    BigReal residual_full;    // Re(empirical) - full_asymptotic
};

// Cache of zeta^(order)(1/2 + i gamma) values keyed by (gamma, order,
// precision). Optionally persisted to disk as text, with lossless hex
// serialization, so repeated comparison runs skip re-evaluation.
class DerivCache {
public:
    DerivCache() = default;
    explicit DerivCache(std::string disk_path);

    std::optional<BigComplex> lookup(const std::string& key) const;
    void store(const std::string& key, const BigComplex& value);
    void flush();
    size_t size() const;

    static std::string key_for(const BigReal& gamma, int order, unsigned bits);

private:
    mutable std::mutex mutex_;
    std::unordered_map<std::string, BigComplex> map_;
    std::string disk_path_;
    bool dirty_ = false;
};

struct SumOptions {
    int workers = 1;
    DerivCache* cache = nullptr;
    // When false, zeta^(nu)(1-rho) is evaluated directly instead of via the
    // Schwarz reflection, and the observed discrepancy is recorded.
    bool use_reflection = true;
    BigReal* reflection_discrepancy = nullptr;
};

// I(mu, nu; T) = sum_{0 < gamma <= T} zeta^(mu)(rho) zeta^(nu)(1-rho),
// rho = 1/2 + i gamma. Accumulation is in ordinate order regardless of the
// worker count, so results are bitwise reproducible.
BigComplex discrete_sum(int mu, int nu, const ZeroTable& zeros, const BigReal& T,
                        const EvalConfig& cfg, const SumOptions& opts = {});

// (T/2pi) * P(log(T/2pi)) with numeric polynomial coefficients.
BigReal asymptotic_value(const MomentPolynomial<BigReal>& poly, const BigReal& T);

// One ComparisonRow per checkpoint, with each zero's contribution computed
// exactly once.
std::vector<ComparisonRow> comparison_series(int mu, int nu, const ZeroTable& zeros,
                                             const MomentPolynomial<BigReal>& poly,
                                             const std::vector<BigReal>& checkpoints,
                                             const EvalConfig& cfg, const SumOptions& opts = {});

// Checkpoints at midpoints between consecutive ordinates, every `stride`
// zeros, ending at the midpoint after zero index count-1.
std::vector<BigReal> midpoint_checkpoints(const ZeroTable& zeros, size_t stride, size_t count);

void emit_csv(const std::vector<ComparisonRow>& rows, const std::string& path);
std::vector<ComparisonRow> parse_csv(const std::string& path);

enum class PlotMode { truth, minus_leading, minus_full };
void emit_svg(const std::vector<ComparisonRow>& rows, const std::string& path, PlotMode mode);

} // namespace zetamoment
