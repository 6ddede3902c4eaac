#pragma once

#include "zetamoment/bigfloat.hpp"
#include "zetamoment/rational.hpp"

#include <mutex>
#include <vector>

namespace zetamoment {

// Exact Bernoulli numbers B_0, B_1, B_2, ... (B_1 = -1/2), via the classical
// recurrence. Computed once, appended under a lock, and read thereafter.
class BernoulliTable {
public:
    static const Rational& get(int n) {
        static BernoulliTable table;
        return table.at(n);
    }

private:
    const Rational& at(int n) {
        std::lock_guard<std::mutex> lock(mutex_);
        while (static_cast<int>(values_.size()) <= n) {
            int m = static_cast<int>(values_.size());
            if (m == 0) {
                values_.emplace_back(1);
                continue;
            }
            // sum_{j=0}^{m} binom(m+1, j) B_j = 0
            Rational acc = 0;
            for (int j = 0; j < m; ++j) acc += binomial_q(m + 1, j) * values_[j];
            values_.push_back(-acc / Rational(m + 1));
        }
        return values_[static_cast<size_t>(n)];
    }

    std::mutex mutex_;
    std::vector<Rational> values_;
};

// Per-thread numeric view of B_{2j}/(2j)! at a fixed working precision.
// These are the tail weights of every Euler-Maclaurin expansion we use.
class BernoulliWeights {
public:
    explicit BernoulliWeights(unsigned bits) : bits_(bits) {}

    // B_{2j} / (2j)!
    const BigReal& weight(int j) {
        while (static_cast<int>(weights_.size()) <= j) {
            int jj = static_cast<int>(weights_.size());
            PrecisionGuard guard(bits_);
            Rational w = BernoulliTable::get(2 * jj) / factorial_q(2 * jj);
            weights_.push_back(to_bigreal(w));
        }
        return weights_[static_cast<size_t>(j)];
    }

    unsigned bits() const { return bits_; }

private:
    unsigned bits_;
    std::vector<BigReal> weights_;
};

} // namespace zetamoment
