#pragma once

#include "zetamoment/bigfloat.hpp"
#include "zetamoment/rational.hpp"

#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetamoment {

// Sparse multivariate polynomial over Q in the symbols g0, g1, g2, ...
// (the Stieltjes constants). Monomials are exponent vectors with trailing
// zeros trimmed; coefficients are rationals in lowest terms (mpq keeps
// them canonical). The zero polynomial has no terms.
class ExactPoly {
public:
    using Monomial = std::vector<unsigned>;

    ExactPoly() = default;

    static ExactPoly constant(Rational q) {
        ExactPoly p;
        if (q != 0) p.terms_[{}] = std::move(q);
        return p;
    }

    static ExactPoly symbol(unsigned index) {
        ExactPoly p;
        Monomial m(index + 1, 0);
        m[index] = 1;
        p.terms_[std::move(m)] = 1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Rational as_rational() const {
        if (terms_.empty()) return 0;
        if (!is_rational()) throw std::logic_error("ExactPoly is not a rational constant");
        return terms_.begin()->second;
    }

    ExactPoly& operator+=(const ExactPoly& o) {
        for (const auto& [m, q] : o.terms_) add_term(m, q);
        return *this;
    }
    ExactPoly& operator-=(const ExactPoly& o) {
        for (const auto& [m, q] : o.terms_) add_term(m, -q);
        return *this;
    }

    ExactPoly operator*(const ExactPoly& o) const {
        ExactPoly r;
        for (const auto& [ma, qa] : terms_)
            for (const auto& [mb, qb] : o.terms_) r.add_term(mul_monomial(ma, mb), qa * qb);
        return r;
    }

    ExactPoly& operator*=(const Rational& q) {
        if (q == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= q;
        return *this;
    }

    friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
    friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
    friend ExactPoly operator-(const ExactPoly& a) {
        ExactPoly r = a;
        r *= Rational(-1);
        return r;
    }
    friend ExactPoly operator*(ExactPoly a, const Rational& q) { return a *= q; }
    friend ExactPoly operator*(const Rational& q, ExactPoly a) { return a *= q; }

    friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.terms_ == b.terms_; }

    // Numeric evaluation at a vector of symbol values (g0..gK). Throws if a
    // symbol beyond the supplied range occurs.
    BigReal evaluate(std::span<const BigReal> gamma_values) const {
        BigReal acc = 0;
        for (const auto& [m, q] : terms_) {
            BigReal term = to_bigreal(q);
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (i >= gamma_values.size())
                    throw std::out_of_range("ExactPoly::evaluate: symbol g" + std::to_string(i) +
                                            " has no supplied value");
                for (unsigned e = 0; e < m[i]; ++e) term *= gamma_values[i];
            }
            acc += term;
        }
        return acc;
    }

    unsigned max_symbol_index() const {
        size_t mx = 0;
        for (const auto& [m, q] : terms_) mx = std::max(mx, m.size());
        return mx == 0 ? 0 : static_cast<unsigned>(mx - 1);
    }

    // Canonical text form: terms in fixed monomial order, each as
    // num/den*g0^a*g1^b with unit denominators and exponents elided.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [m, q] : terms_) {
            Rational a = q;
            if (first) {
                if (a < 0) {
                    out << "-";
                    a = -a;
                }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            out << a.str();
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                out << "*g" << i;
                if (m[i] > 1) out << "^" << m[i];
            }
        }
        return out.str();
    }

private:
    static Monomial mul_monomial(const Monomial& a, const Monomial& b) {
        Monomial r(std::max(a.size(), b.size()), 0);
        for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
        return r;
    }

    void add_term(const Monomial& m, const Rational& q) {
        if (q == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, q);
        } else {
            it->second += q;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Monomial, Rational> terms_;
};

} // namespace zetamoment
