#pragma once
#ifndef OHS_POLYNOMIAL_HPP
#define OHS_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace ohs {

/// Sparse polynomial in a fixed number of indeterminates z_0..z_{k-1}.
/// Keys are exponent vectors; zero coefficients are never stored.
class Polynomial {
  public:
    using Exponents = std::vector<int>;

    explicit Polynomial(std::size_t variables) : variables_(variables) {}

    static Polynomial constant(std::size_t variables, const Rational& c) {
        Polynomial p(variables);
        p.add_term(Exponents(variables, 0), c);
        return p;
    }

    /// sum_i coeffs[i] z_i
    static Polynomial linear(std::span<const Rational> coeffs) {
        Polynomial p(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            Exponents e(coeffs.size(), 0);
            e[i] = 1;
            p.add_term(e, coeffs[i]);
        }
        return p;
    }

    std::size_t variables() const noexcept { return variables_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }

    Rational coefficient(const Exponents& e) const {
        check(e);
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational() : it->second;
    }

    void add_term(const Exponents& e, const Rational& c) {
        check(e);
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.variables_ != b.variables_) throw DimensionMismatch("polynomials over different variable counts");
        Polynomial out(a.variables_);
        Exponents e(a.variables_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    Polynomial pow(int k) const {
        if (k < 0) throw InvalidArgument("negative polynomial power");
        Polynomial out = constant(variables_, 1);
        for (int i = 0; i < k; ++i) out = out * *this;
        return out;
    }

  private:
    void check(const Exponents& e) const {
        if (e.size() != variables_) throw DimensionMismatch("exponent vector has the wrong length");
    }

    std::size_t variables_;
    std::map<Exponents, Rational> terms_;
};

}  // namespace ohs

#endif  // OHS_POLYNOMIAL_HPP
