#pragma once
#ifndef OHS_RAT_MATRIX_HPP
#define OHS_RAT_MATRIX_HPP

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "rational.hpp"

namespace ohs {

/// Dense matrix of exact rationals, row-major.
///
/// Dimensions are fixed at construction. Equality is exact entrywise equality.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
    }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    /// All-ones matrix J.
    static RatMatrix ones(std::size_t rows, std::size_t cols) {
        RatMatrix m(rows, cols);
        for (auto& x : m.data_) x = 1;
        return m;
    }
    static RatMatrix ones(std::size_t n) { return ones(n, n); }
    static RatMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
        RatMatrix m(n, n);
        m(i, j) = 1;
        return m;
    }
    static RatMatrix diagonal(std::span<const Rational> d) {
        RatMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }
    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        if (rows.empty() || rows.front().empty()) throw DimensionMismatch("empty row list");
        RatMatrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged row list");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Row-major flat view; this is also the vectorization used by subspaces.
    std::span<const Rational> flat() const noexcept { return data_; }
    std::span<Rational> flat() noexcept { return data_; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }
    bool is_diagonal() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && !(*this)(i, j).is_zero()) return false;
        return true;
    }

    RatMatrix& operator+=(const RatMatrix& o) {
        require_same_shape(o, "add");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    RatMatrix& operator-=(const RatMatrix& o) {
        require_same_shape(o, "sub");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    RatMatrix& operator*=(const Rational& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }
    friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
    friend RatMatrix operator-(RatMatrix a) {
        for (auto& x : a.data_) x = -x;
        return a;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("mul: " + a.shape_string() + " * " + b.shape_string());
        RatMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik.is_zero()) continue;
                const Rational* brow = &b.data_[k * b.cols_];
                Rational* crow = &c.data_[i * c.cols_];
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!brow[j].is_zero()) crow[j].add_product(aik, brow[j]);
            }
        }
        return c;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string shape_string() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    void require_same_shape(const RatMatrix& o, const char* what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch(std::string(what) + ": " + shape_string() + " vs " + o.shape_string());
    }

    friend std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i == 0 ? "[[" : " [");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
            os << (i + 1 == m.rows_ ? "]]" : "]\n");
        }
        return os;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Entrywise (Hadamard) product.
inline RatMatrix hadamard(const RatMatrix& a, const RatMatrix& b) {
    a.require_same_shape(b, "hadamard");
    RatMatrix c(a.rows(), a.cols());
    auto out = c.flat();
    auto x = a.flat();
    auto y = b.flat();
    for (std::size_t k = 0; k < out.size(); ++k)
        if (!x[k].is_zero() && !y[k].is_zero()) out[k] = x[k] * y[k];
    return c;
}

inline RatMatrix transpose(const RatMatrix& a) {
    RatMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

inline Rational trace(const RatMatrix& a) {
    if (!a.is_square()) throw DimensionMismatch("trace of non-square " + a.shape_string());
    Rational t;
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

/// Kronecker product. Block (i, j) is a(i, j) * b, so the second factor's index runs fastest.
inline RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& aij = a(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const Rational& bkl = b(k, l);
                    if (!bkl.is_zero()) c(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
                }
        }
    return c;
}

/// Left-to-right Kronecker product of a non-empty list.
inline RatMatrix kron_all(std::span<const RatMatrix> factors) {
    if (factors.empty()) throw EmptyInput("kron_all of an empty list");
    RatMatrix acc = factors.front();
    for (std::size_t t = 1; t < factors.size(); ++t) acc = kron(acc, factors[t]);
    return acc;
}

inline std::vector<Rational> row_sums(const RatMatrix& a) {
    std::vector<Rational> s(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s[i] += a(i, j);
    return s;
}

/// Commutator ab - ba.
inline RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

// JSON form: {"rows": R, "cols": C, "entries": [["p/q", ...], ...]}.
inline void to_json(nlohmann::json& j, const RatMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).to_string());
        entries.push_back(std::move(row));
    }
    j = nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline void from_json(const nlohmann::json& j, RatMatrix& m) {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows) throw DimensionMismatch("matrix JSON: row count disagrees with \"rows\"");
    RatMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols) throw DimensionMismatch("matrix JSON: ragged entries");
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& e = entries[i][c];
            out(i, c) = e.is_string() ? Rational::parse(e.get<std::string>()) : Rational(e.get<long>());
        }
    }
    m = std::move(out);
}

}  // namespace ohs

#endif  // OHS_RAT_MATRIX_HPP
