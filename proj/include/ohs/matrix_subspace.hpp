#pragma once
#ifndef OHS_MATRIX_SUBSPACE_HPP
#define OHS_MATRIX_SUBSPACE_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "error.hpp"
#include "rat_matrix.hpp"
#include "rational.hpp"

namespace ohs {

namespace detail {

/// Reduced row echelon basis of a subspace of Q^length.
///
/// Rows are kept sorted by pivot column, each pivot entry is 1 and every other
/// row is zero in that column, so the basis is canonical for the subspace.
/// Pivots are the first nonzero column of a residual; no stability pivoting.
class EchelonBasis {
  public:
    explicit EchelonBasis(std::size_t length) : length_(length) {}

    std::size_t length() const noexcept { return length_; }
    std::size_t dimension() const noexcept { return rows_.size(); }

    /// x minus its projection along the pivots.
    std::vector<Rational> residual(std::span<const Rational> x) const {
        check_length(x.size());
        std::vector<Rational> r(x.begin(), x.end());
        for (const Row& row : rows_) {
            const Rational c = x[row.pivot];
            if (c.is_zero()) continue;
            for (std::size_t idx : row.support) r[idx] -= c * row.values[idx];
        }
        return r;
    }

    bool contains(std::span<const Rational> x) const {
        const auto r = residual(x);
        return std::all_of(r.begin(), r.end(), [](const Rational& v) { return v.is_zero(); });
    }

    /// Coordinates of x in this basis; only meaningful when contains(x).
    std::vector<Rational> coordinates(std::span<const Rational> x) const {
        check_length(x.size());
        std::vector<Rational> c;
        c.reserve(rows_.size());
        for (const Row& row : rows_) c.push_back(x[row.pivot]);
        return c;
    }

    /// Adds x to the span. Returns true when the dimension grew.
    bool insert(std::span<const Rational> x) {
        std::vector<Rational> r = residual(x);
        std::size_t pivot = 0;
        while (pivot < r.size() && r[pivot].is_zero()) ++pivot;
        if (pivot == r.size()) return false;

        const Rational inv = Rational(1) / r[pivot];
        Row fresh;
        fresh.pivot = pivot;
        for (std::size_t idx = pivot; idx < r.size(); ++idx) {
            if (r[idx].is_zero()) continue;
            r[idx] *= inv;
            fresh.support.push_back(idx);
        }
        fresh.values = std::move(r);

        for (Row& row : rows_) {
            const Rational c = row.values[pivot];
            if (c.is_zero()) continue;
            for (std::size_t idx : fresh.support) row.values[idx] -= c * fresh.values[idx];
            row.refresh_support();
        }
        auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                    [](const Row& row, std::size_t p) { return row.pivot < p; });
        rows_.insert(pos, std::move(fresh));
        return true;
    }

    std::vector<std::size_t> pivots() const {
        std::vector<std::size_t> p;
        p.reserve(rows_.size());
        for (const Row& row : rows_) p.push_back(row.pivot);
        return p;
    }

    const std::vector<Rational>& row(std::size_t k) const { return rows_.at(k).values; }

    friend bool operator==(const EchelonBasis& a, const EchelonBasis& b) {
        if (a.length_ != b.length_ || a.rows_.size() != b.rows_.size()) return false;
        for (std::size_t k = 0; k < a.rows_.size(); ++k)
            if (a.rows_[k].pivot != b.rows_[k].pivot || a.rows_[k].values != b.rows_[k].values) return false;
        return true;
    }

  private:
    struct Row {
        std::size_t pivot = 0;
        std::vector<std::size_t> support;
        std::vector<Rational> values;

        void refresh_support() {
            support.clear();
            for (std::size_t idx = 0; idx < values.size(); ++idx)
                if (!values[idx].is_zero()) support.push_back(idx);
        }
    };

    void check_length(std::size_t n) const {
        if (n != length_)
            throw DimensionMismatch("vector of length " + std::to_string(n) + " in a space of length " +
                                    std::to_string(length_));
    }

    std::size_t length_;
    std::vector<Row> rows_;
};

}  // namespace detail

/// Subspace of N x N rational matrices, stored as a canonical row-reduced basis
/// of row-major vectorizations.
class MatrixSubspace {
  public:
    explicit MatrixSubspace(std::size_t side) : side_(side), echelon_(side * side) {
        if (side == 0) throw DimensionMismatch("subspace side must be positive");
    }

    std::size_t side() const noexcept { return side_; }
    std::size_t dimension() const noexcept { return echelon_.dimension(); }
    std::vector<std::size_t> pivot_columns() const { return echelon_.pivots(); }

    bool insert(const RatMatrix& m) {
        check(m);
        return echelon_.insert(m.flat());
    }

    bool contains(const RatMatrix& m) const {
        check(m);
        return echelon_.contains(m.flat());
    }

    bool contains(const MatrixSubspace& other) const {
        if (other.side_ != side_) return false;
        for (std::size_t k = 0; k < other.dimension(); ++k)
            if (!echelon_.contains(other.echelon_.row(k))) return false;
        return true;
    }

    /// Basis element k reshaped to N x N.
    RatMatrix basis_matrix(std::size_t k) const {
        RatMatrix m(side_, side_);
        const auto& v = echelon_.row(k);
        std::copy(v.begin(), v.end(), m.flat().begin());
        return m;
    }

    std::vector<RatMatrix> basis() const {
        std::vector<RatMatrix> out;
        out.reserve(dimension());
        for (std::size_t k = 0; k < dimension(); ++k) out.push_back(basis_matrix(k));
        return out;
    }

    /// Coefficients of m against basis(); requires contains(m).
    std::vector<Rational> coordinates(const RatMatrix& m) const {
        check(m);
        return echelon_.coordinates(m.flat());
    }

    /// Every basis pair product lies in the subspace.
    bool is_closed_under_multiplication() const {
        const auto b = basis();
        for (const auto& x : b)
            for (const auto& y : b)
                if (!contains(x * y)) return false;
        return true;
    }

    friend bool operator==(const MatrixSubspace& a, const MatrixSubspace& b) {
        return a.side_ == b.side_ && a.echelon_ == b.echelon_;
    }

  private:
    void check(const RatMatrix& m) const {
        if (m.rows() != side_ || m.cols() != side_)
            throw DimensionMismatch("matrix " + m.shape_string() + " in a subspace of side " + std::to_string(side_));
    }

    std::size_t side_;
    detail::EchelonBasis echelon_;
};

namespace detail {

inline std::size_t common_side(std::span<const RatMatrix> mats) {
    if (mats.empty()) throw EmptyInput("no matrices given");
    const std::size_t side = mats.front().rows();
    for (const auto& m : mats)
        if (!m.is_square() || m.rows() != side)
            throw DimensionMismatch("matrices must be square of one common side");
    return side;
}

}  // namespace detail

/// Linear span of a non-empty list of equal-side square matrices.
inline MatrixSubspace span_basis(std::span<const RatMatrix> mats) {
    MatrixSubspace s(detail::common_side(mats));
    for (const auto& m : mats) s.insert(m);
    return s;
}

/// Smallest multiplication-closed subspace containing the generators (and I when unital).
///
/// Fixpoint iteration: every round multiplies the elements accepted in the previous
/// round against all accepted elements on both sides. Products are merged serially in
/// (round, left index, right index) order, so the resulting basis is reproducible.
inline MatrixSubspace algebra_closure(std::span<const RatMatrix> generators, bool unital) {
    const std::size_t side = detail::common_side(generators);
    MatrixSubspace s(side);
    std::vector<RatMatrix> elements;
    auto accept = [&](RatMatrix m) {
        if (s.insert(m)) elements.push_back(std::move(m));
    };
    if (unital) accept(RatMatrix::identity(side));
    for (const auto& g : generators) accept(g);

    std::size_t fresh_begin = 0;
    while (fresh_begin < elements.size()) {
        const std::size_t round_end = elements.size();
        for (std::size_t i = 0; i < round_end; ++i)
            for (std::size_t j = 0; j < round_end; ++j) {
                if (i < fresh_begin && j < fresh_begin) continue;
                accept(elements[i] * elements[j]);
            }
        fresh_begin = round_end;
    }
    return s;
}

/// Dimension of the center of an algebra given as a subspace.
///
/// Solves sum_i z_i [B_i, B_j] = 0 for all basis pairs by exact elimination. A few
/// basis products are checked for membership first; a failure raises NotAnAlgebra.
inline std::size_t center_dimension(const MatrixSubspace& alg) {
    const auto basis = alg.basis();
    const std::size_t dim = basis.size();
    if (dim == 0) return 0;

    const std::size_t last = dim - 1;
    const std::size_t mid = dim / 2;
    for (auto [i, j] : {std::pair{std::size_t{0}, std::size_t{0}}, std::pair{std::size_t{0}, last},
                        std::pair{last, std::size_t{0}}, std::pair{last, last}, std::pair{mid, last}}) {
        if (!alg.contains(basis[i] * basis[j]))
            throw NotAnAlgebra("product of basis elements " + std::to_string(i) + " and " + std::to_string(j) +
                               " leaves the subspace");
    }

    const std::size_t block = alg.side() * alg.side();
    std::vector<std::vector<Rational>> columns(dim, std::vector<Rational>(dim * block));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            const RatMatrix c = commutator(basis[i], basis[j]);
            auto flat = c.flat();
            for (std::size_t t = 0; t < block; ++t) {
                if (flat[t].is_zero()) continue;
                columns[i][j * block + t] = flat[t];
                columns[j][i * block + t] = -flat[t];
            }
        }
    detail::EchelonBasis rank(dim * block);
    for (const auto& col : columns) rank.insert(col);
    return dim - rank.dimension();
}

}  // namespace ohs

#endif  // OHS_MATRIX_SUBSPACE_HPP
