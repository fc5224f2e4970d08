#pragma once
#ifndef OHS_COMBINATORICS_HPP
#define OHS_COMBINATORICS_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "counting.hpp"
#include "error.hpp"
#include "scheme.hpp"

namespace ohs {

/// Pairs (i, j), 1 <= i, j <= m, with i + j > m + 1, or i + j = m + 1 and q_i >= 3.
struct LambdaSet {
    int m = 0;
    std::vector<std::pair<int, int>> pairs;  // row-major order
    int epsilon = 0;                         // #{i : q_i >= 3}

    bool contains(int i, int j) const {
        for (const auto& [a, b] : pairs)
            if (a == i && b == j) return true;
        return false;
    }
    std::size_t size() const noexcept { return pairs.size(); }
};

inline void to_json(nlohmann::json& j, const LambdaSet& l) {
    nlohmann::json p = nlohmann::json::array();
    for (const auto& [a, b] : l.pairs) p.push_back({a, b});
    j = nlohmann::json{{"pairs", p}, {"epsilon", l.epsilon}, {"size", l.size()}};
}

inline LambdaSet lambda_set(const SchemeParams& params) {
    params.validate();
    LambdaSet l;
    l.m = params.m();
    for (int i = 1; i <= l.m; ++i) {
        if (params.q[i - 1] >= 3) ++l.epsilon;
        for (int j = 1; j <= l.m; ++j)
            if (i + j > l.m + 1 || (i + j == l.m + 1 && params.q[i - 1] >= 3)) l.pairs.emplace_back(i, j);
    }
    return l;
}

/// m x m non-negative integer matrix; entry (i, j) stored at [i-1][j-1].
using ThetaMatrix = std::vector<std::vector<int>>;

namespace detail {

inline void require_margin(const Shape& s, const SchemeParams& params, const char* what) {
    if (s.size() != static_cast<std::size_t>(params.m()) || s.total() != params.n)
        throw InvalidArgument(std::string(what) + " " + s.to_string() + " is not in I(" +
                              std::to_string(params.m() - 1) + "," + std::to_string(params.n) + ")");
}

}  // namespace detail

/// Theta(lambda, mu): matrices supported on Lambda(m) with row sums lambda_{i-1} and column
/// sums mu_{j-1}, in lexicographic order of the row-major flattening.
inline std::vector<ThetaMatrix> theta_enumerate(const Shape& lambda, const Shape& mu, const SchemeParams& params) {
    detail::require_margin(lambda, params, "lambda");
    detail::require_margin(mu, params, "mu");
    const int m = params.m();
    const auto L = lambda_set(params);

    std::vector<ThetaMatrix> out;
    ThetaMatrix c(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
    std::vector<int> row_left(lambda.parts());
    std::vector<int> col_left(mu.parts());

    // Cells in row-major order; smallest value first keeps the output lexicographic.
    auto rec = [&](auto&& self, int cell) -> void {
        if (cell == m * m) {
            for (int v : row_left)
                if (v != 0) return;
            for (int v : col_left)
                if (v != 0) return;
            out.push_back(c);
            return;
        }
        const int i = cell / m;
        const int j = cell % m;
        const bool last_in_row = j == m - 1;
        int hi = L.contains(i + 1, j + 1) ? std::min(row_left[i], col_left[j]) : 0;
        int lo = last_in_row ? row_left[i] : 0;
        if (lo > hi) return;
        for (int v = lo; v <= hi; ++v) {
            c[i][j] = v;
            row_left[i] -= v;
            col_left[j] -= v;
            self(self, cell + 1);
            row_left[i] += v;
            col_left[j] += v;
        }
        c[i][j] = 0;
    };
    rec(rec, 0);
    return out;
}

struct FeasibilityCheck {
    bool row_side = true;     // sum_{i in I} lambda <= sum_{j not in J} mu
    bool column_side = true;  // sum_{j in J} mu <= sum_{i not in I} lambda
};

/// Supply-demand conditions over every pair of subsets I, J of {1..m} with (I x J)
/// disjoint from Lambda(m). The two inequalities are complementary forms of each other.
inline FeasibilityCheck theta_feasibility(const Shape& lambda, const Shape& mu, const SchemeParams& params) {
    detail::require_margin(lambda, params, "lambda");
    detail::require_margin(mu, params, "mu");
    const int m = params.m();
    const auto L = lambda_set(params);
    FeasibilityCheck out;
    for (unsigned I = 0; I < (1u << m); ++I)
        for (unsigned J = 0; J < (1u << m); ++J) {
            bool blocked = true;
            for (int i = 0; i < m && blocked; ++i)
                for (int j = 0; j < m; ++j)
                    if ((I >> i & 1u) && (J >> j & 1u) && L.contains(i + 1, j + 1)) {
                        blocked = false;
                        break;
                    }
            if (!blocked) continue;
            int lam_in = 0, lam_out = 0, mu_in = 0, mu_out = 0;
            for (int t = 0; t < m; ++t) {
                ((I >> t & 1u) ? lam_in : lam_out) += lambda[static_cast<std::size_t>(t)];
                ((J >> t & 1u) ? mu_in : mu_out) += mu[static_cast<std::size_t>(t)];
            }
            if (lam_in > mu_out) out.row_side = false;
            if (mu_in > lam_out) out.column_side = false;
        }
    return out;
}

/// True iff Theta(lambda, mu) is non-empty; throws InternalMismatch if the two
/// inequality families ever disagree.
inline bool theta_feasible(const Shape& lambda, const Shape& mu, const SchemeParams& params) {
    const auto f = theta_feasibility(lambda, mu, params);
    if (f.row_side != f.column_side)
        throw InternalMismatch("row-side and column-side feasibility disagree at " + lambda.to_string() + ", " +
                               mu.to_string());
    return f.row_side;
}

/// I(m-1, n): the index set of lambda, mu in Theta.
inline std::vector<Shape> margin_shapes(const SchemeParams& params) {
    return enumerate_compositions(static_cast<std::size_t>(params.m()), params.n);
}

/// Omega(m,n): feasible (lambda, mu) pairs, lambda-major in margin_shapes order.
inline std::vector<std::pair<Shape, Shape>> omega_set(const SchemeParams& params) {
    std::vector<std::pair<Shape, Shape>> out;
    const auto shapes = margin_shapes(params);
    for (const auto& l : shapes)
        for (const auto& u : shapes)
            if (theta_feasible(l, u, params)) out.emplace_back(l, u);
    return out;
}

/// sum over all (lambda, mu) of |Theta(lambda, mu)|.
inline std::size_t theta_total(const SchemeParams& params) {
    std::size_t total = 0;
    const auto shapes = margin_shapes(params);
    for (const auto& l : shapes)
        for (const auto& u : shapes) total += theta_enumerate(l, u, params).size();
    return total;
}

/// C(|Lambda| + n - 1, n).
inline std::size_t theta_binomial(const SchemeParams& params) {
    const auto l = static_cast<long>(lambda_set(params).size());
    if (l == 0) return 0;
    return binomial_count(l + params.n - 1, params.n);
}

/// (m = 1 and q_1 >= 3) or m = 2 or (m = 3 and q_2 = 2) or n = 1.
inline bool omega_binomial_condition(const SchemeParams& params) {
    const int m = params.m();
    return (m == 1 && params.q[0] >= 3) || m == 2 || (m == 3 && params.q[1] == 2) || params.n == 1;
}

}  // namespace ohs

#endif  // OHS_COMBINATORICS_HPP
