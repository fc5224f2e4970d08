#pragma once
#ifndef OHS_SPECTRAL_HPP
#define OHS_SPECTRAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "counting.hpp"
#include "error.hpp"
#include "polynomial.hpp"
#include "rat_matrix.hpp"
#include "scheme.hpp"
#include "symtensor.hpp"

namespace ohs {

/// Matrices on a single coordinate alphabet Z_q.
namespace local {

inline RatMatrix I(int q) { return RatMatrix::identity(static_cast<std::size_t>(q)); }
inline RatMatrix J(int q) { return RatMatrix::ones(static_cast<std::size_t>(q)); }
/// J / q
inline RatMatrix Jt(int q) { return Rational(1, q) * J(q); }
/// (0,0) matrix unit
inline RatMatrix D(int q) { return RatMatrix::unit(static_cast<std::size_t>(q), 0, 0); }

/// q/(q-1) (I - Jt) D (I - Jt)
inline RatMatrix H(int q) { return Rational(q, q - 1) * ((I(q) - Jt(q)) * D(q) * (I(q) - Jt(q))); }
/// q/(q-1) (I - D) Jt (I - D)
inline RatMatrix Hstar(int q) { return Rational(q, q - 1) * ((I(q) - D(q)) * Jt(q) * (I(q) - D(q))); }

}  // namespace local

namespace detail {

/// Kronecker product over coordinates 1..m where coordinate s gets factor(s).
template <class Factor>
RatMatrix coordinate_kron(const SchemeParams& params, Factor factor) {
    std::vector<RatMatrix> f;
    f.reserve(params.q.size());
    for (int s = 1; s <= params.m(); ++s) f.push_back(factor(s, params.q[s - 1]));
    return kron_all(f);
}

}  // namespace detail

/// A_j of X(m,1): J on coordinates < j, J - I at j, I after.
inline RatMatrix base_adjacency(int j, const SchemeParams& params) {
    return detail::coordinate_kron(params, [j](int s, int q) {
        if (j == 0 || s > j) return local::I(q);
        return s < j ? local::J(q) : local::J(q) - local::I(q);
    });
}

/// E_j of X(m,1): Jt on coordinates < m-j+1, I - Jt at m-j+1, I after.
inline RatMatrix base_idempotent(int j, const SchemeParams& params) {
    const int pivot = params.m() - j + 1;
    return detail::coordinate_kron(params, [j, pivot](int s, int q) {
        if (j == 0 || s < pivot) return local::Jt(q);
        return s == pivot ? local::I(q) - local::Jt(q) : local::I(q);
    });
}

/// k_j = (q_j - 1) prod_{s<j} q_s, k_0 = 1.
inline Rational base_valency(int j, const SchemeParams& params) {
    if (j == 0) return 1;
    Rational k = params.q[j - 1] - 1;
    for (int s = 1; s < j; ++s) k *= params.q[s - 1];
    return k;
}

/// m_j = (q_{m-j+1} - 1) prod_{s>m-j+1} q_s, m_0 = 1.
inline Rational base_multiplicity(int j, const SchemeParams& params) {
    if (j == 0) return 1;
    const int pivot = params.m() - j + 1;
    Rational mult = params.q[pivot - 1] - 1;
    for (int s = pivot + 1; s <= params.m(); ++s) mult *= params.q[s - 1];
    return mult;
}

struct BaseSpectralData {
    std::vector<RatMatrix> A;
    std::vector<RatMatrix> E;
    std::vector<Rational> k;
    std::vector<Rational> mult;
    RatMatrix P;  // P(i, j) = P_j(i)
    RatMatrix Q;  // Q(i, j) = Q_j(i)
};

/// Base eigenmatrices from the closed case split on i + j versus m + 1.
inline RatMatrix base_eigenmatrix(const SchemeParams& params, bool second) {
    const int m = params.m();
    RatMatrix out(static_cast<std::size_t>(m) + 1, static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j) {
            const Rational base = second ? base_multiplicity(j, params) : base_valency(j, params);
            Rational v;
            if (i + j < m + 1) {
                v = base;
            } else if (i + j == m + 1) {
                const int q = second ? params.q[m - j] : params.q[j - 1];
                v = -base / Rational(q - 1);
            }
            out(i, j) = v;
        }
    return out;
}

/// Base adjacency matrices and idempotents of X(m,1). Closed-form valencies and
/// multiplicities are checked against row sums and traces.
inline BaseSpectralData base_spectral(const SchemeParams& params) {
    params.validate();
    BaseSpectralData d;
    for (int j = 0; j <= params.m(); ++j) {
        d.A.push_back(base_adjacency(j, params));
        d.E.push_back(base_idempotent(j, params));
        d.k.push_back(base_valency(j, params));
        d.mult.push_back(base_multiplicity(j, params));
        for (const auto& r : row_sums(d.A.back()))
            if (r != d.k.back())
                throw InternalMismatch("valency k_" + std::to_string(j) + " disagrees with the row sum of A_" +
                                       std::to_string(j));
        if (trace(d.E.back()) != d.mult.back())
            throw InternalMismatch("multiplicity m_" + std::to_string(j) + " disagrees with the trace of E_" +
                                   std::to_string(j));
    }
    d.P = base_eigenmatrix(params, false);
    d.Q = base_eigenmatrix(params, true);
    return d;
}

struct DualityReport {
    bool p_matches_reversed_q = false;  // P(q) = Q(reverse q)
    bool q_matches_reversed_p = false;  // Q(q) = P(reverse q)
    bool valencies_swap = false;        // k(reverse q) = mult(q) and mult(reverse q) = k(q)
    bool self_dual = true;              // P = Q; only required for palindromic q
    bool pq_product = false;            // P Q = |X| I
    bool palindromic = false;

    bool passed() const noexcept {
        return p_matches_reversed_q && q_matches_reversed_p && valencies_swap && pq_product &&
               (!palindromic || self_dual);
    }
};

inline void to_json(nlohmann::json& j, const DualityReport& r) {
    j = nlohmann::json{{"p_matches_reversed_q", r.p_matches_reversed_q},
                       {"q_matches_reversed_p", r.q_matches_reversed_p},
                       {"valencies_swap", r.valencies_swap},
                       {"palindromic", r.palindromic},
                       {"self_dual", r.self_dual},
                       {"pq_product", r.pq_product},
                       {"pass", r.passed()}};
}

inline DualityReport verify_base_duality(const SchemeParams& params) {
    const auto d = base_spectral(params);
    const auto r = base_spectral(params.reversed());
    DualityReport out;
    out.p_matches_reversed_q = d.P == r.Q;
    out.q_matches_reversed_p = d.Q == r.P;
    out.valencies_swap = r.k == d.mult && r.mult == d.k;
    out.palindromic = params.palindromic();
    out.self_dual = d.P == d.Q;
    const auto side = static_cast<std::size_t>(params.m()) + 1;
    out.pq_product = d.P * d.Q == Rational(static_cast<long>(params.base_size())) * RatMatrix::identity(side);
    return out;
}

/// K_mu(lambda) for all shapes, rows lambda and columns mu in enumerate_shapes order.
struct KrawchoukTable {
    std::vector<Shape> shapes;
    RatMatrix values;

    Rational operator()(const Shape& mu, const Shape& lambda) const {
        return values(shape_index(shapes, lambda), shape_index(shapes, mu));
    }
};

/// Expands prod_j (sum_i P_i(j) z_i)^{lambda_j} and reads off the z^mu coefficients.
/// With reversed_q the base P comes from the reversed alphabet sequence.
inline KrawchoukTable krawchouk_table(const SchemeParams& params, bool reversed_q = false) {
    params.validate();
    const SchemeParams source = reversed_q ? params.reversed() : params;
    const RatMatrix P = base_eigenmatrix(source, false);
    const auto vars = static_cast<std::size_t>(params.m()) + 1;

    std::vector<Polynomial> rows;
    for (std::size_t j = 0; j < vars; ++j) {
        std::vector<Rational> coeffs(vars);
        for (std::size_t i = 0; i < vars; ++i) coeffs[i] = P(j, i);
        rows.push_back(Polynomial::linear(coeffs));
    }

    KrawchoukTable t{enumerate_shapes(params), RatMatrix()};
    const std::size_t classes = t.shapes.size();
    t.values = RatMatrix(classes, classes);
    for (std::size_t l = 0; l < classes; ++l) {
        Polynomial gen = Polynomial::constant(vars, 1);
        for (std::size_t j = 0; j < vars; ++j) gen = gen * rows[j].pow(t.shapes[l][j]);
        for (std::size_t u = 0; u < classes; ++u) t.values(l, u) = gen.coefficient(t.shapes[u].parts());
    }
    return t;
}

inline RatMatrix adjacency_n(const Shape& lambda, const SchemeParams& params,
                             std::size_t max_points = kDefaultMaxPoints) {
    require_shape(params, lambda);
    require_size_bound(params, max_points);
    std::vector<RatMatrix> base;
    for (int j = 0; j <= params.m(); ++j) base.push_back(base_adjacency(j, params));
    return symmetric_sum(base, lambda.parts());
}

inline RatMatrix idempotent_n(const Shape& lambda, const SchemeParams& params,
                              std::size_t max_points = kDefaultMaxPoints) {
    require_shape(params, lambda);
    require_size_bound(params, max_points);
    std::vector<RatMatrix> base;
    for (int j = 0; j <= params.m(); ++j) base.push_back(base_idempotent(j, params));
    return symmetric_sum(base, lambda.parts());
}

/// multinomial(n; lambda) prod_j k_j^{lambda_j}
inline Rational valency_n(const Shape& lambda, const SchemeParams& params) {
    require_shape(params, lambda);
    Rational v(multinomial(lambda.parts()));
    for (int j = 0; j <= params.m(); ++j) v *= power(base_valency(j, params), lambda[j]);
    return v;
}

/// multinomial(n; lambda) prod_j m_j^{lambda_j}
inline Rational multiplicity_n(const Shape& lambda, const SchemeParams& params) {
    require_shape(params, lambda);
    Rational v(multinomial(lambda.parts()));
    for (int j = 0; j <= params.m(); ++j) v *= power(base_multiplicity(j, params), lambda[j]);
    return v;
}

struct Eigenmatrices {
    std::vector<Shape> shapes;
    RatMatrix P;
    RatMatrix Q;
};

/// P_n[lambda][mu] = K_mu(lambda; q), Q_n[lambda][mu] = K_mu(lambda; reverse q).
inline Eigenmatrices eigen_n(const SchemeParams& params) {
    auto p = krawchouk_table(params, false);
    auto q = krawchouk_table(params, true);
    return {std::move(p.shapes), std::move(p.values), std::move(q.values)};
}

inline void to_json(nlohmann::json& j, const Eigenmatrices& e) {
    j = nlohmann::json{{"shape_order", e.shapes}, {"P", e.P}, {"Q", e.Q}};
}

struct SpectralReport {
    bool pq_identity = false;       // P_n Q_n = |X^n| I
    bool eigenvalues = false;       // A_mu E_lambda = P_n[lambda][mu] E_lambda
    bool hadamard = false;          // E_mu o A_lambda = |X^n|^-1 Q_n[lambda][mu] A_lambda
    bool valencies = false;         // row sums of A_lambda
    bool multiplicities = false;    // traces of E_lambda
    bool construction_match = false;  // tensor construction equals the relation definition
    bool idempotents = false;       // E_lambda E_mu = delta E_lambda, sum = I, |X^n| E_0 = J
    bool duality = false;           // P_n(q) = Q_n(reverse q), and P_n = Q_n when palindromic

    bool passed() const noexcept {
        return pq_identity && eigenvalues && hadamard && valencies && multiplicities && construction_match &&
               idempotents && duality;
    }
};

inline void to_json(nlohmann::json& j, const SpectralReport& r) {
    j = nlohmann::json{{"pq_identity", r.pq_identity},
                       {"eigenvalues", r.eigenvalues},
                       {"hadamard", r.hadamard},
                       {"valencies", r.valencies},
                       {"multiplicities", r.multiplicities},
                       {"construction_match", r.construction_match},
                       {"idempotents", r.idempotents},
                       {"duality", r.duality},
                       {"pass", r.passed()}};
}

inline SpectralReport verify_spectral_n(const SchemeParams& params, std::size_t max_points = kDefaultMaxPoints) {
    params.validate();
    require_size_bound(params, max_points);
    const auto eig = eigen_n(params);
    const auto& shapes = eig.shapes;
    const std::size_t classes = shapes.size();
    const std::size_t points = params.size();
    const Rational size(static_cast<long>(points));

    std::vector<RatMatrix> A, E;
    for (const auto& s : shapes) {
        A.push_back(adjacency_n(s, params, max_points));
        E.push_back(idempotent_n(s, params, max_points));
    }

    SpectralReport r;
    r.pq_identity = eig.P * eig.Q == size * RatMatrix::identity(classes);

    r.eigenvalues = true;
    r.hadamard = true;
    for (std::size_t l = 0; l < classes; ++l)
        for (std::size_t u = 0; u < classes; ++u) {
            if (A[u] * E[l] != eig.P(l, u) * E[l]) r.eigenvalues = false;
            if (hadamard(E[u], A[l]) != (eig.Q(l, u) / size) * A[l]) r.hadamard = false;
        }

    r.valencies = true;
    r.multiplicities = true;
    r.construction_match = true;
    for (std::size_t l = 0; l < classes; ++l) {
        const Rational k = valency_n(shapes[l], params);
        for (const auto& s : row_sums(A[l]))
            if (s != k) r.valencies = false;
        if (trace(E[l]) != multiplicity_n(shapes[l], params)) r.multiplicities = false;
        if (A[l] != relation_matrix(shapes[l], params, max_points)) r.construction_match = false;
    }

    r.idempotents = size * E[0] == RatMatrix::ones(points);
    RatMatrix sum(points, points);
    for (std::size_t l = 0; l < classes; ++l) {
        sum += E[l];
        for (std::size_t u = 0; u < classes; ++u) {
            const RatMatrix prod = E[l] * E[u];
            if (l == u ? prod != E[l] : !prod.is_zero()) r.idempotents = false;
        }
    }
    if (sum != RatMatrix::identity(points)) r.idempotents = false;

    const auto rev = eigen_n(params.reversed());
    r.duality = eig.P == rev.Q && eig.Q == rev.P && (!params.palindromic() || eig.P == eig.Q);
    return r;
}

}  // namespace ohs

#endif  // OHS_SPECTRAL_HPP
