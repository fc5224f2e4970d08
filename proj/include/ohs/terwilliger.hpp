#pragma once
#ifndef OHS_TERWILLIGER_HPP
#define OHS_TERWILLIGER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "rat_matrix.hpp"
#include "scheme.hpp"
#include "spectral.hpp"
#include "symtensor.hpp"

namespace ohs {

/// E*_j of X(m,1) at the base point 0: I before j, I - D at j, D after; E*_0 = D (x) ... (x) D.
inline RatMatrix base_dual_idempotent(int j, const SchemeParams& params) {
    return detail::coordinate_kron(params, [j](int s, int q) {
        if (j == 0 || s > j) return local::D(q);
        return s < j ? local::I(q) : local::I(q) - local::D(q);
    });
}

/// Diagonal matrix whose (y,y) entry is (A_j)_{0,y}.
inline RatMatrix dual_idempotent_from_row(const RatMatrix& adjacency) {
    RatMatrix d(adjacency.rows(), adjacency.cols());
    for (std::size_t y = 0; y < adjacency.cols(); ++y) d(y, y) = adjacency(0, y);
    return d;
}

/// F_j = Jt on coordinates < m-j+1, H at m-j+1, D after. F_0 = E_0.
inline RatMatrix closed_form_F(int j, const SchemeParams& params) {
    const int pivot = params.m() - j + 1;
    return detail::coordinate_kron(params, [j, pivot](int s, int q) {
        if (j == 0 || s < pivot) return local::Jt(q);
        return s == pivot ? local::H(q) : local::D(q);
    });
}

/// F*_j = Jt on coordinates < j, H* at j, D after. F*_0 = E*_0.
inline RatMatrix closed_form_Fstar(int j, const SchemeParams& params) {
    return detail::coordinate_kron(params, [j](int s, int q) {
        if (j == 0 || s > j) return local::D(q);
        return s < j ? local::Jt(q) : local::Hstar(q);
    });
}

/// Z_i = I - Jt - H at coordinate i, Jt before and D after.
inline RatMatrix closed_form_Z(int i, const SchemeParams& params) {
    return detail::coordinate_kron(params, [i](int s, int q) {
        if (s < i) return local::Jt(q);
        if (s > i) return local::D(q);
        return local::I(q) - local::Jt(q) - local::H(q);
    });
}

/// The G_j G*_i product when i + j > m + 1: Jt before m-j+1, I - Jt there, I up to i,
/// I - D at i, D after.
inline RatMatrix closed_form_high_product(int i, int j, const SchemeParams& params) {
    const int low = params.m() - j + 1;
    return detail::coordinate_kron(params, [i, low](int s, int q) {
        if (s < low) return local::Jt(q);
        if (s == low) return local::I(q) - local::Jt(q);
        if (s < i) return local::I(q);
        if (s == i) return local::I(q) - local::D(q);
        return local::D(q);
    });
}

/// Base-level families of X(m,1). G and Gstar hold indices 1..m at positions 0..m-1.
struct TerwBasisSet {
    SchemeParams params;
    std::vector<RatMatrix> E;
    std::vector<RatMatrix> Estar;
    std::vector<RatMatrix> F;
    std::vector<RatMatrix> Fstar;
    std::vector<RatMatrix> G;
    std::vector<RatMatrix> Gstar;
    RatMatrix Fnat;
    RatMatrix Gnat;
    std::vector<Rational> k;
    std::vector<Rational> mult;

    /// G_j for 1 <= j <= m.
    const RatMatrix& g(int j) const { return G.at(static_cast<std::size_t>(j - 1)); }
    const RatMatrix& gstar(int j) const { return Gstar.at(static_cast<std::size_t>(j - 1)); }
};

/// Builds the families from their defining sandwiches and checks them against the
/// closed Kronecker forms; any disagreement raises InternalMismatch.
inline TerwBasisSet terw_basis(const SchemeParams& params) {
    params.validate();
    const SchemeParams base = params.with_length(1);
    const auto spec = base_spectral(base);
    const std::size_t N = base.base_size();
    const Rational size(static_cast<long>(N));

    TerwBasisSet t;
    t.params = base;
    t.E = spec.E;
    t.k = spec.k;
    t.mult = spec.mult;
    for (int j = 0; j <= base.m(); ++j) {
        RatMatrix es = base_dual_idempotent(j, base);
        if (es != dual_idempotent_from_row(spec.A[static_cast<std::size_t>(j)]))
            throw InternalMismatch("E*_" + std::to_string(j) + " Kronecker form disagrees with the A_" +
                                   std::to_string(j) + " row at the base point");
        t.Estar.push_back(std::move(es));
    }
    for (int j = 0; j <= base.m(); ++j) {
        const auto sj = static_cast<std::size_t>(j);
        RatMatrix f = (size / t.mult[sj]) * (t.E[sj] * t.Estar[0] * t.E[sj]);
        RatMatrix fs = (size / t.k[sj]) * (t.Estar[sj] * t.E[0] * t.Estar[sj]);
        if (f != closed_form_F(j, base))
            throw InternalMismatch("F_" + std::to_string(j) + " sandwich disagrees with its closed form");
        if (fs != closed_form_Fstar(j, base))
            throw InternalMismatch("F*_" + std::to_string(j) + " sandwich disagrees with its closed form");
        t.F.push_back(std::move(f));
        t.Fstar.push_back(std::move(fs));
    }
    for (int j = 1; j <= base.m(); ++j) {
        const auto sj = static_cast<std::size_t>(j);
        t.G.push_back(t.E[sj] - t.F[sj]);
        t.Gstar.push_back(t.Estar[sj] - t.Fstar[sj]);
    }
    t.Fnat = RatMatrix(N, N);
    for (const auto& f : t.F) t.Fnat += f;
    t.Gnat = RatMatrix::identity(N) - t.Fnat;
    return t;
}

/// m = 1 and q_1 = 2, where every G_j and G*_j vanishes.
inline bool degenerate_g(const SchemeParams& params) { return params.m() == 1 && params.q[0] == 2; }

inline RatMatrix dual_idempotent_n(const Shape& lambda, const SchemeParams& params,
                                   std::size_t max_points = kDefaultMaxPoints) {
    require_shape(params, lambda);
    require_size_bound(params, max_points);
    std::vector<RatMatrix> base;
    for (int j = 0; j <= params.m(); ++j) base.push_back(base_dual_idempotent(j, params));
    return symmetric_sum(base, lambda.parts());
}

}  // namespace ohs

#endif  // OHS_TERWILLIGER_HPP
