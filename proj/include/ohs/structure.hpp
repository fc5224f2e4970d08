#pragma once
#ifndef OHS_STRUCTURE_HPP
#define OHS_STRUCTURE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "combinatorics.hpp"
#include "counting.hpp"
#include "error.hpp"
#include "identities.hpp"
#include "matrix_subspace.hpp"
#include "scheme.hpp"
#include "spectral.hpp"
#include "symtensor.hpp"
#include "terwilliger.hpp"

namespace ohs {

struct PrimaryReport {
    MatrixSubspace space{1};
    std::size_t dimension = 0;
    std::size_t expected_dimension = 0;  // C(m+n, n)^2
    bool multiplication_law = false;
    bool dual_basis_span = false;

    bool passed() const { return dimension == expected_dimension && multiplication_law && dual_basis_span; }
};

/// Span of E*_lambda E_0 E*_mu over X(m,n), with the rational multiplication law
/// (E*_l E_0 E*_u)(E*_v E_0 E*_r) = delta_uv |X^n|^-1 k_u E*_l E_0 E*_r and the
/// dual basis E_l E*_0 E_u spanning the same space.
inline PrimaryReport primary_subalgebra(const SchemeParams& params, std::size_t max_points = kDefaultMaxPoints) {
    params.validate();
    require_size_bound(params, max_points);
    const auto shapes = enumerate_shapes(params);
    const std::size_t c = shapes.size();
    const Rational size(static_cast<long>(params.size()));

    std::vector<RatMatrix> dual, prim;
    std::vector<Rational> k;
    for (const auto& s : shapes) {
        dual.push_back(dual_idempotent_n(s, params, max_points));
        prim.push_back(idempotent_n(s, params, max_points));
        k.push_back(valency_n(s, params));
    }
    std::vector<RatMatrix> basis;
    for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = 0; b < c; ++b) basis.push_back(dual[a] * prim[0] * dual[b]);

    PrimaryReport r;
    r.space = span_basis(basis);
    r.dimension = r.space.dimension();
    r.expected_dimension = c * c;

    r.multiplication_law = true;
    for (std::size_t l = 0; l < c && r.multiplication_law; ++l)
        for (std::size_t u = 0; u < c && r.multiplication_law; ++u)
            for (std::size_t v = 0; v < c && r.multiplication_law; ++v)
                for (std::size_t w = 0; w < c; ++w) {
                    const RatMatrix prod = basis[l * c + u] * basis[v * c + w];
                    const bool ok = u == v ? prod == (k[u] / size) * basis[l * c + w] : prod.is_zero();
                    if (!ok) {
                        r.multiplication_law = false;
                        break;
                    }
                }

    std::vector<RatMatrix> dual_basis;
    for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = 0; b < c; ++b) dual_basis.push_back(prim[a] * dual[0] * prim[b]);
    r.dual_basis_span = span_basis(dual_basis) == r.space;
    return r;
}

enum class Generators { bm, idem };

inline std::string to_string(Generators g) { return g == Generators::bm ? "bm" : "idem"; }

/// Unital algebra generated by the dual idempotents and either the adjacency
/// matrices (bm) or the primitive idempotents (idem) of X(m,n).
inline MatrixSubspace terwilliger_closure(const SchemeParams& params, Generators which = Generators::bm,
                                          std::size_t max_points = kDefaultMaxPoints) {
    params.validate();
    require_size_bound(params, max_points);
    std::vector<RatMatrix> gens;
    for (const auto& s : enumerate_shapes(params))
        gens.push_back(which == Generators::bm ? adjacency_n(s, params, max_points)
                                               : idempotent_n(s, params, max_points));
    for (const auto& s : enumerate_shapes(params)) gens.push_back(dual_idempotent_n(s, params, max_points));
    return algebra_closure(gens, true);
}

struct Component {
    int d = 0;
    MatrixSubspace space{1};
    bool commutative = false;
};

struct ComponentReport {
    std::vector<Component> components;
    bool pairwise_annihilating = false;

    std::size_t total_dimension() const {
        std::size_t s = 0;
        for (const auto& c : components) s += c.space.dimension();
        return s;
    }
};

namespace detail {

inline bool all_commute(const std::vector<RatMatrix>& b) {
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (b[i] * b[j] != b[j] * b[i]) return false;
    return true;
}

}  // namespace detail

/// The algebras T_d, d = 0..n, each generated (without unit) by
/// Sym^{n-d}(F) (.) Sym^d(G) together with the starred counterpart.
inline ComponentReport component_dims(const SchemeParams& params, std::size_t max_points = kDefaultMaxPoints) {
    params.validate();
    if (degenerate_g(params))
        throw InvalidArgument("components need m >= 2 or q_1 >= 3; G vanishes for " + params.label());
    require_size_bound(params, max_points);
    const auto t = terw_basis(params);
    const std::size_t base = params.base_size();

    ComponentReport r;
    std::vector<std::vector<RatMatrix>> bases;
    for (int d = 0; d <= params.n; ++d) {
        const auto f = symmetric_power_basis(t.F, params.n - d);
        const auto g = symmetric_power_basis(t.G, d);
        const auto fs = symmetric_power_basis(t.Fstar, params.n - d);
        const auto gs = symmetric_power_basis(t.Gstar, d);
        auto gens = sym_product_spanset(f, params.n - d, g, d, base);
        for (auto& x : sym_product_spanset(fs, params.n - d, gs, d, base)) gens.push_back(std::move(x));

        Component c;
        c.d = d;
        c.space = algebra_closure(gens, false);
        auto b = c.space.basis();
        c.commutative = detail::all_commute(b);
        bases.push_back(std::move(b));
        r.components.push_back(std::move(c));
    }
    r.pairwise_annihilating = true;
    for (std::size_t a = 0; a < bases.size(); ++a)
        for (std::size_t b = 0; b < bases.size(); ++b) {
            if (a == b) continue;
            for (const auto& x : bases[a])
                for (const auto& y : bases[b])
                    if (!(x * y).is_zero()) r.pairwise_annihilating = false;
        }
    return r;
}

struct Prediction {
    std::string source;
    long long value = 0;
    long long measured = 0;
    bool agrees = false;
};

inline void to_json(nlohmann::json& j, const Prediction& p) {
    j = nlohmann::json{{"source", p.source}, {"value", p.value}, {"measured", p.measured}, {"agrees", p.agrees}};
}

struct StructureReport {
    SchemeParams params;
    std::size_t dim_T = 0;
    std::size_t dim_primary = 0;
    std::vector<Component> components;
    std::size_t center_dim = 0;
    std::vector<Prediction> predictions;
    IdentityReport identity_suite;
    std::map<std::string, bool> checks;

    bool checks_pass() const {
        for (const auto& [name, ok] : checks)
            if (!ok) return false;
        return identity_suite.passed();
    }
    std::vector<std::string> disagreements() const {
        std::vector<std::string> out;
        for (const auto& p : predictions)
            if (!p.agrees) out.push_back(p.source);
        return out;
    }
};

inline void to_json(nlohmann::json& j, const StructureReport& r) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : r.components)
        comps.push_back({{"d", c.d}, {"dim", c.space.dimension()}, {"commutative", c.commutative}});
    j = nlohmann::json{{"params", r.params},
                       {"dim_T", r.dim_T},
                       {"dim_primary", r.dim_primary},
                       {"components", comps},
                       {"center_dim", r.center_dim},
                       {"predictions", r.predictions},
                       {"identity_suite", r.identity_suite.checks},
                       {"vacuous", r.identity_suite.vacuous},
                       {"checks", r.checks}};
}

/// Conditions under which the Terwilliger algebra is claimed to be Sym^n of the base one.
inline bool sym_power_condition(const SchemeParams& params) {
    const int m = params.m();
    return m == 1 || m == 2 || (m == 3 && params.q[1] == 2) || params.n == 1;
}

/// (m+1)^2 + m(m-1)/2 + epsilon.
inline long long base_case_formula(const SchemeParams& params) {
    const long long m = params.m();
    return (m + 1) * (m + 1) + m * (m - 1) / 2 + lambda_set(params).epsilon;
}

namespace detail {

inline long long as_ll(std::size_t v) { return static_cast<long long>(v); }

inline Prediction predict(std::string source, long long value, long long measured) {
    return Prediction{std::move(source), value, measured, value == measured};
}

}  // namespace detail

/// Measures the Terwilliger algebra of X(m,n) and tabulates the printed dimension
/// formulas against the measurement. Nothing here decides which formula is right.
inline StructureReport structure_report(const SchemeParams& params, std::size_t max_points = kDefaultMaxPoints) {
    params.validate();
    require_size_bound(params, max_points);
    const int m = params.m();
    const int n = params.n;
    const bool degenerate = degenerate_g(params);

    StructureReport r;
    r.params = params;
    const auto T = terwilliger_closure(params, Generators::bm, max_points);
    const auto T_idem = terwilliger_closure(params, Generators::idem, max_points);
    r.dim_T = T.dimension();
    r.checks["generator_sets_agree"] = T == T_idem;
    r.center_dim = center_dimension(T);

    const auto primary = primary_subalgebra(params, max_points);
    r.dim_primary = primary.dimension;
    r.checks["primary_dimension"] = primary.dimension == primary.expected_dimension;
    r.checks["primary_multiplication_law"] = primary.multiplication_law;
    r.checks["primary_dual_basis_span"] = primary.dual_basis_span;
    r.checks["primary_inside_closure"] = T.contains(primary.space);

    r.identity_suite = verify_terw_identities(params, max_points);

    const auto classes = [&](int len) { return static_cast<long long>(binomial_count(m + len, len)); };
    const long long measured = detail::as_ll(r.dim_T);
    const auto L = lambda_set(params);

    if (n == 1) r.predictions.push_back(detail::predict("base_case_formula", base_case_formula(params), measured));

    if (degenerate) {
        long long total = 0;
        for (int d = 0; d <= n; ++d) total += static_cast<long long>(n - d + 1) * (n - d + 1);
        r.predictions.push_back(detail::predict("block_sum_uniform_omega", total, measured));
        r.predictions.push_back(detail::predict("primary_only", classes(n) * classes(n), measured));
    } else {
        const auto comps = component_dims(params, max_points);
        r.components = comps.components;
        r.checks["components_pairwise_annihilating"] = comps.pairwise_annihilating;
        r.checks["components_sum_to_dim_T"] = comps.total_dimension() == r.dim_T;
        const auto& top = comps.components.back();
        const auto omega = detail::as_ll(omega_set(params).size());
        r.checks["top_component_commutative"] = top.commutative;
        r.checks["top_component_dim_is_omega"] = detail::as_ll(top.space.dimension()) == omega;
        bool inside = true;
        for (const auto& c : comps.components) inside = inside && T.contains(c.space);
        r.checks["components_inside_closure"] = inside;

        long long uniform = 0, per_degree = 0;
        for (int d = 0; d <= n; ++d) {
            const long long block = classes(n - d) * classes(n - d);
            uniform += block * omega;
            const long long omega_d = d == 0 ? 1 : detail::as_ll(omega_set(params.with_length(d)).size());
            per_degree += block * omega_d;
        }
        r.predictions.push_back(detail::predict("block_sum_uniform_omega", uniform, measured));
        r.predictions.push_back(detail::predict("block_sum_per_degree_omega", per_degree, measured));
        r.predictions.push_back(detail::predict("top_component_omega", omega, detail::as_ll(top.space.dimension())));
        if (omega_binomial_condition(params))
            r.predictions.push_back(detail::predict("omega_binomial", detail::as_ll(theta_binomial(params)), omega));
    }

    if (sym_power_condition(params)) {
        if (!degenerate) {
            long long total = 0;
            for (int d = 0; d <= n; ++d) {
                const long long block = classes(n - d) * classes(n - d);
                total += block * static_cast<long long>(binomial_count(static_cast<long>(L.size()) + d - 1, d));
            }
            r.predictions.push_back(detail::predict("block_sum_binomial", total, measured));
        }
        const SchemeParams base = params.with_length(1);
        const auto base_dim = static_cast<long>(
            n == 1 ? r.dim_T : terwilliger_closure(base, Generators::bm, max_points).dimension());
        r.predictions.push_back(
            detail::predict("sym_power_of_base", static_cast<long long>(binomial_count(base_dim + n - 1, n)), measured));
    }

    if (!degenerate)
        r.predictions.push_back(detail::predict("theta_count", detail::as_ll(theta_binomial(params)),
                                                detail::as_ll(theta_total(params))));
    return r;
}

}  // namespace ohs

#endif  // OHS_STRUCTURE_HPP
