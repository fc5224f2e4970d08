#pragma once
#ifndef OHS_SYMTENSOR_HPP
#define OHS_SYMTENSOR_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rat_matrix.hpp"
#include "scheme.hpp"

namespace ohs {

/// Distinct sequences of part indices where part t appears multiplicities[t] times,
/// in lexicographic order. There are multinomial(n; multiplicities) of them.
inline std::vector<std::vector<int>> multiset_arrangements(std::span<const int> multiplicities) {
    std::vector<int> seq;
    for (std::size_t t = 0; t < multiplicities.size(); ++t) {
        if (multiplicities[t] < 0) throw InvalidArgument("negative multiplicity");
        seq.insert(seq.end(), static_cast<std::size_t>(multiplicities[t]), static_cast<int>(t));
    }
    std::vector<std::vector<int>> out;
    if (seq.empty()) return out;
    do {
        out.push_back(seq);
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

inline std::vector<std::vector<int>> multiset_arrangements(std::initializer_list<int> multiplicities) {
    return multiset_arrangements(std::span<const int>(multiplicities.begin(), multiplicities.size()));
}

/// One tensor factor and how many times it occurs.
struct SymPart {
    RatMatrix matrix;
    int multiplicity = 0;
};

/// A list of factors with multiplicities summing to the tensor length n.
struct MultiSpec {
    std::vector<SymPart> parts;

    MultiSpec() = default;
    MultiSpec(std::span<const RatMatrix> mats, std::span<const int> multiplicities) {
        if (mats.size() != multiplicities.size())
            throw DimensionMismatch("factor and multiplicity lists differ in length");
        for (std::size_t t = 0; t < mats.size(); ++t) parts.push_back({mats[t], multiplicities[t]});
    }

    int length() const {
        return std::accumulate(parts.begin(), parts.end(), 0,
                               [](int acc, const SymPart& p) { return acc + p.multiplicity; });
    }
};

/// Sum of the Kronecker products of every distinct arrangement of the factors.
///
/// Equals multinomial(n; i_1..i_k) times the symmetrizer applied to
/// v_1^{(x)i_1} (x) ... (x) v_k^{(x)i_k}. Zero-multiplicity parts are dropped first;
/// for total length 0 the result is the 1 x 1 identity (the scalar 1).
inline RatMatrix symmetric_sum(const MultiSpec& spec) {
    std::vector<const RatMatrix*> mats;
    std::vector<int> mult;
    for (const auto& p : spec.parts) {
        if (p.multiplicity < 0) throw InvalidArgument("negative multiplicity");
        if (p.multiplicity == 0) continue;
        mats.push_back(&p.matrix);
        mult.push_back(p.multiplicity);
    }
    if (mats.empty()) return RatMatrix::identity(1);
    const std::size_t rows = mats.front()->rows();
    const std::size_t cols = mats.front()->cols();
    for (const auto* m : mats)
        if (m->rows() != rows || m->cols() != cols) throw DimensionMismatch("symmetric_sum: factors differ in shape");

    RatMatrix total;
    bool first = true;
    for (const auto& arrangement : multiset_arrangements(mult)) {
        RatMatrix term = *mats[arrangement.front()];
        for (std::size_t t = 1; t < arrangement.size(); ++t) term = kron(term, *mats[arrangement[t]]);
        if (first) {
            total = std::move(term);
            first = false;
        } else {
            total += term;
        }
    }
    return total;
}

inline RatMatrix symmetric_sum(std::span<const RatMatrix> mats, std::span<const int> multiplicities) {
    return symmetric_sum(MultiSpec(mats, multiplicities));
}

/// m x m grid of factors with a matching grid of multiplicities.
struct GridSpec {
    std::vector<std::vector<RatMatrix>> grid;
    std::vector<std::vector<int>> counts;
};

/// symmetric_sum over the flattened grid (row-major), zero counts excluded.
inline RatMatrix symmetric_sum_grid(const GridSpec& spec) {
    if (spec.grid.size() != spec.counts.size()) throw DimensionMismatch("grid and counts differ in row count");
    MultiSpec flat;
    for (std::size_t i = 0; i < spec.grid.size(); ++i) {
        if (spec.grid[i].size() != spec.counts[i].size())
            throw DimensionMismatch("grid and counts differ in column count");
        for (std::size_t j = 0; j < spec.grid[i].size(); ++j)
            if (spec.counts[i][j] != 0) flat.parts.push_back({spec.grid[i][j], spec.counts[i][j]});
    }
    return symmetric_sum(flat);
}

/// Reorders the tensor factors of a square matrix on (C^base)^{(x) n}: old factor t
/// moves to position destination[t], on rows and columns alike.
inline RatMatrix permute_tensor_factors(const RatMatrix& m, std::size_t base, std::span<const int> destination) {
    const std::size_t n = destination.size();
    std::size_t side = 1;
    for (std::size_t t = 0; t < n; ++t) side *= base;
    if (!m.is_square() || m.rows() != side) throw DimensionMismatch("permute_tensor_factors: side mismatch");

    std::vector<std::size_t> place(side);
    std::vector<std::size_t> weight(n);  // weight of each position in the new index
    for (std::size_t p = 0; p < n; ++p) {
        weight[p] = 1;
        for (std::size_t s = p + 1; s < n; ++s) weight[p] *= base;
    }
    for (std::size_t idx = 0; idx < side; ++idx) {
        std::size_t rest = idx;
        std::size_t target = 0;
        for (std::size_t t = n; t-- > 0;) {
            target += (rest % base) * weight[static_cast<std::size_t>(destination[t])];
            rest /= base;
        }
        place[idx] = target;
    }
    RatMatrix out(side, side);
    for (std::size_t i = 0; i < side; ++i)
        for (std::size_t j = 0; j < side; ++j)
            if (!m(i, j).is_zero()) out(place[i], place[j]) = m(i, j);
    return out;
}

/// Symmetric product of a symmetric tensor u on n1 factors with w on n2 factors:
/// the sum over every n1-subset S of positions of u placed on S and w on the rest.
inline RatMatrix symmetric_product(const RatMatrix& u, int n1, const RatMatrix& w, int n2, std::size_t base) {
    if (n1 < 0 || n2 < 0) throw InvalidArgument("negative tensor length");
    const RatMatrix joint = kron(u, w);
    const int n = n1 + n2;
    if (n == 0) return joint;

    std::vector<bool> chosen(static_cast<std::size_t>(n), false);
    std::fill(chosen.begin(), chosen.begin() + n1, true);
    RatMatrix total(joint.rows(), joint.cols());
    // prev_permutation over a true-first mask walks the n1-subsets lexicographically.
    do {
        std::vector<int> destination;
        destination.reserve(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p)
            if (chosen[static_cast<std::size_t>(p)]) destination.push_back(p);
        for (int p = 0; p < n; ++p)
            if (!chosen[static_cast<std::size_t>(p)]) destination.push_back(p);
        total += permute_tensor_factors(joint, base, destination);
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    return total;
}

/// Spanning set of U (.) W: every pairwise symmetric product of the two lists.
inline std::vector<RatMatrix> sym_product_spanset(std::span<const RatMatrix> u_list, int n1,
                                                  std::span<const RatMatrix> w_list, int n2, std::size_t base) {
    std::vector<RatMatrix> out;
    out.reserve(u_list.size() * w_list.size());
    for (const auto& u : u_list)
        for (const auto& w : w_list) out.push_back(symmetric_product(u, n1, w, n2, base));
    return out;
}

/// Spanning set of Sym^n(span of `mats`): symmetric sums over all compositions of n,
/// ordered like enumerate_compositions.
inline std::vector<RatMatrix> symmetric_power_basis(std::span<const RatMatrix> mats, int n) {
    std::vector<RatMatrix> out;
    for (const auto& c : enumerate_compositions(mats.size(), n)) out.push_back(symmetric_sum(mats, c.parts()));
    return out;
}

}  // namespace ohs

#endif  // OHS_SYMTENSOR_HPP
