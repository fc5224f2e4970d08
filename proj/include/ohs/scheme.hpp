#pragma once
#ifndef OHS_SCHEME_HPP
#define OHS_SCHEME_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "rat_matrix.hpp"

namespace ohs {

inline constexpr std::size_t kDefaultMaxPoints = 256;

/// Parameters (q_1..q_m; n) of the ordered Hamming scheme X(m, n; q_1, ..., q_m).
struct SchemeParams {
    std::vector<int> q;
    int n = 1;

    SchemeParams() = default;
    SchemeParams(std::vector<int> alphabet_sizes, int length) : q(std::move(alphabet_sizes)), n(length) {
        validate();
    }

    int m() const noexcept { return static_cast<int>(q.size()); }

    void validate() const {
        if (q.empty()) throw InvalidArgument("q must list at least one alphabet size");
        for (int v : q)
            if (v < 2) throw InvalidArgument("every q_j must be at least 2, got " + std::to_string(v));
        if (n < 1) throw InvalidArgument("n must be at least 1, got " + std::to_string(n));
    }

    /// |X| = prod q_j.
    std::size_t base_size() const {
        std::size_t s = 1;
        for (int v : q) s = checked_mul(s, static_cast<std::size_t>(v));
        return s;
    }

    /// |X^n|.
    std::size_t size() const {
        std::size_t s = 1;
        const std::size_t b = base_size();
        for (int i = 0; i < n; ++i) s = checked_mul(s, b);
        return s;
    }

    /// Same n, alphabet sizes in reverse order.
    SchemeParams reversed() const {
        SchemeParams r = *this;
        std::reverse(r.q.begin(), r.q.end());
        return r;
    }

    SchemeParams with_length(int length) const {
        SchemeParams r = *this;
        r.n = length;
        r.validate();
        return r;
    }

    bool palindromic() const { return std::equal(q.begin(), q.end(), q.rbegin()); }

    /// "X(m,n;q1,...,qm)".
    std::string label() const {
        std::string s = "X(" + std::to_string(m()) + "," + std::to_string(n) + ";";
        for (std::size_t j = 0; j < q.size(); ++j) s += (j ? "," : "") + std::to_string(q[j]);
        return s + ")";
    }

    friend bool operator==(const SchemeParams&, const SchemeParams&) = default;

  private:
    static std::size_t checked_mul(std::size_t a, std::size_t b) {
        if (b != 0 && a > std::numeric_limits<std::size_t>::max() / b)
            throw InvalidArgument("instance size overflows");
        return a * b;
    }
};

inline void to_json(nlohmann::json& j, const SchemeParams& p) {
    j = nlohmann::json{{"q", p.q}, {"n", p.n}, {"m", p.m()}};
}

/// Throws SizeBound when |X^n| exceeds the bound; call before allocating matrices.
inline void require_size_bound(const SchemeParams& params, std::size_t max_points) {
    const std::size_t points = params.size();
    if (points > max_points) throw SizeBound(points, max_points);
}

/// Non-negative integer composition (lambda_0, ..., lambda_m) of n.
class Shape {
  public:
    Shape() = default;
    explicit Shape(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int v : parts_)
            if (v < 0) throw InvalidArgument("shape entries must be non-negative");
    }

    std::size_t size() const noexcept { return parts_.size(); }
    int operator[](std::size_t i) const { return parts_.at(i); }
    int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    const std::vector<int>& parts() const noexcept { return parts_; }

    /// (n, 0, ..., 0) with `length` entries.
    static Shape origin(std::size_t length, int n) {
        std::vector<int> p(length, 0);
        p.at(0) = n;
        return Shape(std::move(p));
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    friend auto operator<=>(const Shape&, const Shape&) = default;

  private:
    std::vector<int> parts_;
};

inline void to_json(nlohmann::json& j, const Shape& s) { j = s.parts(); }

/// All compositions of n into `parts` non-negative entries, lexicographically decreasing.
inline std::vector<Shape> enumerate_compositions(std::size_t parts, int n) {
    std::vector<Shape> out;
    if (parts == 0) return out;
    std::vector<int> cur(parts, 0);
    // Depth-first, largest leading entry first.
    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos + 1 == parts) {
            cur[pos] = remaining;
            out.emplace_back(cur);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

/// The shapes I(m, n), with (n, 0, ..., 0) first. There are C(m+n, n) of them.
inline std::vector<Shape> enumerate_shapes(const SchemeParams& params) {
    return enumerate_compositions(static_cast<std::size_t>(params.m()) + 1, params.n);
}

inline std::size_t shape_index(const std::vector<Shape>& shapes, const Shape& s) {
    auto it = std::find(shapes.begin(), shapes.end(), s);
    if (it == shapes.end()) throw InvalidArgument("shape " + s.to_string() + " is not in the index set");
    return static_cast<std::size_t>(it - shapes.begin());
}

inline void require_shape(const SchemeParams& params, const Shape& s) {
    if (s.size() != static_cast<std::size_t>(params.m()) + 1 || s.total() != params.n)
        throw InvalidArgument("shape " + s.to_string() + " is not in I(" + std::to_string(params.m()) + "," +
                              std::to_string(params.n) + ")");
}

/// A point of X^n: n blocks of m coordinates, 0 <= x[i][j] < q_j.
struct Point {
    std::vector<std::vector<int>> blocks;
    friend bool operator==(const Point&, const Point&) = default;
};

inline void to_json(nlohmann::json& j, const Point& x) { j = x.blocks; }

/// Index of a single block; the last coordinate runs fastest.
inline std::size_t block_index(const std::vector<int>& block, const SchemeParams& params) {
    std::size_t idx = 0;
    for (int j = 0; j < params.m(); ++j) idx = idx * params.q[j] + static_cast<std::size_t>(block[j]);
    return idx;
}

inline std::vector<int> block_from_index(std::size_t idx, const SchemeParams& params) {
    std::vector<int> block(params.m());
    for (int j = params.m() - 1; j >= 0; --j) {
        block[j] = static_cast<int>(idx % params.q[j]);
        idx /= params.q[j];
    }
    return block;
}

/// Flat index sum_i idx(x_i) |X|^(n-i); block 1 is the slowest, matching kron order.
inline std::size_t point_index(const Point& x, const SchemeParams& params) {
    const std::size_t base = params.base_size();
    std::size_t idx = 0;
    for (const auto& b : x.blocks) idx = idx * base + block_index(b, params);
    return idx;
}

inline Point point_from_index(std::size_t idx, const SchemeParams& params) {
    const std::size_t base = params.base_size();
    Point x;
    x.blocks.resize(params.n);
    for (int i = params.n - 1; i >= 0; --i) {
        x.blocks[i] = block_from_index(idx % base, params);
        idx /= base;
    }
    return x;
}

inline void require_point(const Point& x, const SchemeParams& params) {
    if (x.blocks.size() != static_cast<std::size_t>(params.n)) throw InvalidArgument("point has the wrong block count");
    for (const auto& b : x.blocks) {
        if (b.size() != static_cast<std::size_t>(params.m())) throw InvalidArgument("block has the wrong length");
        for (int j = 0; j < params.m(); ++j)
            if (b[j] < 0 || b[j] >= params.q[j]) throw InvalidArgument("coordinate out of range");
    }
}

/// Position (1..m) of the last nonzero coordinate of a block, 0 for the zero block.
inline int block_class(const std::vector<int>& block) {
    for (int j = static_cast<int>(block.size()); j >= 1; --j)
        if (block[j - 1] != 0) return j;
    return 0;
}

inline Shape shape_of(const Point& x, const SchemeParams& params) {
    require_point(x, params);
    std::vector<int> lambda(params.m() + 1, 0);
    for (const auto& b : x.blocks) ++lambda[block_class(b)];
    return Shape(std::move(lambda));
}

/// Blockwise x - y with coordinate j taken mod q_j.
inline Point difference(const Point& x, const Point& y, const SchemeParams& params) {
    Point d = x;
    for (std::size_t i = 0; i < d.blocks.size(); ++i)
        for (int j = 0; j < params.m(); ++j)
            d.blocks[i][j] = ((x.blocks[i][j] - y.blocks[i][j]) % params.q[j] + params.q[j]) % params.q[j];
    return d;
}

namespace detail {

/// Shape index of x - y for every pair of points, from the definition.
inline std::vector<std::size_t> relation_table(const SchemeParams& params) {
    const std::size_t points = params.size();
    const auto shapes = enumerate_shapes(params);
    std::vector<Point> all;
    all.reserve(points);
    for (std::size_t i = 0; i < points; ++i) all.push_back(point_from_index(i, params));
    std::vector<std::size_t> table(points * points);
    for (std::size_t x = 0; x < points; ++x)
        for (std::size_t y = 0; y < points; ++y)
            table[x * points + y] = shape_index(shapes, shape_of(difference(all[x], all[y], params), params));
    return table;
}

}  // namespace detail

/// 0/1 matrix of the relation R_lambda = {(x, y) : x - y has shape lambda}.
inline RatMatrix relation_matrix(const Shape& lambda, const SchemeParams& params,
                                 std::size_t max_points = kDefaultMaxPoints) {
    require_shape(params, lambda);
    require_size_bound(params, max_points);
    const std::size_t points = params.size();
    std::vector<Point> all;
    all.reserve(points);
    for (std::size_t i = 0; i < points; ++i) all.push_back(point_from_index(i, params));
    RatMatrix a(points, points);
    for (std::size_t x = 0; x < points; ++x)
        for (std::size_t y = 0; y < points; ++y)
            if (shape_of(difference(all[x], all[y], params), params) == lambda) a(x, y) = 1;
    return a;
}

struct AxiomReport {
    bool r1 = false;  // R_0 is the diagonal
    bool r2 = false;  // relations partition X x X, none empty
    bool r3 = false;  // every relation is symmetric
    bool r4 = false;  // p^k_ij constant on R_k
    bool r5 = false;  // p^k_ij = p^k_ji

    bool passed() const noexcept { return r1 && r2 && r3 && r4 && r5; }
};

inline void to_json(nlohmann::json& j, const AxiomReport& r) {
    j = nlohmann::json{{"R1", r.r1}, {"R2", r.r2}, {"R3", r.r3}, {"R4", r.r4}, {"R5", r.r5}, {"pass", r.passed()}};
}

/// Intersection numbers p^k_ij indexed by position in enumerate_shapes order.
class IntersectionTable {
  public:
    IntersectionTable() = default;
    explicit IntersectionTable(std::vector<Shape> shapes)
        : shapes_(std::move(shapes)), values_(shapes_.size() * shapes_.size() * shapes_.size(), 0) {}

    const std::vector<Shape>& shapes() const noexcept { return shapes_; }
    std::size_t classes() const noexcept { return shapes_.size(); }

    long long& at(std::size_t i, std::size_t j, std::size_t k) { return values_[(i * classes() + j) * classes() + k]; }
    long long at(std::size_t i, std::size_t j, std::size_t k) const {
        return values_[(i * classes() + j) * classes() + k];
    }
    long long operator()(const Shape& i, const Shape& j, const Shape& k) const {
        return at(shape_index(shapes_, i), shape_index(shapes_, j), shape_index(shapes_, k));
    }

  private:
    std::vector<Shape> shapes_;
    std::vector<long long> values_;
};

inline void to_json(nlohmann::json& j, const IntersectionTable& t) {
    j = nlohmann::json::array();
    const auto& s = t.shapes();
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < s.size(); ++b)
            for (std::size_t c = 0; c < s.size(); ++c)
                j.push_back({{"i", s[a]}, {"j", s[b]}, {"k", s[c]}, {"p", t.at(a, b, c)}});
}

namespace detail {

struct CountResult {
    AxiomReport report;
    IntersectionTable table;
};

/// Exhaustive pass over all triples (x, z, y).
inline CountResult count_intersections(const SchemeParams& params) {
    const auto shapes = enumerate_shapes(params);
    const std::size_t classes = shapes.size();
    const std::size_t points = params.size();
    const auto rel = relation_table(params);

    CountResult out{AxiomReport{}, IntersectionTable(shapes)};
    AxiomReport& r = out.report;

    r.r1 = true;
    for (std::size_t x = 0; x < points; ++x)
        for (std::size_t y = 0; y < points; ++y)
            if ((rel[x * points + y] == 0) != (x == y)) r.r1 = false;

    std::vector<std::size_t> population(classes, 0);
    for (std::size_t v : rel) ++population[v];
    r.r2 = std::all_of(population.begin(), population.end(), [](std::size_t c) { return c > 0; });
    {
        RatMatrix sum(points, points);
        for (const auto& s : shapes) sum += relation_matrix(s, params, points);
        r.r2 = r.r2 && sum == RatMatrix::ones(points);
    }

    r.r3 = true;
    for (std::size_t x = 0; x < points; ++x)
        for (std::size_t y = 0; y < points; ++y)
            if (rel[x * points + y] != rel[y * points + x]) r.r3 = false;

    r.r4 = true;
    std::vector<bool> seen(classes, false);
    std::vector<long long> counts(classes * classes);
    for (std::size_t x = 0; x < points; ++x)
        for (std::size_t y = 0; y < points; ++y) {
            std::fill(counts.begin(), counts.end(), 0);
            for (std::size_t z = 0; z < points; ++z) ++counts[rel[x * points + z] * classes + rel[z * points + y]];
            const std::size_t k = rel[x * points + y];
            for (std::size_t i = 0; i < classes; ++i)
                for (std::size_t j = 0; j < classes; ++j) {
                    const long long c = counts[i * classes + j];
                    if (!seen[k]) {
                        out.table.at(i, j, k) = c;
                    } else if (out.table.at(i, j, k) != c) {
                        r.r4 = false;
                    }
                }
            seen[k] = true;
        }

    r.r5 = true;
    for (std::size_t i = 0; i < classes; ++i)
        for (std::size_t j = 0; j < classes; ++j)
            for (std::size_t k = 0; k < classes; ++k)
                if (out.table.at(i, j, k) != out.table.at(j, i, k)) r.r5 = false;
    return out;
}

}  // namespace detail

/// Checks R1-R5 exhaustively from the relation definition.
inline AxiomReport verify_axioms(const SchemeParams& params, std::size_t max_points = kDefaultMaxPoints) {
    params.validate();
    require_size_bound(params, max_points);
    return detail::count_intersections(params).report;
}

/// p^k_ij, sampled per relation and then checked against A_i A_j = sum_k p^k_ij A_k.
inline IntersectionTable intersection_numbers(const SchemeParams& params,
                                              std::size_t max_points = kDefaultMaxPoints) {
    params.validate();
    require_size_bound(params, max_points);
    auto counted = detail::count_intersections(params);
    if (!counted.report.r4) throw AxiomViolation("p^k_ij is not constant on R_k for " + params.label());

    const auto& shapes = counted.table.shapes();
    std::vector<RatMatrix> a;
    for (const auto& s : shapes) a.push_back(relation_matrix(s, params, max_points));
    for (std::size_t i = 0; i < shapes.size(); ++i)
        for (std::size_t j = 0; j < shapes.size(); ++j) {
            RatMatrix rhs(params.size(), params.size());
            for (std::size_t k = 0; k < shapes.size(); ++k)
                if (counted.table.at(i, j, k) != 0) rhs += Rational(counted.table.at(i, j, k)) * a[k];
            if (a[i] * a[j] != rhs) throw AxiomViolation("A_i A_j expansion fails for " + params.label());
        }
    return std::move(counted.table);
}

}  // namespace ohs

#endif  // OHS_SCHEME_HPP
