#include <gtest/gtest.h>

#include <vector>

#include <ohs/combinatorics.hpp>

using namespace ohs;

namespace {

/// Every m x m matrix with entries 0..n, filtered by the three constraints.
std::vector<ThetaMatrix> brute_theta(const Shape& lambda, const Shape& mu, const SchemeParams& p) {
    const int m = p.m(), n = p.n;
    const auto L = lambda_set(p);
    std::vector<ThetaMatrix> out;
    std::vector<int> cells(static_cast<std::size_t>(m * m), 0);
    while (true) {
        ThetaMatrix c(m, std::vector<int>(m));
        bool ok = true;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                c[i][j] = cells[static_cast<std::size_t>(i * m + j)];
                if (c[i][j] != 0 && !L.contains(i + 1, j + 1)) ok = false;
            }
        for (int i = 0; i < m && ok; ++i) {
            int r = 0, s = 0;
            for (int j = 0; j < m; ++j) {
                r += c[i][j];
                s += c[j][i];
            }
            ok = r == lambda[i] && s == mu[i];
        }
        if (ok) out.push_back(c);
        // odometer, last cell fastest, so the output is lexicographic
        int pos = m * m - 1;
        while (pos >= 0 && cells[static_cast<std::size_t>(pos)] == n) cells[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++cells[static_cast<std::size_t>(pos)];
    }
    return out;
}

std::vector<SchemeParams> profiles() {
    std::vector<SchemeParams> out;
    for (const auto& q : std::vector<std::vector<int>>{{3}, {2, 2}, {2, 3}, {3, 2}, {2, 2, 2}, {2, 3, 2}})
        for (int n = 1; n <= 3; ++n) out.emplace_back(q, n);
    return out;
}

}  // namespace

TEST(LambdaSet, Examples) {
    const auto a = lambda_set(SchemeParams({2, 2}, 1));
    EXPECT_EQ(a.pairs, (std::vector<std::pair<int, int>>{{2, 2}}));
    EXPECT_EQ(a.epsilon, 0);
    const auto b = lambda_set(SchemeParams({2, 3}, 1));
    EXPECT_EQ(b.pairs, (std::vector<std::pair<int, int>>{{2, 1}, {2, 2}}));
    EXPECT_EQ(b.epsilon, 1);
    const auto c = lambda_set(SchemeParams({3}, 1));
    EXPECT_EQ(c.pairs, (std::vector<std::pair<int, int>>{{1, 1}}));
    EXPECT_EQ(c.epsilon, 1);
    EXPECT_EQ(lambda_set(SchemeParams({2}, 1)).size(), 0u);
}

TEST(LambdaSet, SizeFormula) {
    for (const auto& q : std::vector<std::vector<int>>{{3}, {2, 2}, {3, 3}, {2, 3, 2}, {3, 2, 4}, {2, 2, 2, 2}}) {
        SchemeParams p(q, 1);
        const auto l = lambda_set(p);
        const auto m = static_cast<std::size_t>(p.m());
        EXPECT_EQ(l.size(), m * (m - 1) / 2 + static_cast<std::size_t>(l.epsilon));
        EXPECT_GE(l.size(), 1u);
    }
}

TEST(Theta, Examples) {
    SchemeParams p({2, 2}, 2);
    EXPECT_EQ(theta_enumerate(Shape({0, 2}), Shape({0, 2}), p), (std::vector<ThetaMatrix>{{{0, 0}, {0, 2}}}));
    EXPECT_TRUE(theta_enumerate(Shape({1, 1}), Shape({0, 2}), p).empty());
}

TEST(Theta, TopMarginContainsCornerMatrix) {
    for (const auto& p : profiles()) {
        const auto m = static_cast<std::size_t>(p.m());
        std::vector<int> top(m, 0);
        top.back() = p.n;
        bool found = false;
        for (const auto& c : theta_enumerate(Shape(top), Shape(top), p)) found = found || c[m - 1][m - 1] == p.n;
        EXPECT_TRUE(found) << p.label();
    }
}

TEST(Theta, MatchesBruteForce) {
    for (const auto& p : profiles()) {
        for (const auto& l : margin_shapes(p))
            for (const auto& u : margin_shapes(p)) EXPECT_EQ(theta_enumerate(l, u, p), brute_theta(l, u, p));
    }
}

TEST(Theta, RejectsBadMargins) {
    EXPECT_THROW(theta_enumerate(Shape({1, 0}), Shape({0, 2}), SchemeParams({2, 2}, 2)), InvalidArgument);
    EXPECT_THROW(theta_feasible(Shape({2}), Shape({0, 2}), SchemeParams({2, 2}, 2)), InvalidArgument);
}

TEST(Feasibility, Examples) {
    SchemeParams p({2, 2}, 2);
    EXPECT_TRUE(theta_feasible(Shape({0, 2}), Shape({0, 2}), p));
    for (const auto& u : margin_shapes(p)) EXPECT_FALSE(theta_feasible(Shape({2, 0}), u, p));
    EXPECT_TRUE(theta_feasible(Shape({0, 2}), Shape({1, 1}), SchemeParams({2, 3}, 2)));
}

TEST(Feasibility, EquivalentToNonEmpty) {
    auto all = profiles();
    for (const auto& q : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 3}, {2, 3, 2}, {3, 2, 2}})
        all.emplace_back(q, 4);
    for (const auto& p : all)
        for (const auto& l : margin_shapes(p))
            for (const auto& u : margin_shapes(p)) {
                const auto f = theta_feasibility(l, u, p);
                EXPECT_EQ(f.row_side, f.column_side);
                EXPECT_EQ(f.row_side, !theta_enumerate(l, u, p).empty())
                    << p.label() << " " << l.to_string() << " " << u.to_string();
            }
}

TEST(Counting, ThetaTotalIsBinomial) {
    for (const auto& p : profiles()) EXPECT_EQ(theta_total(p), theta_binomial(p)) << p.label();
}

TEST(Omega, Examples) {
    const auto a = omega_set(SchemeParams({2, 2}, 2));
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a[0].first, Shape({0, 2}));
    EXPECT_EQ(omega_set(SchemeParams({2, 3}, 2)).size(), 3u);
    SchemeParams outside({2, 3, 2}, 2);
    EXPECT_FALSE(omega_binomial_condition(outside));
    EXPECT_LT(omega_set(outside).size(), theta_binomial(outside));
}

TEST(Omega, BinomialUnderConditions) {
    for (const auto& p : profiles()) {
        if (!omega_binomial_condition(p)) continue;
        EXPECT_EQ(omega_set(p).size(), theta_binomial(p)) << p.label();
    }
}

TEST(Omega, ConditionCases) {
    EXPECT_TRUE(omega_binomial_condition(SchemeParams({3}, 3)));
    EXPECT_FALSE(omega_binomial_condition(SchemeParams({2}, 3)));
    EXPECT_TRUE(omega_binomial_condition(SchemeParams({2, 5}, 4)));
    EXPECT_TRUE(omega_binomial_condition(SchemeParams({3, 2, 3}, 2)));
    EXPECT_FALSE(omega_binomial_condition(SchemeParams({2, 3, 2}, 2)));
    EXPECT_TRUE(omega_binomial_condition(SchemeParams({2, 3, 2, 2}, 1)));
}

TEST(LambdaJson, Form) {
    EXPECT_EQ(nlohmann::json(lambda_set(SchemeParams({2, 3}, 1))).dump(),
              R"({"epsilon":1,"pairs":[[2,1],[2,2]],"size":2})");
}
