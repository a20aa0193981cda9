#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <brieskorn/linalg.hpp>

using namespace brieskorn;

namespace {

SymMat from_rows(const std::vector<std::vector<long long>>& rows) {
    SymMat m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) m.at(i, j) = rows[i][j];
    return m;
}

// E8 as the plumbing tree on a degree-3 center with arms 1, 2, 4, all -2
SymMat e8_negative() {
    SymMat m = diag_matrix(std::vector<Int>(8, Int(-2)));
    auto link = [&m](int i, int j) { m.at(i, j) = m.at(j, i) = 1; };
    link(0, 1);
    link(0, 2);
    link(2, 3);
    link(0, 4);
    link(4, 5);
    link(5, 6);
    link(6, 7);
    return m;
}

}  // namespace

TEST_CASE("determinant by exact elimination") {
    CHECK(det(diag_matrix({Int(2), Int(3), Int(5)})) == 30);
    CHECK(det(from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(det(from_rows({{2, 1}, {1, 2}})) == 3);
    CHECK(det(e8_negative()) == 1);
    SymMat z(3);
    CHECK(det(z) == 0);
}

TEST_CASE("negative definiteness via leading principal minors") {
    CHECK(is_negative_definite(diag_matrix({Int(-1), Int(-2)})));
    CHECK(is_negative_definite(e8_negative()));
    CHECK(!is_negative_definite(diag_matrix({Int(1), Int(-2)})));
    CHECK(!is_negative_definite(from_rows({{0, 1}, {1, 0}})));
    CHECK(!is_negative_definite(from_rows({{-1, 2}, {2, -1}})));
}

TEST_CASE("signature handles definite and hyperbolic blocks") {
    CHECK(signature(e8_negative()) == -8);
    CHECK(signature(diag_matrix({Int(1), Int(-1), Int(-1)})) == -1);
    // hyperbolic plane: zero diagonal, off-diagonal coupling, signature 0
    CHECK(signature(from_rows({{0, 1}, {1, 0}})) == 0);
    CHECK(signature(from_rows({{0, 3}, {3, 0}})) == 0);
    SymMat h4 = from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 2, 0}});
    CHECK(signature(h4) == 0);
    CHECK_THROWS_AS(signature(diag_matrix({Int(1), Int(0)})), domain_error);
}

TEST_CASE("gf2 solve recovers the unique solution") {
    SymMat a = from_rows({{1, 1, 0}, {1, 1, 1}, {0, 1, 1}});
    std::vector<std::uint8_t> b = {0, 1, 1};
    std::vector<std::uint8_t> x = gf2_solve_unique(a, b);
    REQUIRE(x.size() == 3);
    for (int i = 0; i < 3; ++i) {
        int acc = 0;
        for (int j = 0; j < 3; ++j) acc ^= (to_int64(a.at(i, j)) & 1) & x[j];
        CHECK(acc == b[i]);
    }
    // singular system mod 2 is a contract violation and must throw
    SymMat sing = from_rows({{1, 1}, {1, 1}});
    CHECK_THROWS_AS(gf2_solve_unique(sing, std::vector<std::uint8_t>{0, 1}), internal_error);
}

TEST_CASE("integer kernel basis spans the kernel") {
    // rank-1 matrix on 3 columns: kernel has rank 2
    std::vector<std::vector<Int>> rows = {{Int(2), Int(4), Int(6)}};
    std::vector<std::vector<Int>> k = kernel_basis(rows);
    REQUIRE(k.size() == 2);
    for (const auto& v : k) {
        Int acc = 0;
        for (int j = 0; j < 3; ++j) acc += rows[0][j] * v[j];
        CHECK(acc == 0);
    }
    std::vector<std::vector<Int>> sum = {{Int(1), Int(1), Int(1)}};
    auto k2 = kernel_basis(sum);
    REQUIRE(k2.size() == 2);
    // (1,0,-1) must be an integer combination of the basis: solve small system
    // by brute force over coefficients in [-3,3]
    bool found = false;
    for (int a2 = -3; a2 <= 3 && !found; ++a2)
        for (int b2 = -3; b2 <= 3 && !found; ++b2) {
            bool same = true;
            std::vector<Int> target = {Int(1), Int(0), Int(-1)};
            for (int j = 0; j < 3; ++j)
                if (Int(a2) * k2[0][j] + Int(b2) * k2[1][j] != target[j]) same = false;
            found = same;
        }
    CHECK(found);
}

TEST_CASE("conjugation and bilinear forms") {
    SymMat m = diag_matrix({Int(2), Int(3)});
    // U = [[1,1],[0,1]] as columns
    std::vector<std::vector<Int>> u = {{Int(1), Int(0)}, {Int(1), Int(1)}};
    SymMat c = conjugate(m, u);
    CHECK(c.at(0, 0) == 2);
    CHECK(c.at(0, 1) == 2);
    CHECK(c.at(1, 1) == 5);
    CHECK(det(c) == det(m));

    std::vector<Int> x = {Int(1), Int(2)};
    std::vector<Int> y = {Int(3), Int(-1)};
    CHECK(bilinear(m, x, y) == 2 * 3 + 3 * 2 * (-1));
}

TEST_CASE("randomized determinant agrees with cofactor expansion") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        SymMat m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m.at(i, j) = m.at(j, i) = coef(rng);

        // textbook recursive expansion as the oracle
        struct Expand {
            static Int run(const SymMat& a, std::vector<int> cols, int row) {
                if (cols.empty()) return Int(1);
                Int acc = 0;
                int sign = 1;
                for (std::size_t k = 0; k < cols.size(); ++k) {
                    std::vector<int> rest;
                    for (std::size_t t = 0; t < cols.size(); ++t)
                        if (t != k) rest.push_back(cols[t]);
                    acc += Int(sign) * a.at(row, cols[k]) * run(a, rest, row + 1);
                    sign = -sign;
                }
                return acc;
            }
        };
        std::vector<int> cols(n);
        for (int i = 0; i < n; ++i) cols[i] = i;
        CHECK(det(m) == Expand::run(m, cols, 0));
    }
}
