#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include <brieskorn/plumbing.hpp>

using namespace brieskorn;

namespace {

std::vector<Int> ints(std::initializer_list<long long> v) {
    std::vector<Int> out;
    for (long long x : v) out.emplace_back(x);
    return out;
}

PlumbingGraph graph_of(std::initializer_list<long long> mults) {
    return build_plumbing(normalize(ints(mults)));
}

Rat eval_ncf(const std::vector<Int>& cs) {
    // [c_1,...,c_k] = c_1 - 1/(c_2 - 1/(...)) evaluated bottom-up
    Rat v(cs.back());
    for (auto it = cs.rbegin() + 1; it != cs.rend(); ++it) v = Rat(*it) - Rat(1) / v;
    return v;
}

// exhaustive mod-2 search for characteristic vectors; the Wu class must be
// the only one
std::vector<int> brute_wu(const SymMat& m) {
    int n = m.n;
    REQUIRE(n <= 14);
    std::vector<int> found;
    int hits = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            Int acc = 0;
            for (int j = 0; j < n; ++j)
                if (mask >> j & 1u) acc += m.at(i, j);
            if (!is_even(acc - m.at(i, i))) ok = false;
        }
        if (!ok) continue;
        ++hits;
        found.assign(n, 0);
        for (int j = 0; j < n; ++j) found[j] = mask >> j & 1u;
    }
    REQUIRE(hits == 1);
    return found;
}

}  // namespace

TEST_CASE("negative continued fractions on known expansions") {
    CHECK(neg_cont_frac(Int(2), Int(1)) == ints({2}));
    CHECK(neg_cont_frac(Int(7), Int(1)) == ints({7}));
    CHECK(neg_cont_frac(Int(3), Int(2)) == ints({2, 2}));
    CHECK(neg_cont_frac(Int(5), Int(4)) == ints({2, 2, 2, 2}));
    CHECK(neg_cont_frac(Int(11), Int(9)) == ints({2, 2, 2, 2, 3}));
    CHECK(neg_cont_frac(Int(13), Int(2)) == ints({7, 2}));
}

TEST_CASE("negative continued fractions evaluate back to p/q") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 200; ++trial) {
        long long p = 2 + static_cast<long long>(rng() % 400);
        long long q = 1 + static_cast<long long>(rng() % (p - 1));
        if (gcd(Int(p), Int(q)) != 1) continue;
        std::vector<Int> cs = neg_cont_frac(Int(p), Int(q));
        for (const auto& c : cs) CHECK(c >= 2);
        CHECK(eval_ncf(cs) == Rat(p) / Rat(q));
    }
}

TEST_CASE("the Sigma(2,3,5) plumbing is the E8 tree") {
    PlumbingGraph g = graph_of({2, 3, 5});
    REQUIRE(g.rank() == 8);
    for (const auto& w : g.weights) CHECK(w == -2);
    REQUIRE(g.arms.size() == 3);
    std::multiset<std::size_t> lens;
    for (const auto& arm : g.arms) lens.insert(arm.size());
    CHECK(lens == std::multiset<std::size_t>({1, 2, 4}));

    SymMat m = intersection_matrix(g);
    CHECK(det(m) == 1);  // rank 8, det(-M) = det(M)
    CHECK(is_negative_definite(m));
    CHECK(signature(m) == -8);
}

TEST_CASE("small star-shaped plumbings have the expected shape") {
    PlumbingGraph g7 = graph_of({2, 3, 7});
    REQUIRE(g7.rank() == 4);
    CHECK(g7.weights == ints({-1, -2, -3, -7}));

    PlumbingGraph g11 = graph_of({2, 3, 11});
    CHECK(g11.rank() == 9);
    CHECK(signature(intersection_matrix(g11)) == -9);

    PlumbingGraph g345 = graph_of({3, 4, 5});
    CHECK(g345.rank() == 5);
    CHECK(g345.weights == ints({-1, -3, -4, -3, -2}));
}

TEST_CASE("every generated intersection form is unimodular negative definite") {
    for (auto mults : {std::initializer_list<long long>{2, 3, 5},
                       {2, 3, 7},
                       {2, 3, 11},
                       {2, 3, 13},
                       {2, 3, 17},
                       {3, 4, 5},
                       {2, 5, 19},
                       {2, 7, 27},
                       {5, 7, 11},
                       {2, 9, 25},
                       {3, 5, 7, 11, 13}}) {
        PlumbingGraph g = build_plumbing(normalize(ints(mults)));
        SymMat m = intersection_matrix(g);
        CHECK(is_negative_definite(m));
        CHECK(abs_int(det(m)) == 1);
        CHECK(signature(m) == -g.rank());
    }
}

TEST_CASE("wu class matches exhaustive search and is characteristic") {
    for (auto mults : {std::initializer_list<long long>{2, 3, 5},
                       {2, 3, 7},
                       {2, 3, 11},
                       {2, 3, 13},
                       {2, 3, 17},
                       {3, 4, 5},
                       {2, 5, 19}}) {
        SymMat m = intersection_matrix(build_plumbing(normalize(ints(mults))));
        std::vector<Int> wu = wu_class(m);
        std::vector<int> brute = brute_wu(m);
        REQUIRE(wu.size() == brute.size());
        for (std::size_t i = 0; i < wu.size(); ++i) CHECK(wu[i] == brute[i]);
    }
}

TEST_CASE("mu_bar on the reference spaces") {
    auto report = [](std::initializer_list<long long> mults) {
        return mu_bar_of_plumbing(build_plumbing(normalize(ints(mults))));
    };

    WuReport e8 = report({2, 3, 5});
    CHECK(e8.rank == 8);
    CHECK(e8.sig == -8);
    CHECK(e8.wu_square == 0);  // even lattice: zero Wu class
    CHECK(e8.mu_bar == -1);
    CHECK(e8.rokhlin == 1);

    WuReport s7 = report({2, 3, 7});
    CHECK(s7.sig == -4);
    CHECK(s7.wu_square == -12);
    CHECK(s7.mu_bar == 1);
    CHECK(s7.rokhlin == 1);

    WuReport s11 = report({2, 3, 11});
    CHECK(s11.sig == -9);
    CHECK(s11.wu_square == -9);
    CHECK(s11.mu_bar == 0);
    CHECK(s11.rokhlin == 0);

    CHECK(report({2, 5, 19}).mu_bar == 0);
    CHECK(report({2, 7, 27}).mu_bar == 0);
    CHECK(report({3, 4, 5}).mu_bar == 0);
    CHECK(report({2, 3, 13}).mu_bar == 0);
    CHECK(report({2, 3, 17}).mu_bar == -1);
}

TEST_CASE("wu support of Sigma(2,3,7) is the three arm tips") {
    PlumbingGraph g = graph_of({2, 3, 7});
    SymMat m = intersection_matrix(g);
    std::vector<Int> wu = wu_class(m);
    CHECK(wu == ints({0, 1, 1, 1}));
    // support vertices pairwise non-adjacent, so w^2 is the weight sum
    Int sq = bilinear(m, wu, wu);
    CHECK(sq == -12);
}

TEST_CASE("dot output is deterministic and well formed") {
    PlumbingGraph g = graph_of({2, 3, 11});
    std::string d1 = to_dot(g);
    std::string d2 = to_dot(g);
    CHECK(d1 == d2);
    CHECK(d1.find("graph") != std::string::npos);
    CHECK(d1.find("--") != std::string::npos);     // at least one edge
    CHECK(d1.find("-2") != std::string::npos);     // a weight label
}
