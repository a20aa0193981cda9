#pragma once

// Dense exact linear algebra over Z, Q and GF(2), sized for intersection
// forms of plumbing graphs (ranks up to a few hundred).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "arith.hpp"
#include "error.hpp"

namespace brieskorn {

struct SymMat {
    int n = 0;
    std::vector<Int> a;  // row-major n*n

    SymMat() = default;
    explicit SymMat(int size) : n(size), a(static_cast<std::size_t>(size) * size, Int(0)) {}

    Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    bool is_symmetric() const {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    SymMat negated() const {
        SymMat r(n);
        for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = -a[k];
        return r;
    }

    bool operator==(const SymMat& o) const { return n == o.n && a == o.a; }
};

inline SymMat diag_matrix(const std::vector<Int>& d) {
    SymMat m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n; ++i) m.at(i, i) = d[i];
    return m;
}

// Determinant by fraction-free (Bareiss) elimination with row pivoting.
inline Int det(const SymMat& m) {
    int n = m.n;
    if (n == 0) return Int(1);
    std::vector<std::vector<Int>> w(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i][j] = m.at(i, j);
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w[i][k] != 0) { p = i; break; }
            if (p < 0) return Int(0);
            std::swap(w[k], w[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = w[i][j] * w[k][k] - w[i][k] * w[k][j];
                check_internal(t % prev == 0, "det: Bareiss division not exact");
                w[i][j] = t / prev;
            }
        prev = w[k][k];
    }
    return sign > 0 ? w[n - 1][n - 1] : Int(-w[n - 1][n - 1]);
}

// Leading principal minors M_1..M_n by Bareiss without pivoting.
// A zero pivot before the end means some leading minor vanishes; the returned
// vector is truncated at that point (the zero minor is included).
inline std::vector<Int> leading_principal_minors(const SymMat& m) {
    int n = m.n;
    std::vector<Int> minors;
    if (n == 0) return minors;
    std::vector<std::vector<Int>> w(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i][j] = m.at(i, j);
    Int prev(1);
    for (int k = 0; k < n; ++k) {
        minors.push_back(w[k][k]);
        if (w[k][k] == 0) return minors;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = w[i][j] * w[k][k] - w[i][k] * w[k][j];
                check_internal(t % prev == 0, "minors: Bareiss division not exact");
                w[i][j] = t / prev;
            }
        prev = w[k][k];
    }
    return minors;
}

// Sylvester test: negative definite iff all leading minors are nonzero with
// sign (-1)^k. A vanishing leading minor already rules definiteness out.
inline bool is_negative_definite(const SymMat& m) {
    check_internal(m.is_symmetric(), "is_negative_definite: matrix not symmetric");
    auto minors = leading_principal_minors(m);
    if (static_cast<int>(minors.size()) < m.n) return false;
    for (int k = 0; k < m.n; ++k) {
        const Int& mk = minors[k];
        if (mk == 0) return false;
        bool want_neg = (k % 2 == 0);
        if (want_neg != (mk < 0)) return false;
    }
    return true;
}

// Signature of a nonsingular symmetric matrix by rational congruence
// elimination. Diagonal pivots are preferred (largest magnitude first); when
// the remaining block has an all-zero diagonal, a hyperbolic pair is split
// off, contributing +1 and -1.
inline int signature(const SymMat& m) {
    check_internal(m.is_symmetric(), "signature: matrix not symmetric");
    int n = m.n;
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i][j] = Rat(m.at(i, j));
    std::vector<bool> done(n, false);
    int sig = 0;
    int remaining = n;
    while (remaining > 0) {
        int piv = -1;
        for (int i = 0; i < n; ++i) {
            if (done[i] || w[i][i] == 0) continue;
            if (piv < 0 || boost::multiprecision::abs(w[i][i]) > boost::multiprecision::abs(w[piv][piv]))
                piv = i;
        }
        if (piv >= 0) {
            Rat d = w[piv][piv];
            sig += d > 0 ? 1 : -1;
            done[piv] = true;
            --remaining;
            for (int i = 0; i < n; ++i) {
                if (done[i] || w[i][piv] == 0) continue;
                Rat f = w[i][piv] / d;
                for (int j = 0; j < n; ++j) {
                    if (done[j]) continue;
                    w[i][j] -= f * w[piv][j];
                }
            }
            for (int j = 0; j < n; ++j) { w[piv][j] = 0; w[j][piv] = 0; }
            continue;
        }
        // All active diagonal entries vanish: find an off-diagonal coupling.
        int pi = -1, pj = -1;
        for (int i = 0; i < n && pi < 0; ++i) {
            if (done[i]) continue;
            for (int j = i + 1; j < n; ++j) {
                if (done[j]) continue;
                if (w[i][j] != 0) { pi = i; pj = j; break; }
            }
        }
        if (pi < 0) throw domain_error("signature: matrix is singular");
        Rat c = w[pi][pj];  // block [[0, c], [c, 0]]: signature 0
        done[pi] = done[pj] = true;
        remaining -= 2;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            Rat fi = w[i][pi], fj = w[i][pj];
            if (fi == 0 && fj == 0) continue;
            for (int j = 0; j < n; ++j) {
                if (done[j]) continue;
                // subtract the projection onto the hyperbolic plane
                w[i][j] -= (fi * w[pj][j] + fj * w[pi][j]) / c;
            }
        }
        for (int j = 0; j < n; ++j) {
            w[pi][j] = 0; w[j][pi] = 0;
            w[pj][j] = 0; w[j][pj] = 0;
        }
    }
    return sig;
}

// Unique solution of (M mod 2) x = rhs over GF(2). Requires det(M) odd.
inline std::vector<std::uint8_t> gf2_solve_unique(const SymMat& m,
                                                  const std::vector<std::uint8_t>& rhs) {
    int n = m.n;
    check_internal(static_cast<int>(rhs.size()) == n, "gf2_solve_unique: size mismatch");
    int words = (n + 64) / 64;  // one extra column for the rhs
    std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(words, 0));
    auto set_bit = [&](int r, int c) { rows[r][c >> 6] ^= (std::uint64_t(1) << (c & 63)); };
    auto get_bit = [&](int r, int c) -> bool {
        return (rows[r][c >> 6] >> (c & 63)) & 1;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (!is_even(m.at(i, j))) set_bit(i, j);
        if (rhs[i] & 1) set_bit(i, n);
    }
    int row = 0;
    std::vector<int> pivot_of_col(n, -1);
    for (int col = 0; col < n && row < n; ++col) {
        int p = -1;
        for (int r = row; r < n; ++r)
            if (get_bit(r, col)) { p = r; break; }
        if (p < 0) continue;
        std::swap(rows[p], rows[row]);
        for (int r = 0; r < n; ++r) {
            if (r != row && get_bit(r, col))
                for (int w = 0; w < words; ++w) rows[r][w] ^= rows[row][w];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    check_internal(row == n, "gf2_solve_unique: matrix singular mod 2");
    std::vector<std::uint8_t> x(n, 0);
    for (int col = 0; col < n; ++col)
        x[col] = get_bit(pivot_of_col[col], n) ? 1 : 0;
    return x;
}

// Basis of the integer kernel {x in Z^s : V x = 0} for an a x s matrix V,
// via unimodular column operations (Euclidean reduction along each pivot row).
inline std::vector<std::vector<Int>> kernel_basis(const std::vector<std::vector<Int>>& v) {
    if (v.empty()) return {};
    int a = static_cast<int>(v.size());
    int s = static_cast<int>(v[0].size());
    std::vector<std::vector<Int>> w = v;  // a x s, columns get reduced
    std::vector<std::vector<Int>> t(s, std::vector<Int>(s, Int(0)));  // s x s transform
    for (int i = 0; i < s; ++i) t[i][i] = 1;
    auto col_axpy = [&](int dst, int src, const Int& q) {
        // column dst -= q * column src
        for (int r = 0; r < a; ++r) w[r][dst] -= q * w[r][src];
        for (int r = 0; r < s; ++r) t[r][dst] -= q * t[r][src];
    };
    auto col_swap = [&](int c1, int c2) {
        for (int r = 0; r < a; ++r) std::swap(w[r][c1], w[r][c2]);
        for (int r = 0; r < s; ++r) std::swap(t[r][c1], t[r][c2]);
    };
    int fixed = 0;
    for (int r = 0; r < a && fixed < s; ++r) {
        // Euclidean reduction of row r across the active columns. Each pass
        // reduces every entry mod the minimal one, so the minimum strictly
        // shrinks until a single nonzero remains and becomes the pivot.
        while (true) {
            int best = -1;
            for (int c = fixed; c < s; ++c) {
                if (w[r][c] == 0) continue;
                if (best < 0 || abs_int(w[r][c]) < abs_int(w[r][best])) best = c;
            }
            if (best < 0) break;  // row r already zero on the active columns
            bool others = false;
            for (int c = fixed; c < s; ++c) {
                if (c == best || w[r][c] == 0) continue;
                others = true;
                Int q = floor_div(w[r][c], w[r][best]);
                if (q != 0) col_axpy(c, best, q);
            }
            if (!others) {
                col_swap(fixed, best);
                ++fixed;
                break;
            }
        }
    }
    std::vector<std::vector<Int>> basis;
    for (int c = fixed; c < s; ++c) {
        std::vector<Int> col(s);
        for (int r = 0; r < s; ++r) col[r] = t[r][c];
        basis.push_back(std::move(col));
    }
    return basis;
}

// U^T M U for an integer basis-change matrix U given as columns.
inline SymMat conjugate(const SymMat& m, const std::vector<std::vector<Int>>& u_cols) {
    int n = m.n;
    int k = static_cast<int>(u_cols.size());
    std::vector<std::vector<Int>> mu(n, std::vector<Int>(k, Int(0)));  // M * U
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < k; ++c) {
            Int acc(0);
            for (int j = 0; j < n; ++j) acc += m.at(i, j) * u_cols[c][j];
            mu[i][c] = acc;
        }
    SymMat r(k);
    for (int c1 = 0; c1 < k; ++c1)
        for (int c2 = c1; c2 < k; ++c2) {
            Int acc(0);
            for (int i = 0; i < n; ++i) acc += u_cols[c1][i] * mu[i][c2];
            r.at(c1, c2) = acc;
            r.at(c2, c1) = acc;
        }
    return r;
}

// x^T M y.
inline Int bilinear(const SymMat& m, const std::vector<Int>& x, const std::vector<Int>& y) {
    check_internal(static_cast<int>(x.size()) == m.n && static_cast<int>(y.size()) == m.n,
                   "bilinear: size mismatch");
    Int acc(0);
    for (int i = 0; i < m.n; ++i) {
        if (x[i] == 0) continue;
        Int row(0);
        for (int j = 0; j < m.n; ++j)
            if (y[j] != 0) row += m.at(i, j) * y[j];
        acc += x[i] * row;
    }
    return acc;
}

}  // namespace brieskorn
