#pragma once

// Minimal characteristic norm of a negative definite unimodular form, the
// d-invariant / delta it induces, and a brute-force oracle for tests.
//
// Conventions: M is the (negative definite) intersection form, G = -M the
// positive definite Gram matrix. Characteristic vectors are the coset w + 2Z^s
// where w is the Wu class; their G-norms are congruent to s mod 8 and the
// minimum N_min satisfies 0 <= N_min <= s (Elkies), with d = (s - N_min)/4.
//
// The sphere enumeration itself is exact-integer Fincke-Pohst on the shifted
// coset, radius grown in steps of 8. Run naively on the whole form this is
// exponentially infeasible at the ranks reached by larger Seifert inputs
// (a form close to the cubical lattice has ~2^s minimal characteristic
// vectors, and every empty radius level below the minimum costs a walk over
// that many dead branches), so the form is first split into orthogonal
// summands: support components, then the Z^a summand spanned by all norm-1
// vectors, then an evenness shortcut for the orthogonal rest. Characteristic
// cosets and minimal norms are additive over orthogonal splittings and
// orthogonal summands of a unimodular lattice are unimodular, so the radius
// protocol applies summand by summand unchanged. Every shortcut's result is
// re-verified against the definition (characteristic + claimed norm) before
// being returned.

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "error.hpp"
#include "linalg.hpp"
#include "plumbing.hpp"
#include "seifert.hpp"

namespace brieskorn {

struct LatticeReport {
    int rank = 0;
    Int min_char_norm = 0;
    Int d = 0;
    Int delta = 0;
    std::vector<Int> witness;  // characteristic vector of minimal norm
};

namespace detail {

// Q(x) = sum_k d[k] * (x[var[k]] + sum_{(j,c) in mu[k]} c * x[j])^2,
// where every j referenced by step k is eliminated at a later step.
// Enumeration assigns variables in reverse elimination order, so each term's
// cross references are already fixed when its own variable is chosen.
struct Ldl {
    int n = 0;
    std::vector<Rat> d;
    std::vector<int> var;
    std::vector<std::vector<std::pair<int, Rat>>> mu;

    Rat det() const {
        Rat p(1);
        for (const auto& dk : d) p *= dk;
        return p;
    }
};

// Leaf-first elimination for forms whose support graph is a forest (plumbing
// trees). No fill-in occurs: eliminating a leaf only updates its neighbor's
// diagonal, so the whole LDL costs O(n) big-number operations and every mu
// row has at most one entry. Returns false when the support has a cycle.
inline bool build_ldl_tree(const SymMat& g, Ldl& out) {
    int n = g.n;
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.at(i, j) != 0) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    std::vector<int> deg(n);
    std::vector<int> stack;
    for (int i = 0; i < n; ++i) {
        deg[i] = static_cast<int>(adj[i].size());
        if (deg[i] <= 1) stack.push_back(i);
    }
    std::vector<char> gone(n, 0);
    std::vector<Rat> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = Rat(g.at(i, i));

    out = Ldl{};
    out.n = n;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (gone[v]) continue;
        gone[v] = 1;
        int p = -1;
        for (int u : adj[v])
            if (!gone[u]) { p = u; break; }
        Rat dv = diag[v];
        if (!(dv > 0)) throw domain_error("form is not definite");
        out.var.push_back(v);
        out.d.push_back(dv);
        if (p >= 0) {
            Rat c(g.at(v, p));
            out.mu.push_back({{p, c / dv}});
            diag[p] -= c * c / dv;
            if (--deg[p] <= 1) stack.push_back(p);
        } else {
            out.mu.push_back({});
        }
    }
    if (static_cast<int>(out.var.size()) < n) return false;  // cycle somewhere
    return true;
}

inline void build_ldl_dense(const SymMat& g, Ldl& out) {
    int n = g.n;
    check_internal(n <= 128, "dense LDL: rank too large for the dense path");
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i][j] = Rat(g.at(i, j));
    out = Ldl{};
    out.n = n;
    for (int k = 0; k < n; ++k) {
        Rat dk = w[k][k];
        if (!(dk > 0)) throw domain_error("form is not definite");
        out.var.push_back(k);
        out.d.push_back(dk);
        std::vector<std::pair<int, Rat>> row;
        for (int j = k + 1; j < n; ++j)
            if (w[k][j] != 0) row.emplace_back(j, w[k][j] / dk);
        out.mu.push_back(std::move(row));
        for (int i = k + 1; i < n; ++i) {
            if (w[k][i] == 0) continue;
            Rat f = w[k][i] / dk;
            for (int j = k + 1; j < n; ++j) w[i][j] -= f * w[k][j];
        }
    }
}

inline Ldl build_ldl(const SymMat& g) {
    Ldl l;
    if (build_ldl_tree(g, l)) return l;
    build_ldl_dense(g, l);
    return l;
}

// Depth-first Fincke-Pohst over x with Q(x) <= bound, x[v] ranging over all
// integers (parity == nullptr) or over the class parity[v] mod 2. Candidates
// at each level run in ascending order, so the traversal is deterministic and
// the first full vector found is a reproducible witness. The partial sums
// equal the minimum of Q over all real completions, so a prefix is cut as
// soon as no completion could stay inside the radius.
struct Enumerator {
    const Ldl& L;
    const std::vector<int>* parity;  // indexed by variable
    Rat bound;
    bool stop_at_first;
    std::vector<std::vector<Int>> sols;
    std::vector<Int> x;

    Enumerator(const Ldl& l, const std::vector<int>* par, Rat b, bool first)
        : L(l), parity(par), bound(std::move(b)), stop_at_first(first),
          x(static_cast<std::size_t>(l.n), Int(0)) {}

    bool run() { return descend(L.n - 1, Rat(0)); }

    bool descend(int k, const Rat& partial) {
        if (k < 0) {
            if (parity == nullptr) {
                bool all_zero = true;
                for (const auto& xi : x)
                    if (xi != 0) { all_zero = false; break; }
                if (all_zero) return false;  // the lattice's zero vector
            }
            sols.push_back(x);
            return stop_at_first;
        }
        const Rat& d = L.d[k];
        int v = L.var[k];
        Rat c(0);
        for (const auto& [j, m] : L.mu[k])
            if (x[j] != 0) c += m * Rat(x[j]);
        Rat rem = bound - partial;

        // start left of the admissible interval (double guess, exact fix)
        double cd = c.convert_to<double>();
        double rd = (rem / d).convert_to<double>();
        double r = rd > 0 ? std::sqrt(rd) : 0.0;
        Int x0(static_cast<long long>(std::floor(-cd - r)) - 2);
        int step = 1;
        if (parity != nullptr) {
            step = 2;
            x0 += mod_pos(Int((*parity)[v]) - x0, Int(2));
        }
        while (true) {
            Rat t = Rat(x0) + c;
            if (t <= 0 && d * t * t >= rem) break;
            x0 -= step;
        }
        for (Int xv = x0;; xv += step) {
            Rat t = Rat(xv) + c;
            Rat q = d * t * t;
            if (q > rem) {
                if (t > 0) break;  // right of the interval: done at this level
                continue;          // still left of it
            }
            x[v] = xv;
            if (descend(k - 1, partial + q)) { x[v] = 0; return true; }
        }
        x[v] = 0;
        return false;
    }
};

inline std::vector<Int> matvec(const SymMat& g, const std::vector<Int>& x) {
    std::vector<Int> r(g.n, Int(0));
    for (int i = 0; i < g.n; ++i) {
        Int acc(0);
        for (int j = 0; j < g.n; ++j)
            if (x[j] != 0) acc += g.at(i, j) * x[j];
        r[i] = acc;
    }
    return r;
}

// Is xi characteristic for g, i.e. <xi, e_i> = <e_i, e_i> mod 2 for all i?
inline bool is_characteristic(const SymMat& g, const std::vector<Int>& xi) {
    auto gx = matvec(g, xi);
    for (int i = 0; i < g.n; ++i)
        if (!is_even(gx[i] - g.at(i, i))) return false;
    return true;
}

struct CharMin {
    Int n_min;
    std::vector<Int> witness;
};

CharMin char_min_posdef(const SymMat& g, int depth);  // forward

// One connected component of the support graph (g restricted to it).
inline CharMin char_min_component(const SymMat& g, int depth) {
    int r = g.n;
    Ldl ldl = build_ldl(g);  // also proves positive definiteness
    if (ldl.det() != 1) throw domain_error("form is not unimodular");

    auto w = wu_class(g);  // 0/1 lift of the characteristic coset
    bool even_lattice = true;
    for (const auto& wi : w)
        if (wi != 0) { even_lattice = false; break; }
    if (even_lattice)
        return {Int(0), std::vector<Int>(r, Int(0))};

    // All norm-1 vectors, one per +-pair. Distinct ones are orthogonal
    // (Cauchy-Schwarz is strict on non-proportional integer vectors), so they
    // span an orthonormal Z^a summand contributing exactly a to the minimum.
    std::vector<std::vector<Int>> units;
    {
        Enumerator e(ldl, nullptr, Rat(1), false);
        e.run();
        for (auto& u : e.sols) {
            bool canonical = false;
            for (const auto& ui : u) {
                if (ui == 0) continue;
                canonical = ui > 0;
                break;
            }
            if (canonical) units.push_back(std::move(u));
        }
    }
    int a = static_cast<int>(units.size());

    if (a == 0) {
        // No unit summand: enumerate the coset directly, radius grown by 8.
        // Normal-form star lattices (all self-intersections <= -2) land here
        // at any rank; their minimum stays small, so the very first radii
        // already succeed. The cap is a safety net against adversarial dense
        // input, sized well past the ranks Seifert trees reach at sane
        // multiplicities (a rank-146 tree is a product of ~5000 already).
        check_internal(r <= 200, "char_min: unit-free odd component too large");
        std::vector<int> parity(r);
        for (int i = 0; i < r; ++i) parity[i] = static_cast<int>(w[i]);
        Int n0(r % 8);
        if (n0 == 0) n0 = 8;  // norm 0 would need the even case handled above
        for (Int n = n0; n <= r; n += 8) {
            Enumerator e(ldl, &parity, Rat(n), true);
            if (e.run()) {
                const auto& xi = e.sols.front();
                check_internal(bilinear(g, xi, xi) == n, "char_min: witness norm drifted");
                return {n, xi};
            }
        }
        throw internal_error("char_min: Elkies bound violated (no characteristic vector found)");
    }

    std::vector<std::vector<Int>> gu(a);
    for (int i = 0; i < a; ++i) gu[i] = matvec(g, units[i]);
    for (int i = 0; i < a; ++i) {
        check_internal(bilinear(g, units[i], units[i]) == 1, "char_min: unit of wrong norm");
        for (int j = i + 1; j < a; ++j) {
            Int dot(0);
            for (int t = 0; t < r; ++t) dot += units[j][t] * gu[i][t];
            check_internal(dot == 0, "char_min: units not orthogonal");
        }
    }

    // Project the Wu lift onto the orthogonal complement of the units. The
    // complement lattice is even iff the projection lands in 2L, and in that
    // case the minimum is a with witness u_1 + ... + u_a.
    std::vector<Int> y(w);
    for (int i = 0; i < a; ++i) {
        Int ci(0);
        for (int t = 0; t < r; ++t) ci += w[t] * gu[i][t];
        check_internal(!is_even(ci), "char_min: unit pairs evenly with the Wu class");
        for (int t = 0; t < r; ++t) y[t] -= ci * units[i][t];
    }
    bool rest_even = true;
    for (const auto& yt : y)
        if (!is_even(yt)) { rest_even = false; break; }

    if (rest_even) {
        std::vector<Int> witness(r, Int(0));
        for (int i = 0; i < a; ++i)
            for (int t = 0; t < r; ++t) witness[t] += units[i][t];
        return {Int(a), witness};
    }

    // Odd orthogonal rest: materialize it with an integer kernel basis and
    // recurse. It contains no norm-1 vectors (those all pair nontrivially
    // with some unit), so the recursion bottoms out in direct enumeration.
    check_internal(depth < 3, "char_min: decomposition did not terminate");
    check_internal(r - a <= 200, "char_min: odd orthogonal rest too large");
    auto kb = kernel_basis(gu);
    check_internal(static_cast<int>(kb.size()) == r - a, "char_min: kernel rank mismatch");
    SymMat g2 = conjugate(g, kb);
    CharMin inner = char_min_posdef(g2, depth + 1);
    std::vector<Int> witness(r, Int(0));
    for (int i = 0; i < a; ++i)
        for (int t = 0; t < r; ++t) witness[t] += units[i][t];
    for (int c = 0; c < static_cast<int>(kb.size()); ++c)
        for (int t = 0; t < r; ++t) witness[t] += inner.witness[c] * kb[c][t];
    return {Int(a) + inner.n_min, witness};
}

inline CharMin char_min_posdef(const SymMat& g, int depth) {
    int n = g.n;
    if (n == 0) return {Int(0), {}};

    // split by support connectivity
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int seed = 0; seed < n; ++seed) {
        if (comp[seed] >= 0) continue;
        std::vector<int> stack{seed};
        comp[seed] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u)
                if (comp[u] < 0 && g.at(v, u) != 0) {
                    comp[u] = ncomp;
                    stack.push_back(u);
                }
        }
        ++ncomp;
    }

    Int total(0);
    std::vector<Int> witness(n, Int(0));
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (comp[i] == c) idx.push_back(i);
        SymMat sub(static_cast<int>(idx.size()));
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j)
                sub.at(static_cast<int>(i), static_cast<int>(j)) = g.at(idx[i], idx[j]);
        CharMin cm = char_min_component(sub, depth);
        check_internal((cm.n_min - Int(sub.n)) % 8 == 0, "char_min: norm not rank mod 8");
        check_internal(cm.n_min >= 0 && cm.n_min <= sub.n, "char_min: Elkies bound violated");
        total += cm.n_min;
        for (std::size_t i = 0; i < idx.size(); ++i) witness[idx[i]] = cm.witness[i];
    }
    return {total, witness};
}

}  // namespace detail

// N_min, witness, d and delta for a negative definite unimodular form M.
inline LatticeReport min_characteristic_norm(const SymMat& m) {
    check_internal(m.is_symmetric(), "min_characteristic_norm: matrix not symmetric");
    SymMat g = m.negated();
    detail::CharMin cm = detail::char_min_posdef(g, 0);

    // re-verify the combined result against the definition
    check_internal(detail::is_characteristic(g, cm.witness),
                   "min_characteristic_norm: witness not characteristic");
    check_internal(bilinear(g, cm.witness, cm.witness) == cm.n_min,
                   "min_characteristic_norm: witness norm mismatch");
    check_internal(cm.n_min >= 0 && cm.n_min <= m.n,
                   "min_characteristic_norm: Elkies bound violated");
    check_internal((Int(m.n) - cm.n_min) % 8 == 0,
                   "min_characteristic_norm: norm not congruent to rank mod 8");

    LatticeReport r;
    r.rank = m.n;
    r.min_char_norm = cm.n_min;
    r.d = (Int(m.n) - cm.n_min) / 4;
    check_internal(is_even(r.d), "min_characteristic_norm: d not even");
    r.delta = r.d / 2;
    r.witness = std::move(cm.witness);
    return r;
}

// Exhaustive test oracle: minimum of the (-M)-norm over xi = w + 2z with
// every z coordinate in [-box_bound, box_bound]. Dumb by design (no pruning),
// int64 internally; refuses inputs where that could overflow.
inline Int char_norm_oracle(const SymMat& m, int box_bound) {
    int n = m.n;
    check_internal(m.is_symmetric(), "char_norm_oracle: matrix not symmetric");
    if (n > 14) throw domain_error("char_norm_oracle: rank too large for exhaustive mode");
    if (n == 0) return Int(0);
    SymMat gm = m.negated();
    std::vector<std::vector<std::int64_t>> g(n, std::vector<std::int64_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (abs_int(gm.at(i, j)) > 1000000)
                throw domain_error("char_norm_oracle: entries too large for exhaustive mode");
            g[i][j] = to_int64(gm.at(i, j));
        }
    auto wu = wu_class(gm);
    std::vector<std::int64_t> w(n);
    for (int i = 0; i < n; ++i) w[i] = to_int64(wu[i]);

    std::vector<std::int64_t> xi(n, 0);
    // lin[i] at level l holds sum_{k<l} g[i][k] * xi[k]
    std::vector<std::vector<std::int64_t>> lin(n + 1, std::vector<std::int64_t>(n, 0));
    std::int64_t best = -1;

    struct Walker {
        int n, box;
        const std::vector<std::vector<std::int64_t>>& g;
        const std::vector<std::int64_t>& w;
        std::vector<std::int64_t>& xi;
        std::vector<std::vector<std::int64_t>>& lin;
        std::int64_t& best;

        void go(int level, std::int64_t q) {
            if (level == n - 1) {
                // closed loop over the last coordinate
                std::int64_t base = 2 * lin[level][level];
                std::int64_t dd = g[level][level];
                for (int z = -box; z <= box; ++z) {
                    std::int64_t v = w[level] + 2 * z;
                    std::int64_t total = q + v * (base + dd * v);
                    if (best < 0 || total < best) best = total;
                }
                return;
            }
            for (int z = -box; z <= box; ++z) {
                std::int64_t v = w[level] + 2 * z;
                std::int64_t dq = v * (2 * lin[level][level] + g[level][level] * v);
                xi[level] = v;
                for (int i = level + 1; i < n; ++i)
                    lin[level + 1][i] = lin[level][i] + g[i][level] * v;
                go(level + 1, q + dq);
            }
            xi[level] = 0;
        }
    } walker{n, box_bound, g, w, xi, lin, best};
    walker.go(0, 0);
    check_internal(best >= 0, "char_norm_oracle: positive definiteness violated");
    return Int(best);
}

// Box bound sufficient for the oracle to cover every characteristic vector of
// norm <= s, from the Cauchy-Schwarz bound |xi_i| <= sqrt(s * (G^-1)_ii).
// Far too conservative in practice; tests mostly use smaller boxes.
inline int suggested_box_bound(const SymMat& m) {
    int n = m.n;
    SymMat g = m.negated();
    Int dg = det(g);
    check_internal(dg == 1, "suggested_box_bound: form not unimodular");
    Int worst(0);
    for (int i = 0; i < n; ++i) {
        SymMat minor(n - 1);
        for (int r = 0, rr = 0; r < n; ++r) {
            if (r == i) continue;
            for (int c = 0, cc = 0; c < n; ++c) {
                if (c == i) continue;
                minor.at(rr, cc) = g.at(r, c);
                ++cc;
            }
            ++rr;
        }
        Int cof = det(minor);  // (G^-1)_ii for det 1
        Int bi = boost::multiprecision::sqrt(Int(n) * cof) + 1;
        if (bi > worst) worst = bi;
    }
    // z range: xi = w + 2z with w in {0,1}
    return static_cast<int>(to_int64((worst + 1) / 2 + 1));
}

// Signed delta of one Seifert summand: the standard orientation bounds the
// negative definite plumbing, d = (s - N_min)/4, delta = d/2; orientation
// reversal negates delta.
inline Int delta_of(const Summand& s) {
    if (s.is_trivial()) return Int(0);
    auto inv = normalize(s.multiplicities);
    auto graph = build_plumbing(inv);
    SymMat m = intersection_matrix(graph);
    if (!is_negative_definite(m))
        throw domain_error("plumbing form is not negative definite");
    auto rep = min_characteristic_norm(m);
    return s.reversed ? Int(-rep.delta) : rep.delta;
}

}  // namespace brieskorn
