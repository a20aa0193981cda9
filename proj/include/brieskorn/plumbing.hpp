#pragma once

// Star-shaped negative-definite plumbing graphs for Seifert homology spheres,
// their intersection forms, Wu classes and the Neumann-Siebenmann mu-bar.

#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "error.hpp"
#include "linalg.hpp"
#include "seifert.hpp"

namespace brieskorn {

// Negative (Hirzebruch-Jung) continued fraction expansion
//   p/q = c_1 - 1/(c_2 - 1/(... - 1/c_k)),  all c_j >= 2.
// Requires p > q >= 1, gcd(p, q) = 1.
inline std::vector<Int> neg_cont_frac(Int p, Int q) {
    if (!(p > q && q >= 1)) throw domain_error("neg_cont_frac: need p > q >= 1");
    if (gcd(p, q) != 1) throw domain_error("neg_cont_frac: p, q not coprime");
    const Rat target = Rat(p) / Rat(q);
    std::vector<Int> cs;
    while (q > 0) {
        Int c = ceil_div(p, q);
        cs.push_back(c);
        Int r = c * q - p;
        p = q;
        q = r;
    }
    Rat v(0);
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        check_internal(*it >= 2, "neg_cont_frac: coefficient < 2");
        v = (v == 0) ? Rat(*it) : Rat(*it) - 1 / v;
    }
    check_internal(v == target, "neg_cont_frac: expansion does not re-evaluate to p/q");
    return cs;
}

struct PlumbingGraph {
    std::vector<Int> weights;                 // vertex weights, vertex 0 = central
    std::vector<std::pair<int, int>> edges;   // (i, j), i < j, sorted
    std::vector<std::vector<int>> arms;       // per fiber: vertex ids, center outward

    int rank() const { return static_cast<int>(weights.size()); }
};

// Star-shaped plumbing for the normalized Seifert invariants: central vertex
// of weight e0, one leg per fiber with weights -c_1,...,-c_k from the
// expansion a_i/b_i = [c_1,...,c_k]. The form is checked negative definite
// and unimodular, not assumed.
inline PlumbingGraph build_plumbing(const SeifertInvariants& inv) {
    PlumbingGraph g;
    g.weights.push_back(inv.e0);
    for (const auto& [a, b] : inv.fibers) {
        auto cs = neg_cont_frac(a, b);
        std::vector<int> arm;
        int prev = 0;
        for (const auto& c : cs) {
            int v = g.rank();
            g.weights.push_back(-c);
            g.edges.emplace_back(prev, v);
            arm.push_back(v);
            prev = v;
        }
        g.arms.push_back(std::move(arm));
    }
    return g;
}

inline SymMat intersection_matrix(const PlumbingGraph& g) {
    SymMat m(g.rank());
    for (int i = 0; i < g.rank(); ++i) m.at(i, i) = g.weights[i];
    for (const auto& [i, j] : g.edges) {
        m.at(i, j) = 1;
        m.at(j, i) = 1;
    }
    return m;
}

// Wu class of a nonsingular symmetric integer matrix with odd determinant:
// the unique 0/1 vector w with M w = diag(M) mod 2, i.e. <w, x> = <x, x>
// mod 2 for all x. Returned as the integer lift with entries in {0, 1}.
inline std::vector<Int> wu_class(const SymMat& m) {
    check_internal(m.is_symmetric(), "wu_class: matrix not symmetric");
    std::vector<std::uint8_t> rhs(m.n);
    for (int i = 0; i < m.n; ++i) rhs[i] = is_even(m.at(i, i)) ? 0 : 1;
    auto x = gf2_solve_unique(m, rhs);
    std::vector<Int> w(m.n);
    for (int i = 0; i < m.n; ++i) w[i] = x[i];
    // <w, e_i> = <e_i, e_i> mod 2 for every basis vector
    for (int i = 0; i < m.n; ++i) {
        Int dot(0);
        for (int j = 0; j < m.n; ++j) dot += m.at(i, j) * w[j];
        check_internal((dot - m.at(i, i)) % 2 == 0, "wu_class: not characteristic");
    }
    return w;
}

struct WuReport {
    int rank = 0;
    int sig = 0;                 // signature of the intersection form
    std::vector<Int> wu;         // 0/1 integer lift
    Int wu_square = 0;           // w^T M w
    Int mu_bar = 0;              // (sig - wu_square) / 8
    int rokhlin = 0;             // mu_bar mod 2, in {0, 1}
};

// mu-bar of the Seifert homology sphere with the given plumbing, via the
// Wu class of the (negative definite) intersection form.
inline WuReport mu_bar_of_plumbing(const PlumbingGraph& g) {
    SymMat m = intersection_matrix(g);
    if (!is_negative_definite(m))
        throw domain_error("plumbing form is not negative definite");
    Int d = det(m);
    if (d != 1 && d != -1)
        throw domain_error("plumbing form is not unimodular");

    WuReport r;
    r.rank = m.n;
    r.sig = -m.n;  // negative definite
    r.wu = wu_class(m);
    r.wu_square = bilinear(m, r.wu, r.wu);
    Int num = Int(r.sig) - r.wu_square;
    check_internal(num % 8 == 0, "mu_bar: sig - w^2 not divisible by 8");
    r.mu_bar = num / 8;
    r.rokhlin = is_even(r.mu_bar) ? 0 : 1;
    return r;
}

inline std::string to_dot(const PlumbingGraph& g) {
    std::string out = "graph plumbing {\n";
    for (int i = 0; i < g.rank(); ++i)
        out += "  v" + std::to_string(i) + " [label=\"" + to_string(g.weights[i]) + "\"];\n";
    for (const auto& [i, j] : g.edges)
        out += "  v" + std::to_string(i) + " -- v" + std::to_string(j) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace brieskorn
