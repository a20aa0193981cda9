#pragma once

// Pin(2)-equivariant correction terms alpha, beta, gamma for Seifert fibered
// homology spheres from (delta, mu_bar), and their connected-sum values for
// sums of projective negative-fibration pieces.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "error.hpp"
#include "seifert.hpp"

namespace brieskorn {

enum class Provenance { single_negative, single_positive, connected_sum };

inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::single_negative: return "single-negative";
        case Provenance::single_positive: return "single-positive";
        case Provenance::connected_sum: return "connected-sum";
    }
    return "?";
}

struct ManolescuSet {
    Int alpha, beta, gamma, delta;
    Provenance provenance = Provenance::single_negative;
};

// Negative fibration: beta = gamma = -mu_bar, and alpha is delta rounded up
// within the coset alpha = -mu_bar mod 2.
inline ManolescuSet single_negative(const Int& delta, const Int& mu_bar) {
    ManolescuSet s;
    s.delta = delta;
    s.beta = -mu_bar;
    s.gamma = -mu_bar;
    s.alpha = is_even(delta + mu_bar) ? delta : Int(delta + 1);
    s.provenance = Provenance::single_negative;
    return s;
}

// Positive fibration: alpha = beta = -mu_bar, and gamma is delta rounded down
// within the coset gamma = -mu_bar mod 2.
inline ManolescuSet single_positive(const Int& delta, const Int& mu_bar) {
    ManolescuSet s;
    s.delta = delta;
    s.alpha = -mu_bar;
    s.beta = -mu_bar;
    s.gamma = is_even(delta + mu_bar) ? delta : Int(delta - 1);
    s.provenance = Provenance::single_positive;
    return s;
}

// A Brieskorn sphere Sigma(p, q, pqk +- 1) with p, q coprime, k >= 1 carries
// a projective negative fibration. Anything else gets "unknown", never a
// definite no.
enum class Certification { certified, unknown };

inline Certification is_projective_certified(const std::vector<Int>& mults) {
    if (mults.size() != 3) return Certification::unknown;
    for (int k = 0; k < 3; ++k) {
        const Int& r = mults[k];
        Int pq = mults[(k + 1) % 3] * mults[(k + 2) % 3];
        if (mults[(k + 1) % 3] < 2 || mults[(k + 2) % 3] < 2) continue;
        if ((r - 1) % pq == 0 && (r - 1) / pq >= 1) return Certification::certified;
        if ((r + 1) % pq == 0 && (r + 1) / pq >= 1) return Certification::certified;
    }
    return Certification::unknown;
}

// delta and mu_bar of one summand, both signed by its orientation.
struct SummandInvariants {
    Int delta;
    Int mu_bar;
    Int delta_tilde() const { return delta + mu_bar; }
};

struct ConnectedSumResult {
    ManolescuSet set;
    // True when delta ties with unequal delta_tilde could occupy the last one
    // or two sort positions and change beta or gamma; the stable order's
    // values are reported in that case.
    bool order_ambiguous = false;
};

// alpha, beta, gamma, delta of Y_1 # ... # Y_n, all summands negative
// fibrations with projective structure: sort by delta ascending (stable),
// let S_k be the partial sums of delta_tilde and Mb the mu_bar total, then
//   alpha = 2 floor((S_n + 1)/2) - Mb,
//   beta  = 2 floor((S_{n-1} + 1)/2) - Mb,
//   gamma = 2 floor((S_{n-2} + 1)/2) - Mb,    (S_0 = S_{-1} = 0)
// and delta is additive.
inline ConnectedSumResult connected_sum_negative(std::vector<SummandInvariants> ys) {
    if (ys.empty()) throw domain_error("connected_sum_negative: need at least one summand");
    ConnectedSumResult res;
    if (ys.size() == 1) {
        res.set = single_negative(ys[0].delta, ys[0].mu_bar);
        return res;
    }
    std::stable_sort(ys.begin(), ys.end(),
                     [](const SummandInvariants& a, const SummandInvariants& b) {
                         return a.delta < b.delta;
                     });
    int n = static_cast<int>(ys.size());
    Int mb(0), sn(0), delta_sum(0);
    for (const auto& y : ys) {
        mb += y.mu_bar;
        sn += y.delta_tilde();
        delta_sum += y.delta;
    }
    Int s_n1 = sn - ys[n - 1].delta_tilde();
    Int s_n2 = n >= 2 ? Int(s_n1 - ys[n - 2].delta_tilde()) : Int(0);

    auto term = [&mb](const Int& s) { return 2 * floor_div(s + 1, Int(2)) - mb; };
    res.set.alpha = term(sn);
    res.set.beta = term(s_n1);
    res.set.gamma = term(s_n2);
    res.set.delta = delta_sum;
    res.set.provenance = Provenance::connected_sum;

    // Exact ambiguity detection: only the occupants of the last two sort
    // positions enter beta and gamma, and ties in delta are free to permute.
    std::vector<std::pair<Int, std::vector<Int>>> groups;  // (delta, delta_tildes)
    for (const auto& y : ys) {
        if (groups.empty() || groups.back().first != y.delta)
            groups.push_back({y.delta, {}});
        groups.back().second.push_back(y.delta_tilde());
    }
    const auto& last = groups.back().second;
    std::set<Int> last_choices(last.begin(), last.end());
    std::set<Int> beta_vals;
    for (const auto& v : last_choices) beta_vals.insert(term(sn - v));
    std::set<Int> pair_sums;
    if (last.size() >= 2) {
        for (std::size_t i = 0; i < last.size(); ++i)
            for (std::size_t j = i + 1; j < last.size(); ++j)
                pair_sums.insert(last[i] + last[j]);
    } else if (groups.size() >= 2) {
        const auto& prev = groups[groups.size() - 2].second;
        for (const auto& v : prev) pair_sums.insert(last[0] + v);
    } else {
        pair_sums.insert(sn - s_n2);  // n == 1 handled above; defensive
    }
    std::set<Int> gamma_vals;
    for (const auto& v : pair_sums) gamma_vals.insert(term(sn - v));
    res.order_ambiguous = beta_vals.size() > 1 || gamma_vals.size() > 1;
    return res;
}

}  // namespace brieskorn
