#pragma once

// Seifert fibered homology spheres: input grammar, presentations and the
// normalized Seifert invariants of the standard (negative) fibration.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "arith.hpp"
#include "error.hpp"

namespace brieskorn {

struct Summand {
    std::vector<Int> multiplicities;  // exactly as parsed, order preserved
    bool reversed = false;            // leading '-' (orientation reversal)

    // Sigma(1,a,b) and summands with fewer than 3 multiplicities are S^3.
    bool is_trivial() const {
        if (multiplicities.size() < 3) return true;
        for (const auto& a : multiplicities)
            if (a == 1) return true;
        return false;
    }

    bool operator==(const Summand& o) const {
        return reversed == o.reversed && multiplicities == o.multiplicities;
    }
};

struct SeifertPresentation {
    bool s3 = false;                // literal "S3" input
    std::vector<Summand> summands;  // order preserved; k*T already expanded

    bool operator==(const SeifertPresentation& o) const {
        return s3 == o.s3 && summands == o.summands;
    }
};

// Seifert invariants (e0; (a_1,b_1),...,(a_n,b_n)) of the homology-sphere
// normalization, 0 < b_i < a_i.
struct SeifertInvariants {
    Int e0;
    std::vector<std::pair<Int, Int>> fibers;  // (a_i, b_i)

    // Euler number e = e0 + sum b_i/a_i; equals -1/(a_1...a_n).
    Rat euler() const {
        Rat e(e0);
        for (const auto& [a, b] : fibers) e += Rat(b) / Rat(a);
        return e;
    }
};

namespace detail {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) fail(std::string("expected '") + c + "' (" + what + ")");
    }

    bool peek_digit() {
        skip_ws();
        return pos < s.size() && s[pos] >= '0' && s[pos] <= '9';
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) fail("expected an integer");
        return Int(s.substr(start, pos - start));
    }

    bool keyword(const char* kw) {
        skip_ws();
        std::size_t len = std::char_traits<char>::length(kw);
        if (s.compare(pos, len, kw) == 0) { pos += len; return true; }
        return false;
    }

    Summand sigma() {
        skip_ws();
        std::size_t at = pos;
        bool rev = eat('-');
        if (!keyword("Sigma")) { pos = at; fail("expected 'Sigma'"); }
        expect('(', "multiplicity list");
        Summand sm;
        sm.reversed = rev;
        sm.multiplicities.push_back(multiplicity());
        expect(',', "at least two multiplicities");
        sm.multiplicities.push_back(multiplicity());
        while (eat(',')) sm.multiplicities.push_back(multiplicity());
        expect(')', "end of multiplicity list");
        return sm;
    }

    Int multiplicity() {
        skip_ws();
        std::size_t at = pos;
        Int a = integer();
        if (a < 1) { pos = at; fail("multiplicity must be positive"); }
        return a;
    }

    // term := ['-'] Sigma(...) | int '*' term
    void term(std::vector<Summand>& out) {
        skip_ws();
        if (peek_digit()) {
            std::size_t at = pos;
            Int k = integer();
            expect('*', "repetition");
            if (k < 1) { pos = at; fail("repetition count must be positive"); }
            if (k > 100000) { pos = at; fail("repetition count too large"); }
            std::vector<Summand> inner;
            term(inner);
            for (Int i = 0; i < k; ++i)
                out.insert(out.end(), inner.begin(), inner.end());
            return;
        }
        out.push_back(sigma());
    }

    SeifertPresentation presentation() {
        SeifertPresentation p;
        skip_ws();
        if (keyword("S3")) {
            p.s3 = true;
            skip_ws();
            if (pos != s.size()) fail("trailing input after S3");
            return p;
        }
        term(p.summands);
        while (true) {
            skip_ws();
            if (pos == s.size()) break;
            expect('#', "connected sum");
            term(p.summands);
        }
        return p;
    }
};

inline void validate_coprime(const std::vector<Int>& mults) {
    for (std::size_t i = 0; i < mults.size(); ++i)
        for (std::size_t j = i + 1; j < mults.size(); ++j)
            if (gcd(mults[i], mults[j]) != 1)
                throw domain_error("multiplicities " + to_string(mults[i]) + " and " +
                                   to_string(mults[j]) + " are not coprime");
}

}  // namespace detail

// Parse "S3" or a '#'-sum of [-]Sigma(a1,...,an) terms with k*T repetition.
// Syntax problems throw parse_error with a position; non-coprime
// multiplicities throw domain_error.
inline SeifertPresentation parse(const std::string& text) {
    detail::Parser p(text);
    SeifertPresentation pres = p.presentation();
    for (const auto& sm : pres.summands) detail::validate_coprime(sm.multiplicities);
    return pres;
}

inline std::string pretty_print(const SeifertPresentation& p) {
    if (p.s3 || p.summands.empty()) return "S3";
    std::string out;
    for (std::size_t i = 0; i < p.summands.size(); ++i) {
        if (i) out += " # ";
        const Summand& sm = p.summands[i];
        if (sm.reversed) out += "-";
        out += "Sigma(";
        for (std::size_t j = 0; j < sm.multiplicities.size(); ++j) {
            if (j) out += ",";
            out += to_string(sm.multiplicities[j]);
        }
        out += ")";
    }
    return out;
}

// Normalized Seifert invariants of Sigma(a_1,...,a_n) with its standard
// orientation (negative fibration): a*e0 + sum_i (a/a_i) b_i = -1 with
// 0 < b_i < a_i, where a = a_1...a_n. Requires n >= 3, all a_i >= 2,
// pairwise coprime.
inline SeifertInvariants normalize(const std::vector<Int>& mults) {
    if (mults.size() < 3)
        throw domain_error("normalize: need at least 3 multiplicities");
    for (const auto& ai : mults)
        if (ai < 2) throw domain_error("normalize: multiplicities must be >= 2");
    detail::validate_coprime(mults);

    Int a(1);
    for (const auto& ai : mults) a *= ai;

    SeifertInvariants inv;
    Int weighted(0);
    for (const auto& ai : mults) {
        Int q = a / ai;
        // (a/a_i) b_i = -1 mod a_i, the unique representative in (0, a_i)
        Int bi = mod_pos(-mod_inverse(q, ai), ai);
        check_internal(bi > 0 && bi < ai, "normalize: fiber coefficient out of range");
        inv.fibers.emplace_back(ai, bi);
        weighted += q * bi;
    }
    Int num = -1 - weighted;
    check_internal(num % a == 0, "normalize: e0 not integral");
    inv.e0 = num / a;

    check_internal(inv.euler() == Rat(-1) / Rat(a), "normalize: Euler number mismatch");
    return inv;
}

}  // namespace brieskorn
