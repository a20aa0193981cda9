#pragma once

// Families Sigma(p, q, c*n + r): parse the pattern, sweep a range of n, and
// summarize whether the invariant tuple is constant across the range.
// Instances where the three multiplicities fail to be coprime (or where the
// linear form is not positive) are skipped with a note so a sweep never dies
// half way through.

#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "obstruction.hpp"

namespace brieskorn {

struct FamilyPattern {
    Int p = 0;
    Int q = 0;
    Int coeff = 1;   // coefficient of n in the third multiplicity
    Int offset = 0;  // constant term of the third multiplicity
};

namespace detail {

// Grammar:  Sigma ( int , int , [int] n [(+|-) int] )
// with optional whitespace everywhere; the third slot must mention n.
class FamilyParser {
public:
    explicit FamilyParser(const std::string& text) : s(text) {}

    FamilyPattern run() {
        FamilyPattern pat;
        skip_ws();
        expect_word("Sigma");
        expect('(');
        pat.p = integer();
        expect(',');
        pat.q = integer();
        expect(',');
        skip_ws();
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos; }
        skip_ws();
        if (std::isdigit(peek_uc())) {
            Int v = unsigned_integer();
            skip_ws();
            if (peek() == 'n') {
                ++pos;
                pat.coeff = neg ? -v : v;
            } else {
                fail("third slot must contain n");
            }
        } else if (peek() == 'n') {
            ++pos;
            pat.coeff = neg ? Int(-1) : Int(1);
        } else {
            fail("expected the linear form c*n+r");
        }
        skip_ws();
        if (peek() == '+' || peek() == '-') {
            bool oneg = peek() == '-';
            ++pos;
            pat.offset = unsigned_integer();
            if (oneg) pat.offset = -pat.offset;
        }
        expect(')');
        skip_ws();
        if (pos != s.size()) fail("trailing characters after pattern");
        if (pat.p < 2 || pat.q < 2) fail("fixed multiplicities must be at least 2");
        if (pat.coeff == 0) fail("coefficient of n must be nonzero");
        return pat;
    }

private:
    const std::string& s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    unsigned char peek_uc() const { return static_cast<unsigned char>(peek()); }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    void expect_word(const std::string& w) {
        skip_ws();
        if (s.compare(pos, w.size(), w) != 0) fail("expected '" + w + "'");
        pos += w.size();
    }
    Int unsigned_integer() {
        skip_ws();
        if (!std::isdigit(peek_uc())) fail("expected an integer");
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos - start > 10000) { pos = start; fail("integer literal too long"); }
        return Int(s.substr(start, pos - start));
    }
    Int integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos; }
        Int v = unsigned_integer();
        return neg ? -v : v;
    }
};

}  // namespace detail

inline FamilyPattern parse_family_pattern(const std::string& text) {
    return detail::FamilyParser(text).run();
}

inline std::string family_instance_expr(const FamilyPattern& pat, const Int& n) {
    Int third = pat.coeff * n + pat.offset;
    return "Sigma(" + to_string(pat.p) + "," + to_string(pat.q) + "," + to_string(third) + ")";
}

struct FamilyEntry {
    Int n = 0;
    Int third = 0;  // value of c*n + r at this n
    bool skipped = false;
    std::string note;
    std::optional<InvariantReport> report;
};

struct FamilySweep {
    FamilyPattern pattern;
    Int lo = 0;
    Int hi = 0;
    std::vector<FamilyEntry> entries;
    // {mu_bar_total, delta, alpha, beta, gamma} constant over the computed entries
    bool constant_invariants = false;
    std::vector<Int> constant_tuple;  // filled when constant_invariants holds
};

inline FamilyEntry family_member(const FamilyPattern& pat, const Int& n,
                                 const AnalyzeOptions& opt = {}) {
    FamilyEntry e;
    e.n = n;
    e.third = pat.coeff * n + pat.offset;
    if (e.third < 1) {
        e.skipped = true;
        e.note = "third multiplicity " + to_string(e.third) + " is not positive";
        return e;
    }
    if (gcd(pat.p, pat.q) != 1 || gcd(pat.p, e.third) != 1 || gcd(pat.q, e.third) != 1) {
        e.skipped = true;
        e.note = "multiplicities (" + to_string(pat.p) + "," + to_string(pat.q) + "," +
                 to_string(e.third) + ") are not pairwise coprime";
        return e;
    }
    SeifertPresentation pres;
    Summand s;
    s.multiplicities = {pat.p, pat.q, e.third};
    pres.summands.push_back(std::move(s));
    e.report = analyze(pres, opt);
    e.report->input_echo = family_instance_expr(pat, n);
    return e;
}

inline std::vector<Int> family_tuple(const InvariantReport& rep) {
    return {rep.mu_bar_total, rep.aggregate.delta, rep.aggregate.alpha, rep.aggregate.beta,
            rep.aggregate.gamma};
}

inline void finalize_family(FamilySweep& sweep) {
    bool first = true;
    bool constant = true;
    std::vector<Int> tuple;
    for (const auto& e : sweep.entries) {
        if (e.skipped) continue;
        std::vector<Int> t = family_tuple(*e.report);
        if (first) {
            tuple = t;
            first = false;
        } else if (t != tuple) {
            constant = false;
        }
    }
    sweep.constant_invariants = !first && constant;
    if (sweep.constant_invariants) sweep.constant_tuple = tuple;
}

// Sequential sweep; the command line tool shards the range across jobs itself.
inline FamilySweep family_sweep(const FamilyPattern& pat, const Int& lo, const Int& hi,
                                const AnalyzeOptions& opt = {}) {
    if (hi < lo) throw domain_error("empty family range: hi < lo");
    if (hi - lo > 100000) throw domain_error("family range too large (over 100000 members)");
    FamilySweep sweep;
    sweep.pattern = pat;
    sweep.lo = lo;
    sweep.hi = hi;
    for (Int n = lo; n <= hi; ++n) sweep.entries.push_back(family_member(pat, n, opt));
    finalize_family(sweep);
    return sweep;
}

}  // namespace brieskorn
