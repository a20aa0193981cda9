#pragma once

// Golden-value self test. The embedded corpus is a JSON Lines table of
// expressions with their expected invariants and verdict outcomes. Entries
// with status "disputed" record published values that disagree with what the
// definitions give; they are reported as KNOWN-DISPUTED and never fail the
// run, so the exit status reflects only the normative rows.

#include <json.hpp>

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"
#include "obstruction.hpp"
#include "plumbing.hpp"
#include "seifert.hpp"

namespace brieskorn {

inline const char* embedded_fixtures() {
    return R"fx(
# expr / status / expected invariants of the full pipeline
{"expr":"S3","status":"normative","expected":{"mu_bar":0,"delta":0,"alpha":0,"beta":0,"gamma":0,"verdicts":{"glued":"inconclusive","embedding":"inconclusive","mu_bar":"inconclusive","lin_parity":"inconclusive"}}}
{"expr":"Sigma(2,3,5)","status":"normative","expected":{"mu_bar":-1,"rokhlin":1,"delta":1,"alpha":1,"beta":1,"gamma":1,"verdicts":{"glued":"inconclusive","embedding":"inconclusive","mu_bar":"inconclusive","connected_sum":"inconclusive","lin_parity":"inconclusive"}}}
{"expr":"Sigma(2,3,7)","status":"normative","expected":{"mu_bar":1,"rokhlin":1,"delta":0,"alpha":1,"beta":-1,"gamma":-1,"verdicts":{"glued":"obstructed","embedding":"obstructed","mu_bar":"obstructed","connected_sum":"obstructed","lin_parity":"obstructed"}}}
{"expr":"Sigma(2,3,11)","status":"normative","expected":{"mu_bar":0,"rokhlin":0,"delta":1,"alpha":2,"beta":0,"gamma":0,"verdicts":{"glued":"obstructed","embedding":"obstructed","mu_bar":"obstructed","connected_sum":"obstructed","lin_parity":"obstructed"}}}
{"expr":"Sigma(2,3,23)","status":"normative","expected":{"mu_bar":0,"delta":1,"alpha":2,"beta":0,"gamma":0,"verdicts":{"glued":"obstructed","embedding":"obstructed","mu_bar":"obstructed","connected_sum":"obstructed","lin_parity":"obstructed"}}}
{"expr":"Sigma(2,3,35)","status":"normative","expected":{"mu_bar":0,"delta":1,"alpha":2,"beta":0,"gamma":0,"verdicts":{"glued":"obstructed","embedding":"obstructed","mu_bar":"obstructed","connected_sum":"obstructed","lin_parity":"obstructed"}}}
{"expr":"Sigma(2,5,19)","status":"normative","expected":{"mu_bar":0,"delta":1,"alpha":2,"beta":0,"gamma":0,"verdicts":{"glued":"obstructed","embedding":"obstructed","mu_bar":"obstructed","connected_sum":"obstructed","lin_parity":"obstructed"}}}
{"expr":"Sigma(2,5,39)","status":"normative","expected":{"mu_bar":0,"delta":1,"alpha":2,"beta":0,"gamma":0,"verdicts":{"glued":"obstructed","embedding":"obstructed","mu_bar":"obstructed","connected_sum":"obstructed","lin_parity":"obstructed"}}}
{"expr":"Sigma(2,5,59)","status":"normative","expected":{"mu_bar":0,"delta":1,"alpha":2,"beta":0,"gamma":0,"verdicts":{"glued":"obstructed","embedding":"obstructed","mu_bar":"obstructed","connected_sum":"obstructed","lin_parity":"obstructed"}}}
{"expr":"Sigma(2,7,27)","status":"normative","expected":{"mu_bar":0,"rokhlin":0,"delta":2,"alpha":2,"beta":0,"gamma":0,"verdicts":{"glued":"obstructed","embedding":"obstructed","mu_bar":"obstructed","connected_sum":"obstructed","lin_parity":"inconclusive"}}}
{"expr":"Sigma(2,7,55)","status":"normative","expected":{"mu_bar":0,"delta":2,"alpha":2,"beta":0,"gamma":0,"verdicts":{"glued":"obstructed","embedding":"obstructed","mu_bar":"obstructed","connected_sum":"obstructed","lin_parity":"inconclusive"}}}
{"expr":"Sigma(2,7,83)","status":"normative","expected":{"mu_bar":0,"delta":2,"alpha":2,"beta":0,"gamma":0,"verdicts":{"glued":"obstructed","embedding":"obstructed","mu_bar":"obstructed","connected_sum":"obstructed","lin_parity":"inconclusive"}}}
{"expr":"-Sigma(2,3,5)","status":"normative","expected":{"mu_bar":1,"rokhlin":1,"delta":-1,"alpha":-1,"beta":-1,"gamma":-1,"verdicts":{"glued":"inconclusive","embedding":"inconclusive","mu_bar":"inconclusive","lin_parity":"inconclusive"}}}
{"expr":"-Sigma(2,3,7)","status":"normative","expected":{"mu_bar":-1,"rokhlin":1,"delta":0,"alpha":1,"beta":1,"gamma":-1,"verdicts":{"glued":"obstructed","embedding":"obstructed","mu_bar":"obstructed","lin_parity":"obstructed"}}}
{"expr":"Sigma(2,3,13)","status":"normative","expected":{"mu_bar":0,"delta":0,"alpha":0,"beta":0,"gamma":0,"verdicts":{"glued":"inconclusive","embedding":"inconclusive","mu_bar":"inconclusive","connected_sum":"inconclusive","lin_parity":"inconclusive"}}}
{"expr":"Sigma(2,3,17)","status":"normative","expected":{"mu_bar":-1,"delta":1,"alpha":1,"beta":1,"gamma":1,"verdicts":{"glued":"inconclusive","embedding":"inconclusive","mu_bar":"inconclusive","connected_sum":"inconclusive","lin_parity":"inconclusive"}}}
{"expr":"Sigma(3,4,5)","status":"normative","expected":{"mu_bar":0,"delta":0,"alpha":0,"beta":0,"gamma":0,"verdicts":{"glued":"inconclusive","embedding":"inconclusive","mu_bar":"inconclusive","lin_parity":"inconclusive"}}}
{"expr":"2*Sigma(2,3,7)","status":"normative","expected":{"mu_bar":2,"rokhlin":0,"delta":0,"alpha":0,"beta":0,"gamma":-2,"verdicts":{"glued":"obstructed","embedding":"obstructed","connected_sum":"obstructed","lin_parity":"inconclusive"}}}
{"expr":"2*Sigma(2,3,11)","status":"normative","expected":{"mu_bar":0,"delta":2,"alpha":2,"beta":2,"gamma":0,"verdicts":{"glued":"obstructed","embedding":"obstructed","connected_sum":"obstructed","lin_parity":"inconclusive"}}}
{"expr":"3*Sigma(2,3,11)","status":"normative","expected":{"mu_bar":0,"delta":3,"alpha":4,"beta":2,"gamma":2,"verdicts":{"glued":"obstructed","embedding":"obstructed","connected_sum":"obstructed","lin_parity":"obstructed"}}}
{"expr":"4*Sigma(2,3,11)","status":"normative","expected":{"mu_bar":0,"delta":4,"alpha":4,"beta":4,"gamma":2,"verdicts":{"glued":"obstructed","embedding":"obstructed","connected_sum":"obstructed","lin_parity":"inconclusive"}}}
{"expr":"Sigma(2,3,5) # Sigma(2,3,7)","status":"normative","expected":{"mu_bar":0,"delta":1,"alpha":2,"beta":2,"gamma":0,"verdicts":{"glued":"obstructed","embedding":"obstructed","connected_sum":"obstructed","lin_parity":"obstructed"}}}
{"expr":"2*Sigma(2,3,5)","status":"normative","expected":{"mu_bar":-2,"rokhlin":0,"delta":2,"alpha":2,"beta":2,"gamma":2,"verdicts":{"glued":"inconclusive","embedding":"inconclusive","connected_sum":"inconclusive","lin_parity":"inconclusive"}}}
{"expr":"Sigma(2,5,19) # Sigma(2,7,27)","status":"normative","expected":{"mu_bar":0,"delta":3,"alpha":4,"beta":2,"gamma":0,"verdicts":{"glued":"obstructed","embedding":"obstructed","connected_sum":"obstructed","lin_parity":"obstructed"}}}
{"expr":"Sigma(2,3,7) # Sigma(2,3,11)","status":"normative","expected":{"mu_bar":1,"rokhlin":1,"delta":1,"alpha":1,"beta":1,"gamma":-1,"verdicts":{"glued":"obstructed","embedding":"obstructed","connected_sum":"obstructed","lin_parity":"inconclusive"}}}
{"expr":"Sigma(2,3,11) # Sigma(2,3,5)","status":"normative","expected":{"mu_bar":-1,"delta":2,"alpha":3,"beta":3,"gamma":1,"order_ambiguous":true,"verdicts":{"glued":"obstructed","embedding":"obstructed","connected_sum":"obstructed","lin_parity":"obstructed"}}}
{"expr":"Sigma(2,3,11)","status":"disputed","expected":{"mu_bar":1}}
{"expr":"Sigma(2,5,19)","status":"disputed","expected":{"mu_bar":1}}
{"expr":"Sigma(2,7,27)","status":"disputed","expected":{"mu_bar":1}}
{"expr":"2*Sigma(2,7,27)","status":"disputed","expected":{"delta":2,"beta":4,"gamma":2}}
)fx";
}

struct SelftestCase {
    std::string expr;
    bool disputed = false;
    std::vector<std::string> diffs;  // empty when the fixture matched
    bool broken = false;             // fixture line itself unusable
};

struct SelftestResult {
    int passed = 0;
    int failed = 0;            // normative mismatches and broken lines
    int known_disputed = 0;    // disputed rows whose claimed values mismatch
    std::vector<SelftestCase> cases;
    bool ok() const { return failed == 0; }
};

namespace detail {

inline Int fixture_int(const nlohmann::json& v) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) return Int(v.get<std::string>());
    throw domain_error("fixture value is not an integer");
}

inline void diff_int(std::vector<std::string>& diffs, const char* key, const Int& expected,
                     const Int& got) {
    if (expected != got)
        diffs.push_back(std::string(key) + " expected " + to_string(expected) + ", got " +
                        to_string(got));
}

inline void compare_fixture(const nlohmann::json& expected, const InvariantReport& rep,
                            std::vector<std::string>& diffs) {
    if (expected.contains("mu_bar"))
        diff_int(diffs, "mu_bar", fixture_int(expected["mu_bar"]), rep.mu_bar_total);
    if (expected.contains("rokhlin"))
        diff_int(diffs, "rokhlin", fixture_int(expected["rokhlin"]), Int(rep.rokhlin_total));
    if (expected.contains("delta"))
        diff_int(diffs, "delta", fixture_int(expected["delta"]), rep.aggregate.delta);
    if (expected.contains("alpha"))
        diff_int(diffs, "alpha", fixture_int(expected["alpha"]), rep.aggregate.alpha);
    if (expected.contains("beta"))
        diff_int(diffs, "beta", fixture_int(expected["beta"]), rep.aggregate.beta);
    if (expected.contains("gamma"))
        diff_int(diffs, "gamma", fixture_int(expected["gamma"]), rep.aggregate.gamma);
    if (expected.contains("order_ambiguous")) {
        bool want = expected["order_ambiguous"].get<bool>();
        if (want != rep.order_ambiguous)
            diffs.push_back(std::string("order_ambiguous expected ") +
                            (want ? "true" : "false"));
    }
    if (expected.contains("verdicts")) {
        for (const auto& [name, want] : expected["verdicts"].items()) {
            const Verdict* found = nullptr;
            for (const auto& v : rep.verdicts)
                if (v.criterion == name) found = &v;
            if (!found) {
                diffs.push_back("verdict " + name + " not emitted");
                continue;
            }
            std::string got = to_string(found->outcome);
            if (got != want.get<std::string>())
                diffs.push_back("verdict " + name + " expected " + want.get<std::string>() +
                                ", got " + got);
        }
    }
}

inline SymMat form_of(const std::vector<Int>& mults) {
    return intersection_matrix(build_plumbing(normalize(mults)));
}

// Independent-path consistency checks: the production pipeline against the
// dumb exhaustive oracles. These always run, regardless of --fixtures.
inline std::vector<std::pair<std::string, std::string>> oracle_checks() {
    std::vector<std::pair<std::string, std::string>> rows;  // {name, diff-or-empty}
    auto add = [&rows](const std::string& name, const std::string& diff) {
        rows.emplace_back(name, diff);
    };

    {
        SeifertInvariants inv = normalize({Int(2), Int(3), Int(5)});
        bool ok = inv.e0 == -2 && inv.fibers.size() == 3 && inv.fibers[0].second == 1 &&
                  inv.fibers[1].second == 2 && inv.fibers[2].second == 4;
        add("normalize(2,3,5)", ok ? "" : "expected e0=-2, b=(1,2,4)");
    }
    {
        SeifertInvariants inv = normalize({Int(2), Int(3), Int(7)});
        bool ok = inv.e0 == -1 && inv.fibers[0].second == 1 && inv.fibers[1].second == 1 &&
                  inv.fibers[2].second == 1;
        add("normalize(2,3,7)", ok ? "" : "expected e0=-1, b=(1,1,1)");
    }
    {
        std::vector<Int> want = {Int(2), Int(2), Int(2), Int(2), Int(3)};
        add("neg_cont_frac(11,9)",
            neg_cont_frac(Int(11), Int(9)) == want ? "" : "expected [2,2,2,2,3]");
    }
    {
        PlumbingGraph g = build_plumbing(normalize({Int(2), Int(3), Int(5)}));
        WuReport wr = mu_bar_of_plumbing(g);
        bool zero = true;
        for (const auto& c : wr.wu) zero = zero && c == 0;
        bool ok = wr.rank == 8 && wr.sig == -8 && zero && wr.mu_bar == -1;
        add("wu-even-e8", ok ? "" : "expected even E8 data: rank 8, sigma -8, wu 0, mu_bar -1");
    }
    {
        // brute force over all 2^rank mod-2 vectors: the characteristic class
        // must be unique and equal to the production solve
        SymMat m = form_of({Int(2), Int(3), Int(11)});
        std::vector<Int> wu = wu_class(m);
        int n = m.n;
        int hits = 0;
        bool match = false;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            bool good = true;
            for (int i = 0; i < n && good; ++i) {
                Int acc = 0;
                for (int j = 0; j < n; ++j)
                    if (mask >> j & 1u) acc += m.at(i, j);
                if (!is_even(acc - m.at(i, i))) good = false;
            }
            if (!good) continue;
            ++hits;
            bool same = true;
            for (int j = 0; j < n; ++j)
                if (((mask >> j & 1u) != 0) != (wu[j] == 1)) same = false;
            match = match || same;
        }
        add("wu-brute(2,3,11)",
            hits == 1 && match ? "" : "expected exactly the production Wu class");
    }
    auto box_check = [&](const char* name, const std::vector<Int>& mults, int box,
                         const Int& want) {
        SymMat m = form_of(mults);
        LatticeReport lr = min_characteristic_norm(m);
        Int oracle = char_norm_oracle(m, box);
        bool ok = lr.min_char_norm == want && oracle == want;
        add(name, ok ? ""
                     : "expected " + to_string(want) + ", production " +
                           to_string(lr.min_char_norm) + ", oracle " + to_string(oracle));
    };
    box_check("char-box(2,3,7)", {Int(2), Int(3), Int(7)}, 4, Int(4));
    box_check("char-box(2,3,11)", {Int(2), Int(3), Int(11)}, 3, Int(1));
    box_check("char-box(3,4,5)", {Int(3), Int(4), Int(5)}, 3, Int(5));
    box_check("char-box(2,3,13)", {Int(2), Int(3), Int(13)}, 3, Int(5));
    {
        SymMat m = diag_matrix(std::vector<Int>(6, Int(-1)));
        LatticeReport lr = min_characteristic_norm(m);
        bool ok = lr.min_char_norm == 6 && lr.d == 0 && char_norm_oracle(m, 4) == 6;
        add("char-box-diag6", ok ? "" : "expected N=6, d=0 on the rank-6 diagonal form");
    }
    {
        Summand s;
        s.multiplicities = {Int(2), Int(3), Int(5)};
        s.reversed = true;
        add("delta-sign", delta_of(s) == -1 ? "" : "expected delta(-Sigma(2,3,5)) = -1");
    }
    return rows;
}

}  // namespace detail

inline SelftestResult run_selftest(const std::string& fixtures_text, std::ostream& out) {
    SelftestResult res;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos < fixtures_text.size()) {
        std::size_t end = fixtures_text.find('\n', pos);
        if (end == std::string::npos) end = fixtures_text.size();
        std::string line = fixtures_text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        SelftestCase c;
        try {
            nlohmann::json j = nlohmann::json::parse(line);
            c.expr = j.at("expr").get<std::string>();
            c.disputed = j.value("status", std::string("normative")) == "disputed";
            InvariantReport rep = analyze(c.expr);
            detail::compare_fixture(j.at("expected"), rep, c.diffs);
        } catch (const std::exception& e) {
            c.broken = true;
            if (c.expr.empty()) c.expr = "line " + std::to_string(line_no);
            c.diffs.push_back(std::string("fixture unusable: ") + e.what());
        }

        if (c.broken || (!c.disputed && !c.diffs.empty())) {
            ++res.failed;
            out << "FAIL " << c.expr << ":";
            for (const auto& d : c.diffs) out << " " << d << ";";
            out << "\n";
        } else if (c.disputed && !c.diffs.empty()) {
            ++res.known_disputed;
            out << "KNOWN-DISPUTED " << c.expr << ":";
            for (const auto& d : c.diffs) out << " " << d << ";";
            out << "\n";
        } else {
            ++res.passed;
            out << "ok " << c.expr << (c.disputed ? " (disputed claim matches)" : "") << "\n";
        }
        res.cases.push_back(std::move(c));
    }

    try {
        for (auto& [name, diff] : detail::oracle_checks()) {
            SelftestCase c;
            c.expr = "oracle:" + name;
            if (diff.empty()) {
                ++res.passed;
                out << "ok " << c.expr << "\n";
            } else {
                ++res.failed;
                c.diffs.push_back(diff);
                out << "FAIL " << c.expr << ": " << diff << "\n";
            }
            res.cases.push_back(std::move(c));
        }
    } catch (const std::exception& e) {
        SelftestCase c;
        c.expr = "oracle";
        c.broken = true;
        c.diffs.push_back(std::string("oracle phase aborted: ") + e.what());
        ++res.failed;
        out << "FAIL oracle: " << c.diffs.back() << "\n";
        res.cases.push_back(std::move(c));
    }

    out << "selftest: " << res.passed << " passed, " << res.failed << " failed, "
        << res.known_disputed << " known-disputed\n";
    return res;
}

}  // namespace brieskorn
