// Command line surface: compute, family, obstruct, plumbing, selftest.
//
// Exit codes: 0 success, 1 selftest failure, 2 parse error, 3 domain error,
// 4 internal error. Verdicts are data, not exit codes. Batch and family
// evaluation may run on several threads; output is buffered per entry and
// emitted in input order, so results are byte-identical for any --jobs value.

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <brieskorn/brieskorn.hpp>

namespace bk = brieskorn;

namespace {

int code_of(const std::exception& e) {
    if (dynamic_cast<const bk::parse_error*>(&e)) return 2;
    if (dynamic_cast<const bk::domain_error*>(&e)) return 3;
    return 4;
}

const char* label_of(int code) {
    switch (code) {
        case 2: return "parse error";
        case 3: return "domain error";
        default: return "internal error";
    }
}

std::string describe(const std::exception& e) {
    std::string msg = e.what();
    if (const auto* pe = dynamic_cast<const bk::parse_error*>(&e))
        msg += " (at position " + std::to_string(pe->position) + ")";
    return msg;
}

struct EntryOut {
    std::string text;
    int code = 0;
};

std::string error_entry(const std::string& input, const std::exception& e, bool json_mode,
                        bool compact) {
    int code = code_of(e);
    if (!json_mode) return std::string(label_of(code)) + ": " + describe(e) + "\n";
    bk::json j;
    j["schema_version"] = bk::schema_version;
    j["input"] = input;
    bk::json err;
    err["kind"] = code == 2 ? "parse" : code == 3 ? "domain" : "internal";
    err["message"] = e.what();
    if (const auto* pe = dynamic_cast<const bk::parse_error*>(&e))
        err["position"] = static_cast<std::int64_t>(pe->position);
    j["error"] = err;
    return j.dump(compact ? -1 : 2) + "\n";
}

// one expression through the full pipeline, rendered as requested
EntryOut run_expression(const std::string& expr, bool json_mode, bool compact,
                        bk::GraphDump dump, const bk::AnalyzeOptions& opt, bool verdicts_only) {
    EntryOut r;
    try {
        bk::InvariantReport rep = bk::analyze(expr, opt);
        if (json_mode) {
            bk::json j;
            if (verdicts_only) {
                bk::json full = bk::record_json(rep);
                j["schema_version"] = bk::schema_version;
                j["input"] = rep.input_echo;
                j["verdicts"] = full["verdicts"];
            } else {
                j = bk::record_json(rep, dump);
            }
            r.text = j.dump(compact ? -1 : 2) + "\n";
        } else if (verdicts_only) {
            std::string t;
            t += "input: " + rep.input_echo + "\n";
            t += "verdicts:\n";
            for (const auto& v : rep.verdicts) {
                std::string name = v.criterion;
                name.resize(14, ' ');
                t += "  " + name + " " + bk::to_string(v.outcome) + "  witness [" +
                     bk::detail::join_ints(v.witness) + "]\n";
                t += "      " + v.statement + "\n";
            }
            r.text = t;
        } else {
            r.text = bk::record_table(rep, dump);
        }
    } catch (const std::exception& e) {
        r.code = code_of(e);
        r.text = error_entry(expr, e, json_mode, compact);
    }
    return r;
}

template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t)
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) break;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

int emit_entries(const std::vector<std::string>& exprs, bool json_mode, bk::GraphDump dump,
                 const bk::AnalyzeOptions& opt, bool verdicts_only, int jobs) {
    bool compact = exprs.size() > 1;  // JSON Lines for batches, pretty for one record
    std::vector<EntryOut> slots(exprs.size());
    parallel_for(exprs.size(), jobs, [&](std::size_t i) {
        slots[i] = run_expression(exprs[i], json_mode, compact, dump, opt, verdicts_only);
    });
    int code = 0;
    for (const auto& s : slots) {
        // a lone failing expression reports on stderr; batch entries stay on
        // stdout so the one-line-per-entry ordering survives
        if (slots.size() == 1 && s.code != 0 && !json_mode)
            std::cerr << s.text;
        else
            std::cout << s.text;
        if (code == 0 && s.code != 0) code = s.code;
    }
    return code;
}

std::vector<std::string> read_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bk::domain_error("cannot open batch file: " + path);
    std::vector<std::string> exprs;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::size_t last = line.find_last_not_of(" \t\r");
        exprs.push_back(line.substr(first, last - first + 1));
    }
    return exprs;
}

std::string join_args(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " ";
        out += parts[i];
    }
    return out;
}

std::string family_entry_line(const bk::FamilyEntry& e) {
    std::string out = "n=" + bk::to_string(e.n) + ": ";
    if (e.skipped) return out + "skipped: " + e.note + "\n";
    const bk::InvariantReport& rep = *e.report;
    out += rep.input_echo + ": mu_bar=" + bk::to_string(rep.mu_bar_total) +
           " delta=" + bk::to_string(rep.aggregate.delta) +
           " alpha=" + bk::to_string(rep.aggregate.alpha) +
           " beta=" + bk::to_string(rep.aggregate.beta) +
           " gamma=" + bk::to_string(rep.aggregate.gamma) + " verdicts:";
    for (const auto& v : rep.verdicts) out += " " + v.criterion + "=" + bk::to_string(v.outcome);
    return out + "\n";
}

int cmd_family(const std::string& pattern_text, long long from, long long to, bool json_mode,
               const bk::AnalyzeOptions& opt, int jobs) {
    bk::FamilyPattern pat = bk::parse_family_pattern(pattern_text);
    if (to < from) throw bk::domain_error("empty family range: --to is below --from");
    if (to - from > 100000) throw bk::domain_error("family range too large (over 100000 members)");

    std::size_t count = static_cast<std::size_t>(to - from + 1);
    bk::FamilySweep sweep;
    sweep.pattern = pat;
    sweep.lo = from;
    sweep.hi = to;
    sweep.entries.resize(count);
    std::vector<std::string> errors(count);
    parallel_for(count, jobs, [&](std::size_t i) {
        bk::Int n = bk::Int(from) + bk::Int(static_cast<long long>(i));
        try {
            sweep.entries[i] = bk::family_member(pat, n, opt);
        } catch (const std::exception& e) {
            errors[i] = "family member n=" + bk::to_string(n) + ": " + e.what();
        }
    });
    // instance preconditions are checked before computing, so a throw here is a bug
    for (const auto& msg : errors)
        if (!msg.empty()) throw bk::internal_error(msg);
    bk::finalize_family(sweep);

    if (json_mode) {
        bk::json j;
        j["schema_version"] = bk::schema_version;
        j["pattern"] = pattern_text;
        j["from"] = from;
        j["to"] = to;
        bk::json entries = bk::json::array();
        for (const auto& e : sweep.entries) {
            bk::json je;
            je["n"] = bk::j_int(e.n);
            je["third"] = bk::j_int(e.third);
            if (e.skipped) {
                je["skipped"] = true;
                je["note"] = e.note;
            } else {
                je["skipped"] = false;
                je["record"] = bk::record_json(*e.report);
            }
            entries.push_back(je);
        }
        j["entries"] = entries;
        j["constant_invariants"] = sweep.constant_invariants;
        if (sweep.constant_invariants) {
            j["constant_tuple"] = {{"mu_bar", bk::j_int(sweep.constant_tuple[0])},
                                   {"delta", bk::j_int(sweep.constant_tuple[1])},
                                   {"alpha", bk::j_int(sweep.constant_tuple[2])},
                                   {"beta", bk::j_int(sweep.constant_tuple[3])},
                                   {"gamma", bk::j_int(sweep.constant_tuple[4])}};
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "family " << pattern_text << ", n = " << from << ".." << to << "\n";
        for (const auto& e : sweep.entries) std::cout << family_entry_line(e);
        if (sweep.constant_invariants) {
            std::cout << "constant across range: yes, (mu_bar, delta, alpha, beta, gamma) = ("
                      << bk::detail::join_ints(sweep.constant_tuple) << ")\n";
        } else {
            std::cout << "constant across range: no\n";
        }
    }
    return 0;
}

int cmd_plumbing(const std::string& expr, const std::string& format) {
    bk::SeifertPresentation pres = bk::parse(expr);
    bool any = false;
    for (const auto& sm : pres.summands) {
        if (sm.is_trivial()) {
            if (format == "dot") std::cout << "// trivial summand (S3): no plumbing\n";
            continue;
        }
        any = true;
        bk::PlumbingGraph g = bk::build_plumbing(bk::normalize(sm.multiplicities));
        if (format == "json") {
            bk::json j = bk::plumbing_to_json(g);
            j["orientation"] = sm.reversed ? "-" : "+";
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << bk::to_dot(g);
        }
    }
    if (!any) {
        if (format == "json") std::cout << "[]\n";
        else if (pres.summands.empty()) std::cout << "// S3: no plumbing\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seifert homology sphere invariants and scalar-curvature obstructions"};
    app.require_subcommand(1);

    bool json_mode = false;
    bool assume_projective = false;
    int jobs = 1;
    std::string plumbing_fmt;  // empty = no graph dump in compute output
    std::string batch_path;
    std::string fixtures_path;
    std::vector<std::string> expr_parts;
    std::string pattern_text;
    long long from = 1, to = 1;
    std::string graph_fmt = "dot";

    auto* compute = app.add_subcommand("compute", "full invariant record for an expression");
    compute->add_option("expr", expr_parts, "expression, e.g. \"Sigma(2,3,11) # Sigma(2,3,5)\"");
    compute->add_flag("--json", json_mode, "machine readable output");
    compute->add_option("--plumbing", plumbing_fmt, "also dump plumbing graphs (dot|json)")
        ->check(CLI::IsMember({"dot", "json"}));
    compute->add_flag("--assume-projective", assume_projective,
                      "apply the connected-sum formulas without a projectivity certificate");
    compute->add_option("--batch", batch_path, "file with one expression per line, # comments");
    compute->add_option("--jobs", jobs, "worker threads for batch mode")
        ->check(CLI::Range(1, 256));

    auto* family = app.add_subcommand("family", "sweep a one-parameter family Sigma(p,q,c*n+r)");
    family->add_option("pattern", pattern_text, "e.g. \"Sigma(2,3,12n-1)\"")->required();
    family->add_option("--from", from, "first n")->required();
    family->add_option("--to", to, "last n")->required();
    family->add_flag("--json", json_mode, "machine readable output");
    family->add_flag("--assume-projective", assume_projective,
                     "apply the connected-sum formulas without a projectivity certificate");
    family->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

    auto* obstruct = app.add_subcommand("obstruct", "verdicts only for an expression");
    obstruct->add_option("expr", expr_parts, "expression")->required();
    obstruct->add_flag("--json", json_mode, "machine readable output");
    obstruct->add_flag("--assume-projective", assume_projective,
                       "apply the connected-sum formulas without a projectivity certificate");

    auto* plumbing = app.add_subcommand("plumbing", "plumbing graph dump for an expression");
    plumbing->add_option("expr", expr_parts, "expression")->required();
    plumbing->add_option("--format", graph_fmt, "dot (default) or json")
        ->check(CLI::IsMember({"dot", "json"}));

    auto* selftest = app.add_subcommand("selftest", "run the golden corpus and oracle checks");
    selftest->add_option("--fixtures", fixtures_path, "JSON Lines fixture file (default: embedded)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) {
            bk::AnalyzeOptions opt;
            opt.assume_projective = assume_projective;
            bk::GraphDump dump = plumbing_fmt == "dot"    ? bk::GraphDump::dot
                                 : plumbing_fmt == "json" ? bk::GraphDump::json_graph
                                                          : bk::GraphDump::none;
            std::vector<std::string> exprs;
            if (!batch_path.empty()) {
                if (!expr_parts.empty())
                    throw bk::domain_error("give either an expression or --batch, not both");
                exprs = read_batch(batch_path);
            } else {
                if (expr_parts.empty())
                    throw bk::domain_error("missing expression (or --batch file)");
                exprs.push_back(join_args(expr_parts));
            }
            return emit_entries(exprs, json_mode, dump, opt, false, jobs);
        }
        if (family->parsed()) {
            bk::AnalyzeOptions opt;
            opt.assume_projective = assume_projective;
            return cmd_family(pattern_text, from, to, json_mode, opt, jobs);
        }
        if (obstruct->parsed()) {
            bk::AnalyzeOptions opt;
            opt.assume_projective = assume_projective;
            std::vector<std::string> exprs = {join_args(expr_parts)};
            return emit_entries(exprs, json_mode, bk::GraphDump::none, opt, true, 1);
        }
        if (plumbing->parsed()) {
            return cmd_plumbing(join_args(expr_parts), graph_fmt);
        }
        if (selftest->parsed()) {
            std::string fixtures;
            if (fixtures_path.empty()) {
                fixtures = bk::embedded_fixtures();
            } else {
                std::ifstream in(fixtures_path);
                if (!in) throw bk::domain_error("cannot open fixtures file: " + fixtures_path);
                std::ostringstream ss;
                ss << in.rdbuf();
                fixtures = ss.str();
            }
            bk::SelftestResult res = bk::run_selftest(fixtures, std::cout);
            return res.ok() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        int code = code_of(e);
        std::cerr << label_of(code) << ": " << describe(e) << "\n";
        return code;
    }
    return 0;
}
