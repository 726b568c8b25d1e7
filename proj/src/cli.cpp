#include "repcat/cli.hpp"

#include "repcat/concat.hpp"
#include "repcat/errors.hpp"
#include "repcat/oracle.hpp"
#include "repcat/render.hpp"
#include "repcat/vpalindrome.hpp"

#include <CLI11.hpp>

#include <limits>
#include <ostream>

namespace repcat::cli {

namespace {

struct ProblemFlags {
    u64 n = 0;
    u64 base = 0;
    i64 a = 0;
    u64 m = 0;
};

void add_problem_flags(CLI::App& cmd, ProblemFlags& flags, bool required) {
    auto* n = cmd.add_option("--n", flags.n, "number to concatenate (>= 1)")->check(CLI::PositiveNumber);
    auto* b = cmd.add_option("--base", flags.base, "base in [2, 36]")->check(CLI::Range(2, 36));
    auto* a = cmd.add_option("--a", flags.a, "target residue (any sign)");
    auto* m = cmd.add_option("--m", flags.m, "modulus (>= 1)")->check(CLI::PositiveNumber);
    if (required) {
        for (auto* opt : {n, b, a, m})
            opt->required();
    }
}

CongruenceProblem to_problem(const ProblemFlags& f) { return {f.n, f.base, f.a, f.m}; }

BigInt parse_positive(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw DomainError("'" + text + "' is not a positive decimal integer");
    BigInt value(text);
    if (value < 1)
        throw DomainError("'" + text + "' is not a positive decimal integer");
    return value;
}

std::string join(const std::vector<u64>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? " " : "") + std::to_string(xs[i]);
    return s;
}

Json string_array(const std::vector<u64>& xs) {
    Json arr = Json::array();
    for (u64 x : xs)
        arr.push_back(std::to_string(x));
    return arr;
}

Json report_json(const CrossCheckReport& r) {
    Json mismatches = Json::array();
    for (const auto& mm : r.mismatches)
        mismatches.push_back(Json{{"k", std::to_string(mm.k)}, {"oracle", mm.oracle}, {"solver", mm.solver}});
    return Json{{"problem", to_json(r.problem)},
                {"kmax", std::to_string(r.kmax)},
                {"solution", to_json(r.solution)},
                {"passed", r.passed()},
                {"mismatches", std::move(mismatches)}};
}

void print_report(std::ostream& out, const CrossCheckReport& r) {
    const auto& p = r.problem;
    out << (r.passed() ? "PASS" : "FAIL") << "  n=" << p.n << " base=" << p.base << " a=" << p.a << " m=" << p.m
        << " kmax=" << r.kmax << "  " << to_text(r.solution) << "\n";
    for (const auto& mm : r.mismatches)
        out << "  mismatch at k=" << mm.k << ": oracle=" << std::boolalpha << mm.oracle << " solver=" << mm.solver
            << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Repetition counts k for which the k-fold base-b concatenation of n lies in a + mZ"};
    app.name("repcat");
    app.require_subcommand(1);

    // solve
    ProblemFlags solve_flags;
    bool solve_trace = false, solve_json = false;
    std::size_t enumerate_count = 0;
    auto* solve_cmd = app.add_subcommand("solve", "solve n(k)_b == a (mod m) for k >= 1");
    add_problem_flags(*solve_cmd, solve_flags, true);
    solve_cmd->add_flag("--trace", solve_trace, "show the steps taken");
    solve_cmd->add_flag("--json", solve_json, "emit a JSON document");
    solve_cmd->add_option("--enumerate", enumerate_count, "also list the first COUNT solutions")
        ->check(CLI::PositiveNumber);

    // oracle
    ProblemFlags oracle_flags;
    u64 kmax = 0, seed = 1;
    std::size_t random_count = 0;
    bool oracle_json = false;
    auto* oracle_cmd = app.add_subcommand("oracle", "cross-check the solver against brute force");
    add_problem_flags(*oracle_cmd, oracle_flags, false);
    oracle_cmd->add_option("--kmax", kmax, "largest k to test (default: max(2000, 4 * period))")
        ->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--random", random_count, "check COUNT seeded random problems instead")
        ->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--seed", seed, "seed for --random");
    oracle_cmd->add_flag("--json", oracle_json, "emit a JSON document");

    // vpal
    auto* vpal_cmd = app.add_subcommand("vpal", "v-palindrome tools");
    vpal_cmd->require_subcommand(1);
    bool vpal_json = false;
    std::string check_n;
    auto* check_cmd = vpal_cmd->add_subcommand("check", "is N a v-palindrome?");
    check_cmd->add_option("N", check_n, "positive integer")->required();
    check_cmd->add_flag("--json", vpal_json, "emit a JSON document");
    u64 family_n = 0, family_kmax = 0;
    auto* family_cmd = vpal_cmd->add_subcommand("family", "v-palindromy of n, nn, nnn, ...");
    family_cmd->add_option("--n", family_n, "number to concatenate")->required()->check(CLI::PositiveNumber);
    family_cmd->add_option("--kmax", family_kmax, "number of copies to go up to")->required()->check(CLI::PositiveNumber);
    family_cmd->add_flag("--json", vpal_json, "emit a JSON document");
    std::string rho_text;
    auto* theorem_cmd = vpal_cmd->add_subcommand("theorem", "18 * rho for a 0/1 decimal palindrome rho");
    theorem_cmd->add_option("--rho", rho_text, "decimal palindrome of 0s and 1s")->required();
    theorem_cmd->add_flag("--json", vpal_json, "emit a JSON document");

    std::vector<std::string> argv_storage{"repcat"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_storage)
        argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        if (*solve_cmd) {
            const auto problem = to_problem(solve_flags);
            const auto [solution, trace] = solve(problem);
            const auto members = enumerate_count ? enumerate(solution, enumerate_count) : std::vector<u64>{};
            if (solve_json) {
                Json doc{{"problem", to_json(problem)}, {"solution", to_json(solution)}, {"text", to_text(solution)}};
                if (enumerate_count)
                    doc["enumerate"] = string_array(members);
                if (solve_trace)
                    doc["trace"] = to_json(trace);
                out << doc.dump(2) << "\n";
            } else {
                out << to_text(solution) << "\n";
                if (enumerate_count)
                    out << join(members) << "\n";
                if (solve_trace)
                    out << to_text(trace);
            }
            return kSuccess;
        }

        if (*oracle_cmd) {
            std::vector<CongruenceProblem> problems;
            if (random_count > 0) {
                problems = random_problems(random_count, seed);
            } else {
                for (const char* flag : {"--n", "--base", "--a", "--m"}) {
                    if (oracle_cmd->count(flag) == 0) {
                        err << "oracle: " << flag << " is required unless --random is given\n";
                        return kUsageError;
                    }
                }
                problems.push_back(to_problem(oracle_flags));
            }
            bool all_passed = true;
            Json reports = Json::array();
            for (const auto& problem : problems) {
                const u64 limit = kmax ? kmax : default_kmax(solve(problem).solution);
                const auto report = cross_check(problem, limit);
                all_passed = all_passed && report.passed();
                if (oracle_json)
                    reports.push_back(report_json(report));
                else if (problems.size() == 1 || !report.passed())
                    print_report(out, report);
            }
            if (oracle_json) {
                out << Json{{"passed", all_passed}, {"reports", std::move(reports)}}.dump(2) << "\n";
            } else if (problems.size() > 1) {
                out << (all_passed ? "PASS" : "FAIL") << "  " << problems.size() << " random problems, seed "
                    << seed << "\n";
            }
            return all_passed ? kSuccess : kCrossCheckFailed;
        }

        if (*check_cmd) {
            const BigInt n = parse_positive(check_n);
            const BigInt r = digit_reverse(n, 10);
            const bool verdict = is_v_palindrome(n);
            const u64 vn = v(n), vr = v(r);
            if (vpal_json) {
                out << Json{{"n", n.str()}, {"reverse", r.str()}, {"v_n", std::to_string(vn)},
                            {"v_reverse", std::to_string(vr)}, {"v_palindrome", verdict}}
                           .dump(2)
                    << "\n";
            } else {
                out << std::boolalpha << verdict << "\n"
                    << "v(" << n << ") = " << vn << "\n"
                    << "v(" << r << ") = " << vr << "\n";
            }
            return kSuccess;
        }

        if (*family_cmd) {
            const auto rows = concat_family_check(family_n, family_kmax);
            if (vpal_json) {
                Json arr = Json::array();
                for (const auto& [k, ok] : rows)
                    arr.push_back(Json{{"k", std::to_string(k)}, {"v_palindrome", ok}});
                out << Json{{"n", std::to_string(family_n)}, {"family", std::move(arr)}}.dump(2) << "\n";
            } else {
                for (const auto& [k, ok] : rows)
                    out << k << " " << std::boolalpha << ok << "\n";
            }
            return kSuccess;
        }

        if (*theorem_cmd) {
            const BigInt rho = parse_positive(rho_text);
            const BigInt product = eighteen_times_palindrome(rho);
            const bool verdict = is_v_palindrome(product);
            if (vpal_json)
                out << Json{{"rho", rho.str()}, {"product", product.str()}, {"v_palindrome", verdict}}.dump(2) << "\n";
            else
                out << product << " — v-palindrome: " << std::boolalpha << verdict << "\n";
            return kSuccess;
        }
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return kCapacityError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

} // namespace repcat::cli
