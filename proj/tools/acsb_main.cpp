// acsb: divisibility certificates for almost complex structures on sphere
// bundles over complex projective space.
//
// check         decide one (n, q) pair and print the witness certificate
// scan          sweep an (n, q) rectangle, flag prediction violations
// divisibility  p-adic divisibility exponents of Chern classes c_k
// verify        brute-force property suites over parameter grids
// a-table       thresholds a(n) and the dyadic fallback threshold
//
// Exit codes: 0 success (check: witness found; scan/verify: no violations),
// 1 negative result, 2 usage or resource-cap error.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "acsb/acs.hpp"
#include "acsb/cherndiv.hpp"
#include "acsb/errors.hpp"
#include "acsb/grids.hpp"
#include "acsb/serialize.hpp"

namespace {

using acsb::BigInt;
using serialize::Json;

std::string bool_token(bool b) { return b ? "true" : "false"; }

std::string certificate_text(const acs::WitnessCertificate& cert) {
    std::ostringstream os;
    os << "witness: prime " << cert.prime << " condition "
       << (cert.condition == acs::WitnessCondition::A ? "A" : "B");
    const char* cmp = cert.strict ? ">" : ">=";
    if (cert.condition == acs::WitnessCondition::B) {
        os << " (" << cert.prime << "^" << *cert.exponent << " - " << cert.q << " = "
           << cert.lhs.get_str() << " " << cmp << " n = " << cert.rhs << ")";
    } else {
        os << " (v_" << cert.prime << "((q-1)!) = " << cert.lhs.get_str() << " " << cmp
           << " v_" << cert.prime << "(chi) + delta + 1 = " << cert.rhs << ")";
    }
    return os.str();
}

std::string range_text(const cherndiv::DivisibilityRange& r) {
    if (r.empty) return "empty";
    std::ostringstream os;
    os << "k in [" << r.k_min << ", " << r.k_max.get_str() << (r.inclusive ? "]" : ")")
       << ", exponent " << r.exponent;
    return os.str();
}

void print_term_report_text(const cherndiv::TermValuationReport& report, std::ostream& os) {
    os << "  partition (lowest part " << report.partition.lowest_part() << "):";
    for (const auto& [part, m] : report.partition.nonzero_parts()) {
        os << " " << part << "^" << m;
    }
    os << "\n";
    for (const auto& entry : report.breakdown) {
        os << "    part " << entry.part << " x" << entry.multiplicity
           << ": factor valuation " << entry.factor_valuation << "\n";
    }
    os << "    multinomial correction: -" << report.multiset_correction << "\n";
    os << "    term valuation: " << report.valuation << "\n";
}

// The exponent the obstruction argument needs from c_k divisibility: one more
// than v_p(chi) + delta_p. Used to pick the range parameters in --explain.
std::int64_t explain_exponent(const acs::WitnessCertificate& cert) {
    padic::Prime p(cert.prime);
    return padic::vp_int(p, BigInt(static_cast<long>(cert.chi))).value() + cert.delta_p + 1;
}

int run_check(std::int64_t n, std::int64_t q, std::optional<std::int64_t> chi, bool explain,
              const std::string& format) {
    if (n < 1 || n > 1'000'000'000) {
        std::cerr << "check: n must be in [1, 10^9]\n";
        return 2;
    }
    if (q < 1 || q > 512) {
        std::cerr << "check: q must be in [1, 512]\n";
        return 2;
    }
    if (explain && n + q > symfunc::kMaxPartitionWeight) {
        std::cerr << "check: --explain enumerates partitions of n+q and requires n+q <= "
                  << symfunc::kMaxPartitionWeight << "\n";
        return 2;
    }
    acs::CheckResult result = acs::canonical_check(n, q, chi);
    const auto& bp = result.params;

    std::optional<std::int64_t> l;
    std::optional<cherndiv::DivisibilityRange> range_small, range_power;
    std::optional<cherndiv::TermValuationReport> term;
    std::optional<symfunc::SymbolicCombination> expansion;
    if (explain && result.witness) {
        padic::Prime p(result.witness->prime);
        l = explain_exponent(*result.witness);
        auto ranges = cherndiv::divisibility_ranges(p, q, *l);
        range_small = ranges.first;
        range_power = ranges.second;
        term = cherndiv::ck_minimizing_term(p, q, n + q);
        expansion = symfunc::sigma_from_powersums(n + q, q);
    }

    if (format == "json") {
        Json j;
        j["n"] = bp.n;
        j["q"] = bp.q;
        j["chi"] = bp.chi;
        j["a_n"] = acs::a_of_n(bp.n);
        j["expected"] = bp.q >= acs::a_of_n(bp.n);
        j["witness"] = result.witness ? serialize::to_json(*result.witness) : Json(nullptr);
        if (explain) {
            if (result.witness) {
                Json e;
                e["prime"] = result.witness->prime;
                e["l"] = *l;
                e["range_small"] = serialize::to_json(*range_small);
                e["range_power"] = serialize::to_json(*range_power);
                e["k"] = n + q;
                e["minimizing_term"] = serialize::to_json(*term);
                e["sigma_expansion"] = serialize::to_json(*expansion);
                j["explain"] = std::move(e);
            } else {
                j["explain"] = nullptr;
            }
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "check n=" << bp.n << " q=" << bp.q << " chi=" << bp.chi
                  << " (a(n)=" << acs::a_of_n(bp.n) << ")\n";
        if (result.witness) {
            std::cout << certificate_text(*result.witness) << "\n";
        } else {
            std::cout << "no witness found\n";
        }
        if (explain && result.witness) {
            std::cout << "divisibility context at p=" << result.witness->prime << ", l=" << *l
                      << ":\n";
            std::cout << "  range (i):  " << range_text(*range_small) << "\n";
            std::cout << "  range (ii): " << range_text(*range_power) << "\n";
            std::cout << "minimizing term for k = n+q = " << n + q << ":\n";
            print_term_report_text(*term, std::cout);
            std::cout << "sigma_" << n + q << " in power sums s_i (i >= " << q << "): "
                      << expansion->terms.size() << " terms\n";
        }
    }
    return result.witness ? 0 : 1;
}

int run_scan(std::int64_t n_max, std::int64_t q_max, const std::string& format) {
    grids::ScanResult result = grids::run_scan(n_max, q_max, grids::Execution::Parallel);

    if (format == "csv") {
        std::cout << "n,q,a_n,expected,witness_prime,condition\n";
        for (const auto& row : result.rows) {
            std::cout << row.n << "," << row.q << "," << row.a_n << ","
                      << bool_token(row.expected) << ",";
            if (row.witness) {
                std::cout << row.witness->prime << ","
                          << (row.witness->condition == acs::WitnessCondition::A ? "A" : "B");
            } else {
                std::cout << "-,-";
            }
            std::cout << "\n";
        }
        std::cerr << "violations: " << result.prediction_violations << "\n";
    } else if (format == "json") {
        Json j;
        Json rows = Json::array();
        for (const auto& row : result.rows) rows.push_back(serialize::to_json(row));
        j["rows"] = std::move(rows);
        j["violations"] = result.prediction_violations;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "scan n <= " << n_max << ", q <= " << q_max << "\n";
        for (const auto& row : result.rows) {
            std::cout << "n=" << row.n << " q=" << row.q << " a(n)=" << row.a_n
                      << " expected=" << bool_token(row.expected) << " ";
            if (row.witness) {
                std::cout << "witness p=" << row.witness->prime << " condition "
                          << (row.witness->condition == acs::WitnessCondition::A ? "A" : "B");
            } else {
                std::cout << "witness none";
            }
            std::cout << "\n";
        }
        std::cout << "violations: " << result.prediction_violations << "\n";
    }
    return result.prediction_violations == 0 ? 0 : 1;
}

int run_divisibility(std::int64_t p_arg, std::int64_t q, std::optional<std::int64_t> l,
                     std::optional<std::int64_t> k, const std::string& format) {
    if (l.has_value() == k.has_value()) {
        std::cerr << "divisibility: exactly one of --l and --k is required\n";
        return 2;
    }
    if (p_arg < 2 || q < 1 || q > 1'000'000) {
        std::cerr << "divisibility: need p >= 2 and 1 <= q <= 10^6\n";
        return 2;
    }
    padic::Prime p(static_cast<std::uint64_t>(p_arg)); // throws if composite

    if (l) {
        if (*l < 1 || *l > 1'000'000) {
            std::cerr << "divisibility: l must be in [1, 10^6]\n";
            return 2;
        }
        auto [small, power] = cherndiv::divisibility_ranges(p, q, *l);
        if (format == "json") {
            Json j;
            j["p"] = p_arg;
            j["q"] = q;
            j["l"] = *l;
            j["range_small"] = serialize::to_json(small);
            j["range_power"] = serialize::to_json(power);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "divisibility p=" << p_arg << " q=" << q << " l=" << *l << "\n";
            std::cout << "  range (i):  " << range_text(small) << "\n";
            std::cout << "  range (ii): " << range_text(power) << "\n";
        }
        return 0;
    }

    if (*k < q) {
        std::cerr << "divisibility: k must be >= q\n";
        return 2;
    }
    if (*k > symfunc::kMaxPartitionWeight) {
        std::cerr << "divisibility: k is capped at " << symfunc::kMaxPartitionWeight
                  << " (partition enumeration)\n";
        return 2;
    }
    auto report = cherndiv::ck_minimizing_term(p, q, *k);
    if (format == "json") {
        Json j;
        j["p"] = p_arg;
        j["q"] = q;
        j["k"] = *k;
        j["bound"] = report.valuation.value();
        j["minimizing_term"] = serialize::to_json(report);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "divisibility p=" << p_arg << " q=" << q << " k=" << *k << "\n";
        std::cout << "bound: " << report.valuation << "\n";
        print_term_report_text(report, std::cout);
    }
    return 0;
}

int run_verify(const std::string& suite_name, const grids::SuiteBounds& bounds) {
    auto suite = grids::suite_from_name(suite_name);
    if (!suite) {
        std::cerr << "verify: unknown suite '" << suite_name
                  << "' (expected one of: legendre, lemma-sp, lemma-vp, newton, dchern, "
                     "corollary, main-theorem)\n";
        return 2;
    }
    std::cerr << "verify: running suite " << suite_name << " with " << grids::worker_count()
              << " worker(s)\n";
    grids::VerifyReport report = grids::run_suite(*suite, bounds, grids::Execution::Parallel);
    std::cout << "suite: " << grids::suite_name(report.suite) << "\n";
    std::cout << "grid: " << report.grid_description << "\n";
    std::cout << "cases: " << report.cases << "\n";
    std::cout << "failures: " << report.failure_count << "\n";
    for (const auto& f : report.failures) std::cout << "  FAIL " << f << "\n";
    if (report.failure_count > report.failures.size()) {
        std::cout << "  (" << report.failure_count - report.failures.size()
                  << " more not shown)\n";
    }
    for (const auto& a : report.anomalies) std::cout << "  note: " << a << "\n";
    std::cout << "result: " << (report.passed() ? "PASS" : "FAIL") << "\n";
    return report.passed() ? 0 : 1;
}

int run_a_table(std::int64_t n_max) {
    if (n_max < 1 || n_max > 1'000'000) {
        std::cerr << "a-table: n-max must be in [1, 10^6]\n";
        return 2;
    }
    std::cout << "n a_n dyadic_threshold\n";
    for (std::int64_t n = 1; n <= n_max; ++n) {
        std::cout << n << " " << acs::a_of_n(n) << " " << acs::dyadic_threshold(n) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic witness certificates against almost complex structures on even "
                 "sphere bundles over CP^n"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "decide a single (n, q) pair");
    std::int64_t n = 0, q = 0;
    std::int64_t chi_val = 0;
    bool explain = false;
    std::string format = "text";
    check->add_option("--n", n, "base CP^n")->required();
    check->add_option("--q", q, "fiber S^{2q}")->required();
    auto* chi_opt = check->add_option("--chi", chi_val, "override Euler number (default n+1)");
    check->add_flag("--explain", explain, "show divisibility ranges and the minimizing term");
    check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // scan
    auto* scan = app.add_subcommand("scan", "sweep an (n, q) rectangle");
    std::int64_t n_max = 0, q_max = 0;
    std::string chi_mode = "cpn";
    std::string scan_format = "text";
    scan->add_option("--n-max", n_max)->required();
    scan->add_option("--q-max", q_max)->required();
    scan->add_option("--chi-mode", chi_mode)->check(CLI::IsMember({"cpn"}));
    scan->add_option("--format", scan_format)->check(CLI::IsMember({"text", "json", "csv"}));

    // divisibility
    auto* divisibility = app.add_subcommand("divisibility", "Chern-class divisibility exponents");
    std::int64_t dp = 0, dq = 0, dl = 0, dk = 0;
    std::string div_format = "text";
    divisibility->add_option("--p", dp, "prime")->required();
    divisibility->add_option("--q", dq)->required();
    auto* l_opt = divisibility->add_option("--l", dl, "target exponent (range mode)");
    auto* k_opt = divisibility->add_option("--k", dk, "single class c_k (bound mode)");
    divisibility->add_option("--format", div_format)->check(CLI::IsMember({"text", "json"}));

    // verify
    auto* verify = app.add_subcommand("verify", "run a brute-force property suite");
    std::string suite;
    grids::SuiteBounds bounds;
    verify->add_option("--suite", suite)->required();
    verify->add_option("--p-max", bounds.p_max);
    verify->add_option("--n-max", bounds.n_max);
    verify->add_option("--q-max", bounds.q_max);
    verify->add_option("--l-max", bounds.l_max);
    verify->add_option("--k-max", bounds.k_max);
    verify->add_option("--samples", bounds.samples);
    verify->add_option("--q-span", bounds.q_span);

    // a-table
    auto* a_table = app.add_subcommand("a-table", "print n, a(n), dyadic threshold");
    std::int64_t table_n_max = 0;
    a_table->add_option("--n-max", table_n_max)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(check)) {
            std::optional<std::int64_t> chi;
            if (chi_opt->count() > 0) chi = chi_val;
            return run_check(n, q, chi, explain, format);
        }
        if (app.got_subcommand(scan)) {
            return run_scan(n_max, q_max, scan_format);
        }
        if (app.got_subcommand(divisibility)) {
            std::optional<std::int64_t> l, k;
            if (l_opt->count() > 0) l = dl;
            if (k_opt->count() > 0) k = dk;
            return run_divisibility(dp, dq, l, k, div_format);
        }
        if (app.got_subcommand(verify)) {
            return run_verify(suite, bounds);
        }
        if (app.got_subcommand(a_table)) {
            return run_a_table(table_n_max);
        }
    } catch (const acsb::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
