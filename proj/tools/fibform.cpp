#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <fibform/fibform.hpp>

namespace {

using namespace fibform;

// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 unsupported
// input. Exception types map onto them; the catch order respects inheritance
// (UnsupportedPrime is an invalid_argument, BudgetExceeded a runtime_error).
int run_guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const UnsupportedPrime& e) {
        std::cerr << "fibform: unsupported: " << e.what() << '\n';
        return 3;
    } catch (const BudgetExceeded& e) {
        std::cerr << "fibform: unsupported: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "fibform: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "fibform: " << e.what() << '\n';
        return 1;
    }
}

double ms_since(const std::chrono::steady_clock::time_point& start) {
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
    return dt.count();
}

nlohmann::ordered_json unit_to_json(const PellUnit& un) {
    nlohmann::ordered_json j;
    j["X"] = un.X.get_str();
    j["Y"] = un.Y.get_str();
    j["norm4"] = un.norm4;
    return j;
}

std::string unit_to_line(const PellUnit& un) {
    return "X=" + un.X.get_str() + " Y=" + un.Y.get_str() +
           " norm4=" + std::to_string(un.norm4);
}

int cmd_represent(std::uint64_t p, OutputFormat format) {
    const auto start = std::chrono::steady_clock::now();
    const RepresentationDetail det = represent_detail(p);
    const ResultRecord record = make_record(det, ms_since(start));
    print_records(std::cout, {record}, format);
    return record.identity_ok ? 0 : 1;
}

int cmd_scan(std::uint64_t p_min, std::uint64_t p_max, unsigned jobs, const std::string& cache,
             OutputFormat format) {
    const ScanSummary summary = scan_range(p_min, p_max, jobs, cache);
    print_summary(std::cout, summary, format);
    return summary.failures == 0 ? 0 : 1;
}

int cmd_pell(std::uint64_t p, std::size_t k, OutputFormat format) {
    const PellUnit fundamental = fundamental_unit4(p);
    const PellUnit plus4 = norm_plus4_unit(p);
    for (const PellUnit& un : {fundamental, plus4}) {
        if (un.X * un.X - p * mpz_class(un.Y * un.Y) != un.norm4)
            throw std::logic_error("pell: unit fails its norm equation");
    }
    const auto start = std::chrono::steady_clock::now();
    const std::vector<Representation> sols = generate_solutions(p, k);
    const double each_ms = sols.empty() ? 0.0 : ms_since(start) / static_cast<double>(sols.size());
    std::vector<ResultRecord> records;
    records.reserve(sols.size());
    for (const Representation& rep : sols)
        records.push_back(make_record({rep, std::nullopt, std::nullopt}, each_ms));

    if (format == OutputFormat::Table) {
        std::cout << "fundamental_unit4  " << unit_to_line(fundamental) << '\n'
                  << "plus4_unit         " << unit_to_line(plus4) << '\n';
        if (!records.empty()) std::cout << '\n';
        print_records(std::cout, records, format);
    } else if (format == OutputFormat::Csv) {
        print_records(std::cout, records, format); // units have no column home
    } else {
        nlohmann::ordered_json units;
        units["fundamental_unit4"] = unit_to_json(fundamental);
        units["plus4_unit"] = unit_to_json(plus4);
        if (format == OutputFormat::Json) {
            nlohmann::ordered_json j;
            j["units"] = units;
            j["solutions"] = nlohmann::ordered_json::array();
            for (const auto& r : records) j["solutions"].push_back(record_to_json(r));
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << units.dump() << '\n';
            print_records(std::cout, records, format);
        }
    }
    for (const auto& r : records)
        if (!r.identity_ok) return 1;
    return 0;
}

int cmd_verify(std::uint64_t p, const std::string& u_str, const std::string& v_str,
               OutputFormat format) {
    if (!is_prime(p)) throw NotPrime("verify: " + std::to_string(p) + " is not prime");
    if (p == 2) throw UnsupportedPrime("verify: p = 2 is not covered");
    Representation rep{p, case_for_prime(p), abs(mpz_class(u_str)), abs(mpz_class(v_str)),
                       4 * fib(p)};
    const ResultRecord record = make_record({rep, std::nullopt, std::nullopt}, 0.0);
    print_records(std::cout, {record}, format);
    return record.identity_ok ? 0 : 1;
}

int cmd_gamma_dump(std::uint64_t p, OutputFormat format) {
    if (!is_prime(p)) throw NotPrime("gamma-dump: " + std::to_string(p) + " is not prime");
    if (p < 7) throw UnsupportedPrime("gamma-dump: needs p >= 7");
    const PrimeContext ctx = make_context(p);
    const CycloPoly gamma = compute_gamma(ctx);
    const KCoordinates coords = extract_K_coordinates(ctx, gamma);
    const IntegralBasisCoords basis = integral_basis_coords(coords);
    const bool norm_ok = verify_norm_product(ctx, gamma);
    const bool sigma5_ok = verify_sigma5_relation(ctx, gamma);
    const bool period_ok = gauss_period_check(ctx);

    const char* coord_names[] = {"w", "x", "y", "z"};
    const Dyadic* coord_vals[] = {&coords.w, &coords.x, &coords.y, &coords.z};
    const char* basis_names[] = {"a", "b", "c", "d"};
    const mpz_class* basis_vals[] = {&basis.a, &basis.b, &basis.c, &basis.d};

    switch (format) {
    case OutputFormat::Table: {
        auto row = [](const std::string& k, const std::string& v) {
            std::cout << std::left << std::setw(15) << k << v << '\n';
        };
        row("p", std::to_string(p));
        for (int i = 0; i < 4; ++i) row(coord_names[i], coord_vals[i]->str());
        for (int i = 0; i < 4; ++i) row(basis_names[i], basis_vals[i]->get_str());
        row("norm_product", norm_ok ? "true" : "false");
        row("sigma5", sigma5_ok ? "true" : "false");
        row("gauss_period", period_ok ? "true" : "false");
        break;
    }
    case OutputFormat::Csv:
        std::cout << "p,w,x,y,z,a,b,c,d,norm_product,sigma5,gauss_period\n" << p;
        for (int i = 0; i < 4; ++i) std::cout << ',' << coord_vals[i]->str();
        for (int i = 0; i < 4; ++i) std::cout << ',' << basis_vals[i]->get_str();
        std::cout << ',' << (norm_ok ? "true" : "false") << ',' << (sigma5_ok ? "true" : "false")
                  << ',' << (period_ok ? "true" : "false") << '\n';
        break;
    case OutputFormat::Json:
    case OutputFormat::Jsonl: {
        nlohmann::ordered_json j;
        j["p"] = p;
        for (int i = 0; i < 4; ++i) j["coords"][coord_names[i]] = coord_vals[i]->str();
        for (int i = 0; i < 4; ++i) j["integral_basis"][basis_names[i]] = basis_vals[i]->get_str();
        j["norm_product"] = norm_ok;
        j["sigma5"] = sigma5_ok;
        j["gauss_period"] = period_ok;
        std::cout << j.dump(format == OutputFormat::Json ? 2 : -1) << '\n';
        break;
    }
    }
    return norm_ok && sigma5_ok && period_ok ? 0 : 1;
}

int cmd_oracle(std::uint64_t p, const SearchBudget& budget, OutputFormat format) {
    if (!is_prime(p)) throw NotPrime("oracle: " + std::to_string(p) + " is not prime");
    if (p == 2) throw UnsupportedPrime("oracle: p = 2 is not covered");
    const auto start = std::chrono::steady_clock::now();
    const Representation rep =
        p % 4 == 1 ? brute_force_case1(p, budget) : brute_force_case2(p, budget);
    const ResultRecord record = make_record({rep, std::nullopt, std::nullopt}, ms_since(start));
    print_records(std::cout, {record}, format);
    return record.identity_ok ? 0 : 1;
}

int cmd_fib(std::uint64_t n, bool with_residual, OutputFormat format) {
    const mpz_class fn = fib(n);
    std::string residual;
    if (with_residual) {
        std::ostringstream os;
        os << std::scientific << std::setprecision(3) << product_formula_residual(n);
        residual = os.str();
    }
    switch (format) {
    case OutputFormat::Table:
        std::cout << std::left << std::setw(15) << "n" << n << '\n'
                  << std::left << std::setw(15) << "fib" << fn.get_str() << '\n';
        if (with_residual)
            std::cout << std::left << std::setw(15) << "residual" << residual << '\n';
        break;
    case OutputFormat::Csv:
        std::cout << "n,fib" << (with_residual ? ",residual" : "") << '\n'
                  << n << ',' << fn.get_str();
        if (with_residual) std::cout << ',' << residual;
        std::cout << '\n';
        break;
    case OutputFormat::Json:
    case OutputFormat::Jsonl: {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["fib"] = fn.get_str();
        if (with_residual) j["residual"] = residual;
        std::cout << j.dump(format == OutputFormat::Json ? 2 : -1) << '\n';
        break;
    }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadratic-form representations of 4*F_p at odd primes"};
    app.require_subcommand(1);

    std::string format_name = "table";
    const auto add_format = [&format_name](CLI::App* sub) {
        sub->add_option("--format", format_name, "output format")
            ->check(CLI::IsMember({"table", "json", "jsonl", "csv"}))
            ->capture_default_str();
    };

    int exit_code = 0;

    std::uint64_t rep_p = 0;
    CLI::App* rep = app.add_subcommand("represent", "construct and verify the representation");
    rep->add_option("p", rep_p, "odd prime")->required();
    add_format(rep);
    rep->callback([&] {
        exit_code = run_guarded([&] { return cmd_represent(rep_p, parse_format(format_name)); });
    });

    std::uint64_t scan_min = 0, scan_max = 0;
    unsigned scan_jobs = 1;
    std::string scan_cache = "./fibform-cache.jsonl";
    CLI::App* scan = app.add_subcommand("scan", "represent every prime in a range, cached");
    scan->add_option("p_min", scan_min, "lower bound (>= 3)")->required();
    scan->add_option("p_max", scan_max, "upper bound")->required();
    scan->add_option("--jobs", scan_jobs, "worker threads")
        ->check(CLI::Range(1u, 1024u))
        ->capture_default_str();
    scan->add_option("--cache", scan_cache, "JSONL results cache")
        ->envname("FIBFORM_CACHE")
        ->capture_default_str();
    add_format(scan);
    scan->callback([&] {
        exit_code = run_guarded([&] {
            return cmd_scan(scan_min, scan_max, scan_jobs, scan_cache, parse_format(format_name));
        });
    });

    std::uint64_t pell_p = 0;
    std::size_t pell_k = 1;
    CLI::App* pell = app.add_subcommand("pell", "unit orbit of solutions for p = 1 mod 4");
    pell->add_option("p", pell_p, "prime = 1 mod 4")->required();
    pell->add_option("k", pell_k, "how many solutions")->capture_default_str();
    add_format(pell);
    pell->callback([&] {
        exit_code =
            run_guarded([&] { return cmd_pell(pell_p, pell_k, parse_format(format_name)); });
    });

    std::uint64_t verify_p = 0;
    std::string verify_u, verify_v;
    CLI::App* verify = app.add_subcommand("verify", "check a claimed pair exactly");
    verify->add_option("p", verify_p, "odd prime")->required();
    verify->add_option("u", verify_u, "claimed u")->required();
    verify->add_option("v", verify_v, "claimed v")->required();
    add_format(verify);
    verify->callback([&] {
        exit_code = run_guarded(
            [&] { return cmd_verify(verify_p, verify_u, verify_v, parse_format(format_name)); });
    });

    std::uint64_t dump_p = 0;
    CLI::App* dump = app.add_subcommand("gamma-dump", "exact coordinates and internal checks");
    dump->add_option("p", dump_p, "prime >= 7")->required();
    add_format(dump);
    dump->callback([&] {
        exit_code = run_guarded([&] { return cmd_gamma_dump(dump_p, parse_format(format_name)); });
    });

    std::uint64_t oracle_p = 0;
    SearchBudget budget;
    CLI::App* oracle = app.add_subcommand("oracle", "independent brute-force search");
    oracle->add_option("p", oracle_p, "odd prime")->required();
    oracle->add_option("--max-v", budget.max_v, "CaseI search ceiling");
    oracle->add_option("--max-p", budget.enabled_max_p, "prime cutoff")->capture_default_str();
    add_format(oracle);
    oracle->callback([&] {
        exit_code =
            run_guarded([&] { return cmd_oracle(oracle_p, budget, parse_format(format_name)); });
    });

    std::uint64_t fib_n = 0;
    bool fib_residual = false;
    CLI::App* fibc = app.add_subcommand("fib", "Fibonacci numbers");
    fibc->add_option("n", fib_n, "index")->required();
    fibc->add_flag("--residual", fib_residual, "also print the product-formula residual (n <= 40)");
    add_format(fibc);
    fibc->callback([&] {
        exit_code = run_guarded(
            [&] { return cmd_fib(fib_n, fib_residual, parse_format(format_name)); });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return exit_code;
}
