#pragma once

#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "fibform/represent.hpp"

namespace fibform {

/// Bump when ResultRecord changes shape; cached records from other versions
/// are recomputed rather than trusted.
inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { Table, Json, Jsonl, Csv };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "table") return OutputFormat::Table;
    if (s == "json") return OutputFormat::Json;
    if (s == "jsonl") return OutputFormat::Jsonl;
    if (s == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown format: " + s);
}

/// One prime's outcome, ready for serialization. Big integers travel as
/// decimal strings so downstream tools never round them.
struct ResultRecord {
    int schema_version = kSchemaVersion;
    std::uint64_t p = 0;
    int p_mod4 = 1;
    std::string case_tag;
    std::string fp;
    std::string u;
    std::string v;
    bool identity_ok = false;
    std::optional<std::array<std::string, 4>> gamma_coords; // "num/4" each
    double elapsed_ms = 0.0;
};

/// Re-proves the identity from the record's own serialized strings, so a
/// record can never claim more than its fields support.
inline bool check_record_identity(const ResultRecord& r) {
    try {
        Representation rep{r.p, case_from_string(r.case_tag), mpz_class(r.u), mpz_class(r.v),
                           4 * mpz_class(r.fp)};
        return verify_representation(rep);
    } catch (const std::invalid_argument&) {
        return false;
    }
}

inline ResultRecord make_record(const RepresentationDetail& det, double elapsed_ms) {
    const Representation& rep = det.rep;
    ResultRecord r;
    r.p = rep.p;
    r.p_mod4 = static_cast<int>(rep.p % 4);
    r.case_tag = to_string(rep.case_tag);
    r.fp = mpz_class(rep.target / 4).get_str();
    r.u = rep.u.get_str();
    r.v = rep.v.get_str();
    if (det.coords) {
        const KCoordinates& k = *det.coords;
        auto quarter = [](const Dyadic& d) { return d.integer_scaled(2).get_str() + "/4"; };
        r.gamma_coords = {quarter(k.w), quarter(k.x), quarter(k.y), quarter(k.z)};
    }
    r.elapsed_ms = elapsed_ms;
    r.identity_ok = check_record_identity(r);
    return r;
}

inline nlohmann::ordered_json record_to_json(const ResultRecord& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = r.schema_version;
    j["p"] = r.p;
    j["p_mod4"] = r.p_mod4;
    j["case_tag"] = r.case_tag;
    j["fp"] = r.fp;
    j["u"] = r.u;
    j["v"] = r.v;
    j["identity_ok"] = r.identity_ok;
    if (r.gamma_coords) {
        j["gamma_coords"] = *r.gamma_coords;
    }
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

/// Lenient cache-line reader: unknown fields are ignored, malformed lines or
/// foreign schema versions yield nullopt and are treated as absent.
inline std::optional<ResultRecord> record_from_json_text(const std::string& line) {
    const auto j = nlohmann::ordered_json::parse(line, nullptr, false);
    if (!j.is_object() || !j.contains("schema_version") || !j.contains("p")) return std::nullopt;
    if (!j["schema_version"].is_number_integer() || !j["p"].is_number_unsigned())
        return std::nullopt;
    ResultRecord r;
    r.schema_version = j["schema_version"].get<int>();
    r.p = j["p"].get<std::uint64_t>();
    r.p_mod4 = j.value("p_mod4", 0);
    r.case_tag = j.value("case_tag", "");
    r.fp = j.value("fp", "");
    r.u = j.value("u", "");
    r.v = j.value("v", "");
    r.identity_ok = j.value("identity_ok", false);
    if (j.contains("gamma_coords") && j["gamma_coords"].is_array() &&
        j["gamma_coords"].size() == 4) {
        std::array<std::string, 4> g;
        for (std::size_t i = 0; i < 4; ++i) g[i] = j["gamma_coords"][i].get<std::string>();
        r.gamma_coords = g;
    }
    r.elapsed_ms = j.value("elapsed_ms", 0.0);
    return r;
}

inline std::string record_to_csv_row(const ResultRecord& r) {
    std::ostringstream os;
    os << r.schema_version << ',' << r.p << ',' << r.p_mod4 << ',' << r.case_tag << ',' << r.fp
       << ',' << r.u << ',' << r.v << ',' << (r.identity_ok ? "true" : "false") << ',';
    if (r.gamma_coords)
        os << (*r.gamma_coords)[0] << ',' << (*r.gamma_coords)[1] << ',' << (*r.gamma_coords)[2]
           << ',' << (*r.gamma_coords)[3];
    else
        os << ",,,";
    os << ',' << r.elapsed_ms;
    return os.str();
}

inline constexpr const char* kCsvHeader =
    "schema_version,p,p_mod4,case_tag,fp,u,v,identity_ok,gamma_w,gamma_x,gamma_y,gamma_z,"
    "elapsed_ms";

inline void print_record_table(std::ostream& os, const ResultRecord& r) {
    auto row = [&os](const char* k, const std::string& v) {
        os << std::left << std::setw(15) << k << v << '\n';
    };
    row("p", std::to_string(r.p));
    row("p_mod4", std::to_string(r.p_mod4));
    row("case_tag", r.case_tag);
    row("fp", r.fp);
    row("u", r.u);
    row("v", r.v);
    row("identity_ok", r.identity_ok ? "true" : "false");
    if (r.gamma_coords) {
        const auto& g = *r.gamma_coords;
        row("gamma_coords", g[0] + " " + g[1] + " " + g[2] + " " + g[3]);
    }
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(2) << r.elapsed_ms;
    row("elapsed_ms", ms.str());
}

inline void print_records(std::ostream& os, const std::vector<ResultRecord>& records,
                          OutputFormat format) {
    switch (format) {
    case OutputFormat::Table:
        for (std::size_t i = 0; i < records.size(); ++i) {
            if (i > 0) os << '\n';
            print_record_table(os, records[i]);
        }
        break;
    case OutputFormat::Json:
        if (records.size() == 1) {
            os << record_to_json(records[0]).dump(2) << '\n';
        } else {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : records) arr.push_back(record_to_json(r));
            os << arr.dump(2) << '\n';
        }
        break;
    case OutputFormat::Jsonl:
        for (const auto& r : records) os << record_to_json(r).dump() << '\n';
        break;
    case OutputFormat::Csv:
        os << kCsvHeader << '\n';
        for (const auto& r : records) os << record_to_csv_row(r) << '\n';
        break;
    }
}

/// Primes the scan covers: odd primes only, since the identities start at 3.
inline std::vector<std::uint64_t> scan_primes(std::uint64_t p_min, std::uint64_t p_max) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = std::max<std::uint64_t>(p_min, 3); p <= p_max; ++p)
        if (p % 2 == 1 && is_prime(p)) out.push_back(p);
    return out;
}

/// Primes already present in the cache at the current schema version.
inline std::set<std::uint64_t> load_cached_primes(const std::string& cache_path) {
    std::set<std::uint64_t> seen;
    std::ifstream in(cache_path);
    if (!in) return seen; // no cache yet is fine
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto rec = record_from_json_text(line);
        if (rec && rec->schema_version == kSchemaVersion) seen.insert(rec->p);
    }
    return seen;
}

struct ScanSummary {
    std::uint64_t p_min = 0, p_max = 0;
    std::size_t primes_in_range = 0;
    std::size_t processed = 0;
    std::size_t skipped = 0;
    std::size_t failures = 0;
};

inline void print_summary(std::ostream& os, const ScanSummary& s, OutputFormat format) {
    switch (format) {
    case OutputFormat::Table: {
        auto row = [&os](const char* k, std::size_t v) {
            os << std::left << std::setw(16) << k << v << '\n';
        };
        os << "scan " << s.p_min << ".." << s.p_max << '\n';
        row("primes", s.primes_in_range);
        row("processed", s.processed);
        row("skipped", s.skipped);
        row("failures", s.failures);
        break;
    }
    case OutputFormat::Json:
    case OutputFormat::Jsonl: {
        nlohmann::ordered_json j;
        j["p_min"] = s.p_min;
        j["p_max"] = s.p_max;
        j["primes_in_range"] = s.primes_in_range;
        j["processed"] = s.processed;
        j["skipped"] = s.skipped;
        j["failures"] = s.failures;
        os << j.dump(format == OutputFormat::Json ? 2 : -1) << '\n';
        break;
    }
    case OutputFormat::Csv:
        os << "p_min,p_max,primes_in_range,processed,skipped,failures\n"
           << s.p_min << ',' << s.p_max << ',' << s.primes_in_range << ',' << s.processed << ','
           << s.skipped << ',' << s.failures << '\n';
        break;
    }
}

/// Represents every prime in [p_min, p_max], appending one JSONL record per
/// prime to the cache. Primes already cached at this schema version are
/// skipped, so rescans are cheap and never rewrite existing lines. Workers
/// share an atomic cursor; the append happens on the caller's thread, in
/// ascending order, after all workers finish.
inline ScanSummary scan_range(std::uint64_t p_min, std::uint64_t p_max, unsigned jobs,
                              const std::string& cache_path) {
    if (p_min < 3 || p_min > p_max)
        throw std::invalid_argument("scan: need 3 <= p_min <= p_max");
    if (jobs == 0) throw std::invalid_argument("scan: jobs must be positive");

    const std::vector<std::uint64_t> primes = scan_primes(p_min, p_max);
    const std::set<std::uint64_t> cached = load_cached_primes(cache_path);
    std::vector<std::uint64_t> todo;
    for (std::uint64_t p : primes)
        if (!cached.count(p)) todo.push_back(p);

    ScanSummary summary;
    summary.p_min = p_min;
    summary.p_max = p_max;
    summary.primes_in_range = primes.size();
    summary.skipped = primes.size() - todo.size();

    std::vector<ResultRecord> results(todo.size());
    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> worker_error{false};
    std::string first_error;
    std::mutex error_mutex;
    auto work = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= todo.size()) return;
            const auto start = std::chrono::steady_clock::now();
            try {
                const RepresentationDetail det = represent_detail(todo[i]);
                const std::chrono::duration<double, std::milli> dt =
                    std::chrono::steady_clock::now() - start;
                results[i] = make_record(det, dt.count());
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!worker_error.exchange(true)) first_error = e.what();
            }
        }
    };
    if (jobs <= 1 || todo.size() <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        const unsigned n = std::min<std::size_t>(jobs, todo.size());
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (worker_error) throw std::runtime_error("scan: " + first_error);

    if (!todo.empty()) {
        std::ofstream out(cache_path, std::ios::app);
        if (!out) throw std::runtime_error("scan: cannot open cache " + cache_path);
        for (const auto& r : results) {
            out << record_to_json(r).dump() << '\n';
            if (!r.identity_ok) ++summary.failures;
        }
        if (!out) throw std::runtime_error("scan: write failed on " + cache_path);
    }
    summary.processed = todo.size();
    return summary;
}

} // namespace fibform
