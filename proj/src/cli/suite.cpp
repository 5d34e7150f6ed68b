#include "toricreg/cli.hpp"

#include "toricreg/error.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace toricreg {

std::vector<CatalogEntry> default_catalog() {
    std::vector<CatalogEntry> out;
    const auto add = [&](std::string s) { out.push_back(CatalogEntry{std::move(s), std::nullopt}); };
    for (unsigned a = 1; a <= 5; ++a) {
        for (unsigned b = a; b <= 5; ++b) {
            if (a + b <= 9) add("parallel(" + std::to_string(a) + "," + std::to_string(b) + ")");
            for (unsigned c = b; c <= 5; ++c) {
                if (a + b + c <= 9) {
                    add("parallel(" + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(c) + ")");
                }
            }
        }
    }
    for (const char* s : {"cycle(3)", "cycle(4)", "cycle(5)", "cycle(6)", "biclique(2,2)",
                          "biclique(2,3)", "complete(3)", "complete(4)", "multipartite(1,1,2)"}) {
        add(s);
    }
    for (unsigned k = 1; k <= 5; ++k) add("path(" + std::to_string(k) + ")");
    for (unsigned k = 2; k <= 5; ++k) add("star(" + std::to_string(k) + ")");
    for (const char* s : {
             "edges(0-1,1-2,1-3,3-4)",
             "edges(0-1,1-2,2-3,1-4,4-5)",
             "edges(0-1,1-2,2-3,0-3,0-4)",
             "edges(0-1,1-2,2-3,0-3,0-4,4-5,5-6,0-6)",
             "edges(0-1,1-2,2-3,0-3,2-4,4-5,5-6,6-7,7-8,2-8)",
             "edges(0-1,2-3)",
             "edges(0-1,0-1,1-2)",
             "edges(0-1,1-2,0-2,0-1)",
         }) {
        add(s);
    }
    return out;
}

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
    std::vector<CatalogEntry> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::string spec;
        if (!(words >> spec)) continue;
        CatalogEntry entry{spec, std::nullopt};
        std::string extra;
        while (words >> extra) {
            constexpr std::string_view key = "formula=";
            if (!extra.starts_with(key)) {
                throw Error(ErrorKind::ParseError, "catalog line " + std::to_string(line_no) +
                                                       ": unexpected '" + extra + "'");
            }
            std::uint64_t value = 0;
            const char* first = extra.data() + key.size();
            const char* last = extra.data() + extra.size();
            const auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec != std::errc() || ptr != last || first == last) {
                throw Error(ErrorKind::ParseError, "catalog line " + std::to_string(line_no) +
                                                       ": bad formula value '" + extra + "'");
            }
            entry.formula_override = value;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str());
}

namespace {

/// Regularity of derived graphs, shared by all jobs with the same q.
class OracleCache {
public:
    std::uint64_t get(const Multigraph& g, std::uint32_t q, const Limits& limits) {
        const std::string key = std::to_string(q) + "|" + g.describe();
        {
            std::lock_guard lock(mutex_);
            if (const auto it = values_.find(key); it != values_.end()) return it->second;
        }
        const std::uint64_t value = reference_regularity(g, q, limits);
        std::lock_guard lock(mutex_);
        values_.emplace(key, value);
        return value;
    }

private:
    std::mutex mutex_;
    std::map<std::string, std::uint64_t> values_;
};

RegularityReport failed_report(const std::string& spec, std::uint32_t q, const std::string& why) {
    RegularityReport r;
    r.spec = spec;
    r.q = q;
    r.rank.status = MethodStatus::Error;
    r.rank.note = why;
    r.agreement = false;
    return r;
}

}  // namespace

std::vector<RegularityReport> run_suite(const std::vector<CatalogEntry>& catalog,
                                        const SuiteOptions& options) {
    struct Job {
        const CatalogEntry* entry;
        std::uint32_t q;
    };
    std::vector<Job> jobs;
    for (const CatalogEntry& e : catalog) {
        for (std::uint32_t q : options.qs) jobs.push_back(Job{&e, q});
    }
    std::vector<RegularityReport> results(jobs.size());
    OracleCache cache;
    std::atomic<std::size_t> next{0};

    const auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            const Job& job = jobs[i];
            try {
                const GraphSpec spec = parse_graph_spec(job.entry->spec);
                ReportOptions opts;
                opts.bounds = options.bounds;
                opts.limits = options.limits;
                opts.formula_override = job.entry->formula_override;
                const std::uint32_t q = job.q;
                opts.oracle = [&cache, q, &options](const Multigraph& h) {
                    return cache.get(h, q, options.limits);
                };
                results[i] = compute_report(spec, q, opts);
            } catch (const std::exception& e) {
                results[i] = failed_report(job.entry->spec, job.q, e.what());
            }
        }
    };

    unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    std::stable_sort(results.begin(), results.end(),
                     [](const RegularityReport& a, const RegularityReport& b) {
                         return std::tie(a.spec, a.q) < std::tie(b.spec, b.q);
                     });
    return results;
}

}  // namespace toricreg
