#pragma once

#include "toricreg/formulas.hpp"
#include "toricreg/graph.hpp"
#include "toricreg/limits.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toricreg {

/// A parsed graph description.
///
/// Grammar (whitespace ignored):
///   path(k) | cycle(k) | complete(n) | star(k) | biclique(a,b) | multipartite(a1,...,ar)
///   | parallel(k1,...,kr) | edges(u-w,...) | file:PATH
/// `kind` is the leading keyword ("file" for files) and `params` its integer arguments.
struct GraphSpec {
    std::string text;
    std::string kind;
    std::vector<unsigned> params;
    Multigraph graph;

    std::optional<ParallelSpec> parallel() const;
    std::optional<Family> family_kind() const;
};

GraphSpec parse_graph_spec(std::string_view text);

/// Reads {"n": int, "edges": [[u, w], ...]}.
Multigraph load_graph_file(const std::filesystem::path& path);
std::string graph_to_json(const Multigraph& g);

/// Closed form for a parsed spec: the parallel rows, the family rows, otherwise recognition.
FormulaResult formula_for_spec(const GraphSpec& spec, std::uint32_t q);

enum class MethodStatus { Ok, NotRun, NotApplicable, Error };

std::string_view to_string(MethodStatus s);
MethodStatus method_status_from_string(std::string_view s);

struct MethodResult {
    MethodStatus status = MethodStatus::NotRun;
    std::optional<std::uint64_t> value;
    std::string note;
    double ms = 0.0;

    friend bool operator==(const MethodResult&, const MethodResult&) = default;
};

struct RegularityReport {
    std::string spec;
    std::uint32_t q = 0;
    MethodResult rank;
    MethodResult sieve;
    MethodResult formula;
    std::optional<std::uint64_t> degree_formula;
    std::optional<std::uint64_t> degree_enum;
    bool agreement = false;
    std::vector<BoundRow> bounds;

    /// Agreement, no method errors, and every bound row satisfied.
    bool passed() const;

    friend bool operator==(const RegularityReport&, const RegularityReport&) = default;
};

/// All present regularity values equal and all present degree values equal.
bool compute_agreement(const RegularityReport& r);

struct ReportOptions {
    bool rank = true;
    bool sieve = true;
    bool formula = true;
    bool enumerate = true;
    bool bounds = false;
    EdgeIndex sieve_edge = 0;
    Limits limits = default_limits();
    /// Regularity of derived graphs for the bound rows; reference_regularity when empty.
    RegOracle oracle;
    /// Replaces the closed-form value when set.
    std::optional<std::uint64_t> formula_override;
};

RegularityReport compute_report(const GraphSpec& spec, std::uint32_t q,
                                const ReportOptions& options = {});

std::string report_to_json(const RegularityReport& r, int indent = -1);
RegularityReport report_from_json(std::string_view text);
std::string reports_to_json(const std::vector<RegularityReport>& reports, int indent = -1);
std::vector<RegularityReport> reports_from_json(std::string_view text);

inline constexpr std::string_view kCsvHeader = "spec,q,method,value,degree_formula,degree_enum,agree,ms";

/// Header plus one row per method and per bound row of every report.
void write_csv(std::ostream& out, const std::vector<RegularityReport>& reports);

struct CatalogEntry {
    std::string spec;
    std::optional<std::uint64_t> formula_override;
};

std::vector<CatalogEntry> default_catalog();

/// One spec per line; `#` starts a comment; an optional trailing `formula=<int>` overrides
/// the closed-form value.
std::vector<CatalogEntry> parse_catalog(std::string_view text);
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);

struct SuiteOptions {
    std::vector<std::uint32_t> qs{3, 4, 5};
    unsigned threads = 0;  // 0 = hardware concurrency
    bool bounds = true;
    Limits limits = default_limits();
};

/// Runs every (entry, q) pair; failures are recorded per instance. Sorted by spec, then q.
std::vector<RegularityReport> run_suite(const std::vector<CatalogEntry>& catalog,
                                        const SuiteOptions& options = {});

/// Entry point of the command-line tool; returns the process exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricreg
