#include "toricreg/cli.hpp"

#include "toricreg/error.hpp"
#include "toricreg/hilbert.hpp"
#include "toricreg/ideal.hpp"
#include "toricreg/points.hpp"

#include <json.hpp>

#include <chrono>
#include <ostream>

namespace toricreg {

FormulaResult formula_for_spec(const GraphSpec& spec, std::uint32_t q) {
    if (const auto parallel = spec.parallel()) {
        return FormulaResult::applied(reg_parallel(*parallel, q),
                                      std::string(parallel_rule(*parallel)));
    }
    if (const auto kind = spec.family_kind()) return reg_closed_form(*kind, spec.params, q);
    return formula_for_graph(spec.graph, q);
}

std::string_view to_string(MethodStatus s) {
    switch (s) {
        case MethodStatus::Ok: return "OK";
        case MethodStatus::NotRun: return "NOT_RUN";
        case MethodStatus::NotApplicable: return "NOT_APPLICABLE";
        case MethodStatus::Error: return "ERROR";
    }
    return "ERROR";
}

MethodStatus method_status_from_string(std::string_view s) {
    if (s == "OK") return MethodStatus::Ok;
    if (s == "NOT_RUN") return MethodStatus::NotRun;
    if (s == "NOT_APPLICABLE") return MethodStatus::NotApplicable;
    if (s == "ERROR") return MethodStatus::Error;
    throw Error(ErrorKind::ParseError, "unknown method status '" + std::string(s) + "'");
}

bool compute_agreement(const RegularityReport& r) {
    std::optional<std::uint64_t> seen;
    for (const MethodResult* m : {&r.rank, &r.sieve, &r.formula}) {
        if (!m->value) continue;
        if (seen && *seen != *m->value) return false;
        seen = m->value;
    }
    if (r.degree_formula && r.degree_enum && *r.degree_formula != *r.degree_enum) return false;
    return true;
}

bool RegularityReport::passed() const {
    if (!agreement) return false;
    for (const MethodResult* m : {&rank, &sieve, &formula}) {
        if (m->status == MethodStatus::Error) return false;
    }
    for (const BoundRow& b : bounds) {
        if (!b.satisfied) return false;
    }
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
MethodResult timed(F&& body) {
    MethodResult result;
    const auto start = Clock::now();
    try {
        result = body();
    } catch (const Error& e) {
        result.value.reset();
        result.status = e.kind() == ErrorKind::TooLarge ? MethodStatus::NotRun : MethodStatus::Error;
        result.note = e.what();
    } catch (const std::exception& e) {
        result.value.reset();
        result.status = MethodStatus::Error;
        result.note = e.what();
    }
    result.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return result;
}

MethodResult ok(std::uint64_t value, std::string note = {}) {
    return MethodResult{MethodStatus::Ok, value, std::move(note), 0.0};
}

}  // namespace

RegularityReport compute_report(const GraphSpec& spec, std::uint32_t q,
                                const ReportOptions& options) {
    RegularityReport report;
    report.spec = spec.text;
    report.q = q;
    const Multigraph& g = spec.graph;

    if (options.rank) {
        report.rank = timed([&] {
            const HilbertProfile p = regularity_rank(g, q, options.limits);
            return ok(*p.regularity, p.engine == RankEngine::Characters ? "characters" : "");
        });
    }
    if (options.sieve) {
        report.sieve = timed([&] {
            return ok(regularity_sieve(g, q, options.sieve_edge, options.limits),
                      "t" + std::to_string(options.sieve_edge + 1));
        });
    }
    if (options.formula) {
        report.formula = timed([&] {
            if (options.formula_override) return ok(*options.formula_override, "override");
            const FormulaResult f = formula_for_spec(spec, q);
            if (!f.value) {
                return MethodResult{MethodStatus::NotApplicable, std::nullopt, f.reason, 0.0};
            }
            return ok(*f.value, f.reason.empty() ? f.rule : f.rule + "; " + f.reason);
        });
    }
    try {
        report.degree_formula = degree_formula(graph_stats(g), q);
    } catch (const Error&) {
        report.degree_formula.reset();
    }
    if (options.enumerate) {
        try {
            report.degree_enum = count_points(g, q, options.limits);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::TooLarge) throw;
        }
    }
    report.agreement = compute_agreement(report);

    if (options.bounds) {
        const std::optional<std::uint64_t> reg = report.rank.value ? report.rank.value
                                                                   : report.sieve.value;
        if (reg) {
            const RegOracle oracle =
                options.oracle ? options.oracle : RegOracle([&](const Multigraph& h) {
                    return reference_regularity(h, q, options.limits);
                });
            const std::vector<Witness> witnesses = auto_witnesses(g, spec.parallel());
            for (const Witness& w : witnesses) {
                try {
                    const BoundReport rows = verify_bounds(g, q, *reg, std::span(&w, 1), oracle);
                    report.bounds.insert(report.bounds.end(), rows.rows.begin(), rows.rows.end());
                } catch (const Error& e) {
                    report.bounds.push_back(BoundRow{"witness", 0, 0, "==", false, e.what()});
                }
            }
        }
    }
    return report;
}

namespace {

using nlohmann::json;

json optional_json(const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); }

std::optional<std::uint64_t> optional_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<std::uint64_t>();
}

json method_json(const MethodResult& m) {
    return json{{"status", std::string(to_string(m.status))},
                {"value", optional_json(m.value)},
                {"note", m.note},
                {"ms", m.ms}};
}

MethodResult method_from(const json& j) {
    return MethodResult{method_status_from_string(j.at("status").get<std::string>()),
                        optional_from(j.at("value")), j.at("note").get<std::string>(),
                        j.at("ms").get<double>()};
}

json report_json(const RegularityReport& r) {
    json bounds = json::array();
    for (const BoundRow& b : r.bounds) {
        bounds.push_back(json{{"name", b.name},
                              {"lhs", b.lhs},
                              {"rhs", b.rhs},
                              {"relation", b.relation},
                              {"satisfied", b.satisfied},
                              {"detail", b.detail}});
    }
    return json{{"spec", r.spec},
                {"q", r.q},
                {"methods",
                 {{"rank", method_json(r.rank)},
                  {"sieve", method_json(r.sieve)},
                  {"formula", method_json(r.formula)}}},
                {"degree",
                 {{"formula", optional_json(r.degree_formula)},
                  {"enumerated", optional_json(r.degree_enum)}}},
                {"agreement", r.agreement},
                {"bounds", std::move(bounds)}};
}

RegularityReport report_from(const json& j) {
    RegularityReport r;
    r.spec = j.at("spec").get<std::string>();
    r.q = j.at("q").get<std::uint32_t>();
    const json& methods = j.at("methods");
    r.rank = method_from(methods.at("rank"));
    r.sieve = method_from(methods.at("sieve"));
    r.formula = method_from(methods.at("formula"));
    r.degree_formula = optional_from(j.at("degree").at("formula"));
    r.degree_enum = optional_from(j.at("degree").at("enumerated"));
    r.agreement = j.at("agreement").get<bool>();
    for (const json& b : j.at("bounds")) {
        r.bounds.push_back(BoundRow{b.at("name").get<std::string>(), b.at("lhs").get<std::uint64_t>(),
                                    b.at("rhs").get<std::uint64_t>(),
                                    b.at("relation").get<std::string>(),
                                    b.at("satisfied").get<bool>(), b.at("detail").get<std::string>()});
    }
    return r;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

template <class F>
auto guarded(F&& body) {
    try {
        return body();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

}  // namespace

std::string report_to_json(const RegularityReport& r, int indent) { return report_json(r).dump(indent); }

RegularityReport report_from_json(std::string_view text) {
    const json j = parse_json(text);
    return guarded([&] { return report_from(j); });
}

std::string reports_to_json(const std::vector<RegularityReport>& reports, int indent) {
    json list = json::array();
    std::size_t failures = 0;
    for (const RegularityReport& r : reports) {
        list.push_back(report_json(r));
        if (!r.passed()) ++failures;
    }
    return json{{"instances", reports.size()}, {"mismatches", failures}, {"reports", std::move(list)}}
        .dump(indent);
}

std::vector<RegularityReport> reports_from_json(std::string_view text) {
    const json j = parse_json(text);
    return guarded([&] {
        std::vector<RegularityReport> out;
        for (const json& r : j.at("reports")) out.push_back(report_from(r));
        return out;
    });
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string csv_value(const MethodResult& m) {
    return m.value ? std::to_string(*m.value) : std::string(to_string(m.status));
}

std::string csv_optional(const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : "NOT_RUN";
}

std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<RegularityReport>& reports) {
    out << kCsvHeader << '\n';
    for (const RegularityReport& r : reports) {
        const std::string prefix = csv_field(r.spec) + ',' + std::to_string(r.q) + ',';
        const std::string degrees = csv_optional(r.degree_formula) + ',' + csv_optional(r.degree_enum);
        const std::pair<const char*, const MethodResult*> methods[] = {
            {"rank", &r.rank}, {"sieve", &r.sieve}, {"formula", &r.formula}};
        for (const auto& [name, m] : methods) {
            out << prefix << name << ',' << csv_value(*m) << ',' << degrees << ','
                << (r.agreement ? "true" : "false") << ',' << format_ms(m->ms) << '\n';
        }
        for (const BoundRow& b : r.bounds) {
            out << prefix << "bound:" << b.name << ',' << b.lhs << ',' << degrees << ','
                << (b.satisfied ? "true" : "false") << ",0.000\n";
        }
    }
}

}  // namespace toricreg
