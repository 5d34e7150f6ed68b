#include "toricreg/cli.hpp"

#include "toricreg/error.hpp"
#include "toricreg/field.hpp"
#include "toricreg/hilbert.hpp"
#include "toricreg/ideal.hpp"
#include "toricreg/points.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>

namespace toricreg {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

ExponentVec parse_exponents(const std::string& text, const char* what) {
    std::vector<std::uint32_t> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        std::uint32_t v = 0;
        const char* first = text.data() + start;
        const char* last = text.data() + comma;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || first == last) {
            throw Error(ErrorKind::ParseError, std::string(what) + ": bad exponent list '" + text + "'");
        }
        values.push_back(v);
        start = comma + 1;
    }
    return ExponentVec(std::move(values));
}

EdgeIndex edge_from_cli(unsigned j, const Multigraph& g) {
    if (j < 1 || j > g.num_edges()) {
        throw Error(ErrorKind::IndexOutOfRange, "edge t" + std::to_string(j) + " not in t1..t" +
                                                    std::to_string(g.num_edges()));
    }
    return j - 1;
}

std::string method_line(std::string_view name, const MethodResult& m) {
    std::string line = std::string(name) + ": ";
    line += m.value ? std::to_string(*m.value) : std::string(to_string(m.status));
    if (!m.note.empty()) line += " [" + m.note + "]";
    char buf[48];
    std::snprintf(buf, sizeof buf, " (%.3f ms)", m.ms);
    return line + buf;
}

void print_report(std::ostream& out, const RegularityReport& r) {
    out << "spec: " << r.spec << '\n' << "q: " << r.q << '\n';
    out << method_line("rank", r.rank) << '\n';
    out << method_line("sieve", r.sieve) << '\n';
    out << method_line("formula", r.formula) << '\n';
    const auto opt = [](const std::optional<std::uint64_t>& v) {
        return v ? std::to_string(*v) : std::string("NOT_RUN");
    };
    out << "degree: formula " << opt(r.degree_formula) << ", enumerated " << opt(r.degree_enum)
        << '\n';
    for (const BoundRow& b : r.bounds) {
        out << "bound " << b.name << ": " << b.lhs << ' ' << b.relation << ' ' << b.rhs << ' '
            << (b.satisfied ? "ok" : "VIOLATED") << " (" << b.detail << ")\n";
    }
    out << "agreement: " << (r.agreement ? "true" : "false") << '\n';
}

struct RegArgs {
    std::string spec;
    std::uint32_t q = 0;
    std::string method = "rank";
    unsigned edge = 1;
    bool json = false;
};

int cmd_reg(const RegArgs& a, std::ostream& out) {
    const GraphSpec spec = parse_graph_spec(a.spec);
    ReportOptions opts;
    opts.sieve_edge = edge_from_cli(a.edge, spec.graph);
    const bool all = a.method == "all";
    opts.rank = all || a.method == "rank";
    opts.sieve = all || a.method == "sieve";
    opts.formula = all || a.method == "formula";
    opts.enumerate = all;
    if (!all) {
        if (opts.rank) {
            const HilbertProfile p = regularity_rank(spec.graph, a.q);
            if (a.json) {
                out << nlohmann::json{{"spec", spec.text}, {"q", a.q}, {"method", "rank"},
                                      {"value", *p.regularity}}
                           .dump()
                    << '\n';
            } else {
                out << "reg = " << *p.regularity << '\n';
            }
            return kExitOk;
        }
        if (opts.sieve) {
            const unsigned v = regularity_sieve(spec.graph, a.q, opts.sieve_edge);
            if (a.json) {
                out << nlohmann::json{{"spec", spec.text}, {"q", a.q}, {"method", "sieve"},
                                      {"edge", a.edge}, {"value", v}}
                           .dump()
                    << '\n';
            } else {
                out << "reg = " << v << '\n';
            }
            return kExitOk;
        }
        const FormulaResult f = formula_for_spec(spec, a.q);
        if (a.json) {
            out << nlohmann::json{{"spec", spec.text},
                                  {"q", a.q},
                                  {"method", "formula"},
                                  {"value", f.value ? nlohmann::json(*f.value) : nlohmann::json(nullptr)},
                                  {"rule", f.rule},
                                  {"reason", f.reason}}
                       .dump()
                << '\n';
        } else if (f.value) {
            out << "reg = " << *f.value << " [" << f.rule << "]" << '\n';
            if (!f.reason.empty()) out << "note: " << f.reason << '\n';
        } else {
            out << "NOT_APPLICABLE: " << f.reason << '\n';
        }
        return kExitOk;
    }
    const RegularityReport r = compute_report(spec, a.q, opts);
    if (a.json) {
        out << report_to_json(r, 2) << '\n';
    } else {
        print_report(out, r);
    }
    return r.passed() ? kExitOk : kExitMismatch;
}

int cmd_degree(const std::string& text, std::uint32_t q, bool enumerate, std::ostream& out) {
    const GraphSpec spec = parse_graph_spec(text);
    const std::uint64_t formula = degree_formula(graph_stats(spec.graph), q);
    if (!is_prime_power(q)) throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    out << "formula " << formula << '\n';
    if (!enumerate) return kExitOk;
    const std::uint64_t counted = count_points(spec.graph, q);
    out << "enumerated " << counted << '\n';
    return counted == formula ? kExitOk : kExitMismatch;
}

int cmd_hilbert(const std::string& text, std::uint32_t q, std::optional<unsigned> max_degree,
                std::ostream& out) {
    const GraphSpec spec = parse_graph_spec(text);
    const PointSet points = enumerate_points(spec.graph, q);
    const Field field(q);
    const unsigned d = max_degree.value_or(regularity_ceiling(spec.graph.num_edges(), q));
    const HilbertProfile p = hilbert_profile(points, field, d);
    out << "H(0.." << d << ") =";
    for (std::uint64_t v : p.values) out << ' ' << v;
    out << '\n' << "|X| = " << p.degree << '\n';
    if (p.regularity) {
        out << "regularity = " << *p.regularity << '\n';
    } else {
        out << "regularity not reached by degree " << d << '\n';
    }
    return kExitOk;
}

int cmd_member(const std::string& text, std::uint32_t q, const std::string& monomial,
               const std::string& binomial, std::optional<unsigned> mod_edge, std::ostream& out) {
    const GraphSpec spec = parse_graph_spec(text);
    const ExponentVec a = parse_exponents(monomial, "--monomial");
    if (!binomial.empty()) {
        const ExponentVec b = parse_exponents(binomial, "--binomial");
        out << (binomial_in_ideal(spec.graph, q, a, b) ? "IN I(X)" : "NOT IN I(X)") << '\n';
        return kExitOk;
    }
    if (!mod_edge) {
        throw Error(ErrorKind::InvalidSpec, "member needs --binomial or --mod-edge");
    }
    const EdgeIndex j = edge_from_cli(*mod_edge, spec.graph);
    if (a.size() != spec.graph.num_edges()) {
        throw Error(ErrorKind::LengthMismatch, "monomial has " + std::to_string(a.size()) +
                                                   " exponents, graph has " +
                                                   std::to_string(spec.graph.num_edges()) + " edges");
    }
    ReachTable reach(spec.graph, q);
    reach.extend_to(static_cast<unsigned>(a.degree()));
    const bool in = monomial_in_ideal_plus_edge(spec.graph, q, a, j, reach);
    out << (in ? "IN" : "NOT IN") << " (I(X), t_" << *mod_edge << ")\n";
    return kExitOk;
}

int cmd_show(const std::string& text, std::ostream& out) {
    const GraphSpec spec = parse_graph_spec(text);
    const Multigraph& g = spec.graph;
    const GraphStats stats = graph_stats(g);
    out << "n = " << g.num_vertices() << ", s = " << g.num_edges() << ", components = " << stats.m
        << ", non-bipartite components = " << stats.gamma << '\n';
    for (EdgeIndex i = 0; i < g.num_edges(); ++i) {
        out << "t" << i + 1 << " = {" << g.edge(i).u << "," << g.edge(i).w << "}\n";
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string catalog;
    std::vector<std::uint32_t> qs{3, 4, 5};
    std::string report;
    bool json = false;
    unsigned threads = 0;
    bool no_bounds = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const std::vector<CatalogEntry> catalog =
        a.catalog.empty() ? default_catalog() : load_catalog(a.catalog);
    for (std::uint32_t q : a.qs) {
        if (!is_prime_power(q)) throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    }
    SuiteOptions opts;
    opts.qs = a.qs;
    opts.threads = a.threads;
    opts.bounds = !a.no_bounds;
    const std::vector<RegularityReport> reports = run_suite(catalog, opts);
    const auto failures = static_cast<std::size_t>(
        std::count_if(reports.begin(), reports.end(), [](const RegularityReport& r) { return !r.passed(); }));
    if (!a.report.empty()) {
        std::ofstream csv(a.report);
        if (!csv) throw Error(ErrorKind::IoError, "cannot write " + a.report);
        write_csv(csv, reports);
    }
    if (a.json) {
        out << reports_to_json(reports, 2) << '\n';
    } else {
        for (const RegularityReport& r : reports) {
            const auto v = [](const MethodResult& m) {
                return m.value ? std::to_string(*m.value) : std::string(to_string(m.status));
            };
            out << (r.passed() ? "ok       " : "MISMATCH ") << r.spec << " q=" << r.q
                << " rank=" << v(r.rank) << " sieve=" << v(r.sieve) << " formula=" << v(r.formula)
                << " bounds=" << r.bounds.size() << '\n';
        }
        out << reports.size() << " instances, " << failures << " mismatches\n";
    }
    return failures == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Regularity and degree of vanishing ideals of graph-parameterized toric sets"};
    app.name("toricreg");
    app.require_subcommand(1);

    RegArgs reg;
    auto* reg_cmd = app.add_subcommand("reg", "Regularity of K[E_G]/I(X)");
    reg_cmd->add_option("spec", reg.spec, "Graph spec")->required();
    reg_cmd->add_option("-q,--q", reg.q, "Field size")->required();
    reg_cmd->add_option("--method", reg.method, "rank, sieve, formula or all")
        ->check(CLI::IsMember({"rank", "sieve", "formula", "all"}));
    reg_cmd->add_option("--edge", reg.edge, "Edge t_j used by the sieve (1-based)");
    reg_cmd->add_flag("--json", reg.json, "JSON output");

    std::string deg_spec;
    std::uint32_t deg_q = 0;
    bool deg_enum = false;
    auto* deg_cmd = app.add_subcommand("degree", "|X| from the degree formula");
    deg_cmd->add_option("spec", deg_spec, "Graph spec")->required();
    deg_cmd->add_option("-q,--q", deg_q, "Field size")->required();
    deg_cmd->add_flag("--enumerate", deg_enum, "Also count X by enumeration");

    std::string hil_spec;
    std::uint32_t hil_q = 0;
    std::optional<unsigned> hil_max;
    auto* hil_cmd = app.add_subcommand("hilbert", "Hilbert function values");
    hil_cmd->add_option("spec", hil_spec, "Graph spec")->required();
    hil_cmd->add_option("-q,--q", hil_q, "Field size")->required();
    hil_cmd->add_option("--max-degree", hil_max, "Last degree to compute");

    std::string mem_spec, mem_a, mem_b;
    std::uint32_t mem_q = 0;
    std::optional<unsigned> mem_edge;
    auto* mem_cmd = app.add_subcommand("member", "Membership in I(X) or (I(X), t_j)");
    mem_cmd->add_option("spec", mem_spec, "Graph spec")->required();
    mem_cmd->add_option("-q,--q", mem_q, "Field size")->required();
    mem_cmd->add_option("--monomial", mem_a, "Exponents a1,...,as")->required();
    auto* bin_opt = mem_cmd->add_option("--binomial", mem_b, "Exponents b1,...,bs of t^a - t^b");
    mem_cmd->add_option("--mod-edge", mem_edge, "Test t^a in (I(X), t_j)")->excludes(bin_opt);

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "Cross-check every method on a catalog");
    ver_cmd->add_option("--catalog", ver.catalog, "Catalog file");
    ver_cmd->add_option("--q", ver.qs, "Field sizes")->delimiter(',');
    ver_cmd->add_option("--report", ver.report, "CSV report path");
    ver_cmd->add_flag("--json", ver.json, "JSON output");
    ver_cmd->add_option("--threads", ver.threads, "Worker threads (0 = all cores)");
    ver_cmd->add_flag("--no-bounds", ver.no_bounds, "Skip the inequality checks");

    std::string show_spec;
    auto* show_cmd = app.add_subcommand("show", "Print the edge order t_1..t_s");
    show_cmd->add_option("spec", show_spec, "Graph spec")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*reg_cmd) return cmd_reg(reg, out);
        if (*deg_cmd) return cmd_degree(deg_spec, deg_q, deg_enum, out);
        if (*hil_cmd) return cmd_hilbert(hil_spec, hil_q, hil_max, out);
        if (*mem_cmd) return cmd_member(mem_spec, mem_q, mem_a, mem_b, mem_edge, out);
        if (*ver_cmd) return cmd_verify(ver, out);
        if (*show_cmd) return cmd_show(show_spec, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_input_error(e.kind()) ? kExitInvalid : kExitMismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitInvalid;
}

}  // namespace toricreg
