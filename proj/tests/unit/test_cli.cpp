#include "toricreg/cli.hpp"
#include "toricreg/error.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace toricreg;

namespace {

const std::string kData = TORICREG_TEST_DATA;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

ErrorKind kind_of(auto&& body) {
    try {
        body();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no exception");
    return ErrorKind::Internal;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Replaces the trailing ms column of each data row with MS.
std::string mask_ms(const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    bool header = true;
    while (std::getline(in, line)) {
        if (!header) line = line.substr(0, line.rfind(',') + 1) + "MS";
        header = false;
        out += line + '\n';
    }
    return out;
}

}  // namespace

TEST_CASE("graph spec parsing") {
    const GraphSpec p = parse_graph_spec("parallel(3,3,5)");
    CHECK(p.graph.num_vertices() == 10);
    CHECK(p.graph.num_edges() == 11);
    CHECK(p.kind == "parallel");
    REQUIRE(p.parallel().has_value());
    CHECK(p.parallel()->lengths == std::vector<unsigned>{3, 3, 5});

    const unsigned four[] = {4};
    CHECK(parse_graph_spec("cycle(4)").graph == family(Family::Cycle, four));
    CHECK(parse_graph_spec(" cycle ( 4 ) ").graph == family(Family::Cycle, four));
    CHECK(parse_graph_spec("cycle(4)").family_kind() == Family::Cycle);
    CHECK_FALSE(parse_graph_spec("cycle(4)").parallel().has_value());

    CHECK(kind_of([] { parse_graph_spec("parallel(3)"); }) == ErrorKind::InvalidSpec);
    CHECK(kind_of([] { parse_graph_spec("cycle(2)"); }) == ErrorKind::InvalidSpec);
    CHECK(kind_of([] { parse_graph_spec(""); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_graph_spec("cycle(4"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_graph_spec("wheel(5)"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_graph_spec("cycle(4))"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_graph_spec("edges(0-0)"); }) == ErrorKind::InvalidSpec);
    try {
        parse_graph_spec("path(x)");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("position 5") != std::string::npos);
    }

    const GraphSpec f = parse_graph_spec("file:" + kData + "/two_c4.json");
    CHECK(f.graph == parse_graph_spec("edges(0-1,1-2,2-3,0-3,0-4,4-5,5-6,0-6)").graph);
    CHECK(kind_of([] { parse_graph_spec("file:/nonexistent/graph.json"); }) == ErrorKind::IoError);
    CHECK(parse_graph_spec(f.text).graph == f.graph);

    const Multigraph back = [&] {
        const auto tmp = std::filesystem::temp_directory_path() / "toricreg_graph_roundtrip.json";
        std::ofstream(tmp) << graph_to_json(f.graph);
        return load_graph_file(tmp);
    }();
    CHECK(back == f.graph);
}

TEST_CASE("reg command") {
    const Run all = run({"reg", "parallel(1,2)", "-q", "3", "--method", "all"});
    CHECK(all.code == 0);
    CHECK(all.out.find("agreement: true") != std::string::npos);
    for (const char* m : {"rank: 2", "sieve: 2", "formula: 2"}) {
        CAPTURE(m);
        CHECK(all.out.find(m) != std::string::npos);
    }
    const Run rank = run({"reg", "cycle(4)", "-q", "3"});
    CHECK(rank.code == 0);
    CHECK(rank.out == "reg = 1\n");
    const Run sieve = run({"reg", "cycle(3)", "-q", "3", "--method", "sieve", "--edge", "3"});
    CHECK(sieve.out == "reg = 2\n");
    const Run formula = run({"reg", "parallel(3,3,5)", "-q", "5", "--method", "formula"});
    CHECK(formula.out.find("reg = 12") == 0);
    const Run json = run({"reg", "cycle(4)", "-q", "3", "--method", "all", "--json"});
    CHECK(json.code == 0);
    const RegularityReport r = report_from_json(json.out);
    CHECK(r.rank.value == 1u);
    CHECK(r.agreement);
}

TEST_CASE("degree, hilbert, member and show commands") {
    const Run deg = run({"degree", "cycle(3)", "-q", "5", "--enumerate"});
    CHECK(deg.code == 0);
    CHECK(deg.out.find("formula 16") != std::string::npos);
    CHECK(deg.out.find("enumerated 16") != std::string::npos);

    const Run hil = run({"hilbert", "cycle(3)", "-q", "3", "--max-degree", "3"});
    CHECK(hil.code == 0);
    CHECK(hil.out.find("|X| = 4") != std::string::npos);
    CHECK(hil.out.find("regularity = 2") != std::string::npos);

    const Run in = run({"member", "path(2)", "-q", "3", "--monomial", "1,1", "--mod-edge", "1"});
    CHECK(in.code == 0);
    CHECK(in.out == "IN (I(X), t_1)\n");
    const Run out = run({"member", "path(2)", "-q", "3", "--monomial", "0,1", "--mod-edge", "1"});
    CHECK(out.out == "NOT IN (I(X), t_1)\n");
    const Run bin = run({"member", "path(2)", "-q", "3", "--monomial", "1,0", "--binomial", "0,1"});
    CHECK(bin.out == "NOT IN I(X)\n");
    const Run bin2 = run({"member", "cycle(3)", "-q", "3", "--monomial", "2,0,0", "--binomial", "0,0,2"});
    CHECK(bin2.out == "IN I(X)\n");

    const Run show = run({"show", "path(2)"});
    CHECK(show.out.find("t1 = {0,1}") != std::string::npos);
    CHECK(show.out.find("t2 = {1,2}") != std::string::npos);
}

TEST_CASE("exit codes for invalid input") {
    CHECK(run({"reg", "parallel(3)", "-q", "3"}).code == 2);
    CHECK(run({"reg", "cycle(4)", "-q", "6"}).code == 2);
    CHECK(run({"reg", "cycle(4)"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"reg", "cycle(4)", "-q", "3", "--edge", "9", "--method", "sieve"}).code == 2);
    CHECK(run({"member", "path(2)", "-q", "3", "--monomial", "1,0,0", "--mod-edge", "1"}).code == 2);
    CHECK(run({"member", "path(2)", "-q", "3", "--monomial", "1,0", "--binomial", "1,1"}).code == 2);
    CHECK(run({"member", "path(2)", "-q", "3", "--monomial", "1,0", "--binomial", "0,1", "--mod-edge", "1"})
              .code == 2);
    CHECK(run({"verify", "--catalog", "/nonexistent/catalog.txt"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    const Run bad = run({"reg", "cycle(4", "-q", "3"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("ParseError") != std::string::npos);
}

TEST_CASE("verify with an injected wrong formula") {
    const Run r = run({"verify", "--catalog", kData + "/fault_catalog.txt", "--q", "3"});
    CHECK(r.code == 1);
    CHECK(r.out.find("MISMATCH cycle(4) q=3") != std::string::npos);
    CHECK(r.out.find("ok       path(2) q=3") != std::string::npos);
    CHECK(r.out.find("2 instances, 1 mismatches") != std::string::npos);
}

TEST_CASE("verify at q = 2") {
    SuiteOptions opts;
    opts.qs = {2};
    const auto reports = run_suite(default_catalog(), opts);
    CHECK(reports.size() == default_catalog().size());
    for (const RegularityReport& r : reports) {
        CAPTURE(r.spec);
        CHECK(r.passed());
        CHECK(r.rank.value == 0u);
        CHECK(r.sieve.value == 0u);
        if (graph_stats(parse_graph_spec(r.spec).graph).m == 1) CHECK(r.degree_enum == 1u);
    }
    CHECK(run({"verify", "--q", "2", "--no-bounds"}).code == 0);
}

TEST_CASE("catalog parsing") {
    const auto c = parse_catalog("# comment\n\ncycle(4)  formula=3 # trailing\n path(2)\n");
    REQUIRE(c.size() == 2);
    CHECK(c[0].spec == "cycle(4)");
    CHECK(c[0].formula_override == 3u);
    CHECK_FALSE(c[1].formula_override.has_value());
    CHECK(kind_of([] { parse_catalog("cycle(4) formula=x"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_catalog("cycle(4) extra"); }) == ErrorKind::ParseError);
}

TEST_CASE("JSON round trip") {
    ReportOptions opts;
    opts.bounds = true;
    for (const char* spec : {"parallel(1,2,2)", "edges(0-1,2-3)", "complete(4)", "path(3)"}) {
        CAPTURE(spec);
        const RegularityReport r = compute_report(parse_graph_spec(spec), 3, opts);
        CHECK(report_from_json(report_to_json(r)) == r);
        CHECK(report_from_json(report_to_json(r, 2)) == r);
    }
    const auto list = run_suite(parse_catalog("cycle(4)\npath(2)\n"), SuiteOptions{{3, 4}, 1, true, default_limits()});
    CHECK(reports_from_json(reports_to_json(list)) == list);
    CHECK(kind_of([] { report_from_json("{not json"); }) == ErrorKind::ParseError);
}

TEST_CASE("method statuses") {
    for (MethodStatus s : {MethodStatus::Ok, MethodStatus::NotRun, MethodStatus::NotApplicable, MethodStatus::Error}) {
        CHECK(method_status_from_string(to_string(s)) == s);
    }
    Limits tiny;
    tiny.max_states = 20;
    tiny.max_matrix_entries = 20;
    ReportOptions opts;
    opts.limits = tiny;
    const RegularityReport r = compute_report(parse_graph_spec("cycle(6)"), 4, opts);
    CHECK(r.rank.status == MethodStatus::NotRun);
    CHECK(r.sieve.status == MethodStatus::NotRun);
    CHECK(r.formula.value == 4u);
    CHECK_FALSE(r.degree_enum.has_value());
    CHECK(r.agreement);
}

TEST_CASE("golden CSV report") {
    SuiteOptions opts;
    opts.qs = {3};
    opts.bounds = false;
    opts.threads = 2;
    const auto reports = run_suite(load_catalog(kData + "/golden_catalog.txt"), opts);
    std::ostringstream csv;
    write_csv(csv, reports);
    CHECK(mask_ms(csv.str()) == read_file(kData + "/golden_q3.csv"));

    const auto path = std::filesystem::temp_directory_path() / "toricreg_golden.csv";
    const Run r = run({"verify", "--catalog", kData + "/golden_catalog.txt", "--q", "3", "--no-bounds",
                       "--report", path.string()});
    CHECK(r.code == 0);
    CHECK(mask_ms(read_file(path.string())) == read_file(kData + "/golden_q3.csv"));
}
