#include "toricreg/cli.hpp"

#include "toricreg/error.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace toricreg {

namespace {

const std::map<std::string, Family, std::less<>>& family_keywords() {
    static const std::map<std::string, Family, std::less<>> table{
        {"path", Family::Path},
        {"cycle", Family::Cycle},
        {"complete", Family::Complete},
        {"star", Family::Star},
        {"biclique", Family::CompleteBipartite},
        {"multipartite", Family::CompleteMultipartite},
    };
    return table;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::ParseError, "at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_space();
        return pos_ == text_.size();
    }

    std::string identifier() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a graph keyword");
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    unsigned number() {
        skip_space();
        const std::size_t start = pos_;
        std::uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
            if (value > 1'000'000) fail("number too large");
            ++pos_;
        }
        if (start == pos_) fail("expected a non-negative integer");
        return static_cast<unsigned>(value);
    }

    std::size_t position() const { return pos_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Multigraph graph_from_edges(const std::vector<std::pair<unsigned, unsigned>>& pairs,
                            std::optional<std::size_t> n) {
    std::size_t count = n.value_or(0);
    std::vector<Edge> edges;
    for (auto [u, w] : pairs) {
        if (!n) count = std::max<std::size_t>(count, std::max(u, w) + 1);
        edges.emplace_back(u, w);
    }
    return Multigraph(count, std::move(edges));
}

}  // namespace

std::optional<ParallelSpec> GraphSpec::parallel() const {
    if (kind != "parallel") return std::nullopt;
    return ParallelSpec{params};
}

std::optional<Family> GraphSpec::family_kind() const {
    const auto& table = family_keywords();
    const auto it = table.find(kind);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

Multigraph load_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
    }
    try {
        const auto n = doc.at("n").get<std::size_t>();
        std::vector<std::pair<unsigned, unsigned>> pairs;
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw Error(ErrorKind::ParseError, path.string() + ": each edge must be [u, w]");
            }
            pairs.emplace_back(e[0].get<unsigned>(), e[1].get<unsigned>());
        }
        return graph_from_edges(pairs, n);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
    }
}

std::string graph_to_json(const Multigraph& g) {
    nlohmann::json doc;
    doc["n"] = g.num_vertices();
    doc["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges()) doc["edges"].push_back({e.u, e.w});
    return doc.dump();
}

GraphSpec parse_graph_spec(std::string_view text) {
    const std::string_view body = trim(text);
    if (body.empty()) throw Error(ErrorKind::ParseError, "at position 0: empty graph spec");
    if (body.starts_with("file:")) {
        const std::string path(trim(body.substr(5)));
        if (path.empty()) throw Error(ErrorKind::ParseError, "at position 5: missing file path");
        return GraphSpec{std::string(body), "file", {}, load_graph_file(path)};
    }

    Parser p(body);
    const std::string kind = p.identifier();
    p.expect('(');
    if (kind == "edges") {
        std::vector<std::pair<unsigned, unsigned>> pairs;
        std::vector<unsigned> flat;
        do {
            const unsigned u = p.number();
            p.expect('-');
            const unsigned w = p.number();
            pairs.emplace_back(u, w);
            flat.push_back(u);
            flat.push_back(w);
        } while (p.accept(','));
        p.expect(')');
        if (!p.at_end()) p.fail("unexpected trailing text");
        return GraphSpec{std::string(body), kind, flat, graph_from_edges(pairs, std::nullopt)};
    }

    std::vector<unsigned> params;
    do {
        params.push_back(p.number());
    } while (p.accept(','));
    p.expect(')');
    if (!p.at_end()) p.fail("unexpected trailing text");

    if (kind == "parallel") {
        ParallelSpec spec{params};
        spec.validate();
        return GraphSpec{std::string(body), kind, params, parallel_composition(spec)};
    }
    const auto& table = family_keywords();
    const auto it = table.find(kind);
    if (it == table.end()) {
        throw Error(ErrorKind::ParseError, "at position 0: unknown graph keyword '" + kind + "'");
    }
    return GraphSpec{std::string(body), kind, params, family(it->second, params)};
}

}  // namespace toricreg
