#include "slb/graph_io.hpp"

#include "slb/error.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace slb {

using nlohmann::json;

namespace {

auto first_significant_char(std::string_view text) -> char
{
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                ++i;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(c)))
            return c;
        ++i;
    }
    return '\0';
}

auto parse_int_token(const std::string& tok, int line) -> long
{
    try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument(tok);
        return v;
    }
    catch (const std::logic_error&) {
        throw InputError("line " + std::to_string(line) + ": expected an integer, got '" + tok + "'");
    }
}

auto parse_edge_list(std::string_view text) -> WeightedGraph
{
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    bool have_header = false;
    long n = 0, m = 0, seen = 0;
    std::map<Edge, Rational> w;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;)
            toks.push_back(t);
        if (toks.empty())
            continue;
        if (!have_header) {
            if (toks.size() != 2)
                throw InputError("line " + std::to_string(line_no) + ": header must be 'n m'");
            n = parse_int_token(toks[0], line_no);
            m = parse_int_token(toks[1], line_no);
            if (n < 0 || m < 0)
                throw InputError("line " + std::to_string(line_no) + ": negative count in header");
            have_header = true;
            continue;
        }
        if (toks.size() != 2 && toks.size() != 3)
            throw InputError("line " + std::to_string(line_no) + ": expected 'u v [weight]'");
        long u = parse_int_token(toks[0], line_no);
        long v = parse_int_token(toks[1], line_no);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("line " + std::to_string(line_no) + ": vertex out of range");
        Rational x = 1;
        if (toks.size() == 3) {
            try {
                x = parse_rational(toks[2]);
            }
            catch (const InputError& e) {
                throw InputError("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        w[pair_key(static_cast<Vertex>(u), static_cast<Vertex>(v))] += x;
        ++seen;
    }
    if (!have_header)
        throw InputError("line " + std::to_string(line_no) + ": missing 'n m' header");
    if (seen != m)
        throw InputError("line " + std::to_string(line_no) + ": header announced " + std::to_string(m)
                         + " edges, found " + std::to_string(seen));
    return WeightedGraph(static_cast<int>(n), std::move(w));
}

auto check_header(const json& j, const char* type) -> int
{
    if (!j.is_object() || !j.contains("fmt") || j.at("fmt") != graph_json_format)
        throw InputError("graph JSON: missing or unsupported \"fmt\" (expected 1)");
    if (type && j.value("type", std::string()) != type)
        throw InputError(std::string("graph JSON: expected type \"") + type + "\"");
    int n = j.at("n").get<int>();
    if (n < 0)
        throw InputError("graph JSON: negative order");
    return n;
}

auto json_rational(const json& x) -> Rational
{
    if (x.is_string())
        return parse_rational(x.get<std::string>());
    if (x.is_number_integer())
        return Rational(x.get<long>());
    throw InputError("graph JSON: weight must be an integer or a \"p/q\" string");
}

}  // namespace

auto simple_graph_from_json(const json& j) -> SimpleGraph
{
    try {
        int n = check_header(j, "simple");
        std::vector<Edge> e;
        for (const auto& pair : j.at("edges"))
            e.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
        return build_simple(n, e);
    }
    catch (const json::exception& ex) {
        throw InputError(std::string("graph JSON: ") + ex.what());
    }
}

auto weighted_graph_from_json(const json& j) -> WeightedGraph
{
    try {
        int n = check_header(j, nullptr);
        auto type = j.value("type", std::string("weighted"));
        if (type == "simple")
            return as_weighted(simple_graph_from_json(j));
        if (type == "multigraph")
            return multigraph_from_json(j).as_weighted();
        if (type != "weighted")
            throw InputError("graph JSON: unknown type \"" + type + "\"");
        std::map<Edge, Rational> w;
        for (const auto& item : j.at("edges")) {
            Rational x = item.size() > 2 ? json_rational(item.at(2)) : Rational(1);
            w[pair_key(item.at(0).get<int>(), item.at(1).get<int>())] += x;
        }
        std::vector<std::string> labels;
        if (j.contains("labels"))
            labels = j.at("labels").get<std::vector<std::string>>();
        return WeightedGraph(n, std::move(w), std::move(labels));
    }
    catch (const json::exception& ex) {
        throw InputError(std::string("graph JSON: ") + ex.what());
    }
}

auto multigraph_from_json(const json& j) -> Multigraph
{
    try {
        int n = check_header(j, "multigraph");
        std::map<Edge, std::int64_t> m;
        for (const auto& item : j.at("edges"))
            m[pair_key(item.at(0).get<int>(), item.at(1).get<int>())]
                += item.size() > 2 ? item.at(2).get<std::int64_t>() : 1;
        return Multigraph(n, std::move(m));
    }
    catch (const json::exception& ex) {
        throw InputError(std::string("graph JSON: ") + ex.what());
    }
}

auto parse_graph(std::string_view text) -> WeightedGraph
{
    if (first_significant_char(text) == '{') {
        json j;
        try {
            j = json::parse(text, nullptr, true, true);
        }
        catch (const json::parse_error& ex) {
            throw InputError(std::string("graph JSON: ") + ex.what());
        }
        return weighted_graph_from_json(j);
    }
    return parse_edge_list(text);
}

auto read_graph_file(const std::string& path) -> WeightedGraph
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

auto parse_simple_graph(std::string_view text) -> SimpleGraph
{
    auto g = parse_graph(text).as_simple();
    if (!g)
        throw InputError("expected a simple graph (unit weights, no loops)");
    return *g;
}

auto write_edge_list(std::ostream& out, const SimpleGraph& g) -> void
{
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

auto write_edge_list(std::ostream& out, const WeightedGraph& g) -> void
{
    out << g.order() << ' ' << g.weights().size() << '\n';
    for (const auto& [key, w] : g.weights()) {
        out << key.first << ' ' << key.second;
        if (w != 1)
            out << ' ' << to_string(w);
        out << '\n';
    }
}

auto to_json(const SimpleGraph& g) -> json
{
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"fmt", graph_json_format}, {"type", "simple"}, {"n", g.order()}, {"edges", edges}};
}

auto to_json(const WeightedGraph& g) -> json
{
    json edges = json::array();
    for (const auto& [key, w] : g.weights())
        edges.push_back({key.first, key.second, to_string(w)});
    json j = {{"fmt", graph_json_format}, {"type", "weighted"}, {"n", g.order()}, {"edges", edges}};
    if (!g.labels().empty())
        j["labels"] = g.labels();
    return j;
}

auto to_json(const Multigraph& g) -> json
{
    json edges = json::array();
    for (const auto& [key, m] : g.multiplicities())
        edges.push_back({key.first, key.second, m});
    return {{"fmt", graph_json_format}, {"type", "multigraph"}, {"n", g.order()}, {"edges", edges}};
}

}  // namespace slb
