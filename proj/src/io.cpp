#include <turan/io.hpp>

#include <json.hpp>

#include <algorithm>

namespace turan {

RGraph parse_graph(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail(ErrorKind::ParseError, "document must be a JSON object");
    for (const auto& item : doc.items()) {
        if (item.key() != "n" && item.key() != "edges" && item.key() != "loops")
            fail(ErrorKind::ParseError, "unknown key '" + item.key() + "'");
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        fail(ErrorKind::ParseError, "missing integer field 'n'");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        fail(ErrorKind::ParseError, "missing array field 'edges'");

    int n = doc["n"].get<int>();
    bool loops = false;
    if (doc.contains("loops")) {
        if (!doc["loops"].is_boolean()) fail(ErrorKind::ParseError, "'loops' must be a boolean");
        loops = doc["loops"].get<bool>();
    }

    std::vector<std::vector<Vertex>> edges;
    for (const auto& raw : doc["edges"]) {
        if (!raw.is_array()) fail(ErrorKind::ParseError, "each edge must be an array of vertex ids");
        std::vector<Vertex> e;
        for (const auto& v : raw) {
            if (!v.is_number_integer()) fail(ErrorKind::ParseError, "vertex ids must be integers");
            e.push_back(v.get<int>());
        }
        edges.push_back(std::move(e));
    }
    return make_graph(n, edges, loops);
}

std::string serialize_graph(const RGraph& g) {
    validate_graph(g);
    std::string out = "{\"n\":" + std::to_string(g.n) + ",\"edges\":[";
    for (size_t i = 0; i < g.edges.size(); ++i) {
        if (i) out += ',';
        out += '[';
        const auto& entries = g.edges[i].entries;
        for (size_t j = 0; j < entries.size(); ++j) {
            if (j) out += ',';
            out += std::to_string(entries[j]);
        }
        out += ']';
    }
    out += ']';
    if (g.allows_loops) out += ",\"loops\":true";
    out += '}';
    return out;
}

RGraph graph_from_shorthand(const std::string& text, int n, bool allows_loops) {
    std::vector<std::vector<Vertex>> edges;
    std::vector<Vertex> current;
    int max_vertex = 0;
    auto flush = [&]() {
        if (current.empty()) fail(ErrorKind::ParseError, "empty edge token in shorthand");
        edges.push_back(current);
        current.clear();
    };
    for (char c : text) {
        if (c == ';') {
            flush();
        } else if (c >= '1' && c <= '9') {
            current.push_back(c - '0');
            max_vertex = std::max(max_vertex, c - '0');
        } else if (c == ' ') {
            continue;
        } else {
            fail(ErrorKind::ParseError, std::string("shorthand accepts digits 1-9 and ';', got '") + c + "'");
        }
    }
    if (!current.empty() || edges.empty()) flush();
    if (n == 0) n = max_vertex;
    return make_graph(n, edges, allows_loops);
}

} // namespace turan
