#include "widthdual/io.hpp"

#include <fstream>
#include <sstream>

namespace wdk {

using nlohmann::json;

namespace {

std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InputError(std::string(what) + " must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

}  // namespace

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_number_integer())
        throw InputError("graph JSON needs an integer \"vertices\" field");
    int n = j["vertices"].get<int>();
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw InputError("\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            auto uv = int_list(e, "edge");
            if (uv.size() != 2) throw InputError("every edge needs exactly two endpoints");
            edges.emplace_back(uv[0], uv[1]);
        }
    }
    return Graph::make(n, std::move(edges));
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    return {{"vertices", g.n}, {"edges", edges}};
}

Graph graph_from_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head == "c") continue;
        if (head == "p") {
            std::string fmt;
            int m = 0;
            if (!(ls >> fmt >> n >> m)) throw InputError("malformed problem line " + std::to_string(lineno));
            continue;
        }
        int u = 0, v = 0;
        if (head == "e") {
            if (!(ls >> u >> v)) throw InputError("malformed edge line " + std::to_string(lineno));
        } else {
            std::istringstream both(line);
            if (!(both >> u >> v)) throw InputError("unrecognised line " + std::to_string(lineno));
        }
        if (n < 0) throw InputError("edge before the problem line");
        edges.emplace_back(u - 1, v - 1);
    }
    if (n < 0) throw InputError("missing problem line");
    return Graph::make(n, std::move(edges));
}

Matroid matroid_from_json(const json& j) {
    if (!j.is_object()) throw InputError("matroid JSON must be an object");
    if (!j.contains("type")) {
        if (j.contains("vertices")) return Matroid::graphic(graph_from_json(j));
        throw InputError("matroid JSON needs a \"type\" field");
    }
    const auto type = j["type"].get<std::string>();
    if (type == "graphic") {
        if (!j.contains("graph")) throw InputError("graphic matroid needs a \"graph\" field");
        return Matroid::graphic(graph_from_json(j["graph"]));
    }
    if (type == "linear_gf2") {
        if (!j.contains("rows") || !j["rows"].is_array()) throw InputError("linear matroid needs \"rows\"");
        std::vector<std::string> rows;
        for (const auto& r : j["rows"]) {
            if (!r.is_string()) throw InputError("matrix rows must be strings");
            rows.push_back(r.get<std::string>());
        }
        return Matroid::linear_gf2(rows);
    }
    throw InputError("unknown matroid type: " + type);
}

json matroid_to_json(const Matroid& m) {
    if (m.is_graphic()) return {{"type", "graphic"}, {"graph", graph_to_json(m.graph())}};
    return {{"type", "linear_gf2"}, {"rows", m.rows()}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(what + ": " + e.what());
    }
}

namespace {

bool looks_like_json(const std::string& text) {
    auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && text[pos] == '{';
}

}  // namespace

Graph read_graph(const std::string& path) {
    auto text = read_file(path);
    if (looks_like_json(text)) return graph_from_json(parse_json(text, path));
    return graph_from_dimacs(text);
}

Matroid read_matroid(const std::string& path) {
    auto text = read_file(path);
    if (looks_like_json(text)) return matroid_from_json(parse_json(text, path));
    return Matroid::graphic(graph_from_dimacs(text));
}

std::vector<std::vector<Sep>> family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("stars") || !j["stars"].is_array())
        throw InputError("family file needs a \"stars\" array");
    std::vector<std::vector<Sep>> out;
    for (const auto& star : j["stars"]) {
        if (!star.is_array() || star.empty()) throw InputError("every star must be a non-empty array");
        std::vector<Sep> members;
        for (const auto& s : star) {
            try {
                members.push_back(sep_from_json(s));
            } catch (const json::exception& e) {
                throw InputError(std::string("bad separation in family file: ") + e.what());
            }
        }
        out.push_back(std::move(members));
    }
    return out;
}

json witness_to_json(const Witness& w) {
    json j{{"schema_version", kWitnessSchemaVersion}, {"side", side_name(w.side)}};
    if (w.side == Side::Tree) {
        j["kind"] = "stree";
        j["stree"] = stree_to_json(canonical(w.tree));
    } else {
        j["kind"] = w.side == Side::Tangle ? "tangle" : "orientation";
        json o = json::array();
        for (Sep s : w.oriented) o.push_back(sep_to_json(s));
        j["oriented"] = o;
    }
    return j;
}

Witness witness_from_json(const json& j) {
    try {
        if (!j.is_object()) throw InputError("witness must be a JSON object");
        if (j.value("schema_version", 0) != kWitnessSchemaVersion) throw InputError("unsupported witness schema_version");
        const auto kind = j.at("kind").get<std::string>();
        Witness w;
        if (kind == "stree") {
            w.side = Side::Tree;
            w.tree = stree_from_json(j.at("stree"));
        } else if (kind == "tangle" || kind == "orientation") {
            w.side = kind == "tangle" ? Side::Tangle : Side::Orientation;
            for (const auto& s : j.at("oriented")) w.oriented.push_back(sep_from_json(s));
            std::sort(w.oriented.begin(), w.oriented.end());
        } else {
            throw InputError("unknown witness kind: " + kind);
        }
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed witness: ") + e.what());
    }
}

}  // namespace wdk
