#include "icstab/io.hpp"

#include <fstream>
#include <sstream>

namespace icstab {

Graph parse_edge_list(std::istream& in) {
    int r = -1, m = -1;
    if (!(in >> r >> m)) throw ParseError("edge list: missing 'r m' header");
    if (r < 0 || m < 0) throw ParseError("edge list: negative counts");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw ParseError("edge list: truncated edge lines");
        edges.emplace_back(u, v);
    }
    try {
        return Graph(r, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

Graph parse_graph6_line(const std::string& raw) {
    std::string line = raw;
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) line = line.substr(header.size());
    if (line.empty()) throw ParseError("graph6: empty line");
    int c = static_cast<unsigned char>(line[0]);
    if (c < 63 || c > 125) throw ParseError("graph6: unsupported size encoding");
    int n = c - 63;
    long long need_bits = static_cast<long long>(n) * (n - 1) / 2;
    long long need_bytes = (need_bits + 5) / 6;
    if (static_cast<long long>(line.size()) - 1 < need_bytes)
        throw ParseError("graph6: line too short");
    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = static_cast<unsigned char>(line[1 + bit / 6]) - 63;
            if (byte < 0 || byte > 63) throw ParseError("graph6: bad payload byte");
            if (byte >> (5 - bit % 6) & 1) edges.emplace_back(i + 1, j + 1);
        }
    }
    return Graph(n, std::move(edges));
}

std::vector<Graph> read_graphs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::vector<Graph> graphs;
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0) {
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
            if (line.empty()) continue;
            graphs.push_back(parse_graph6_line(line));
        }
    } else {
        while (in >> std::ws, !in.eof()) graphs.push_back(parse_edge_list(in));
    }
    if (graphs.empty()) throw ParseError("graph file holds no graphs: " + path);
    return graphs;
}

Graph read_graph_file(const std::string& path) { return read_graphs_file(path).front(); }

namespace {

nlohmann::json exponent_to_json(const BigInt& e) {
    if (e.fits_int64()) return e.to_int64();
    return e.str();
}

BigInt exponent_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt::from_string(j.get<std::string>());
    throw ParseError("ideal json: exponent must be an integer or numeral string");
}

}  // namespace

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : ideal.gens()) {
        nlohmann::json vec = nlohmann::json::array();
        for (int i = 0; i < ideal.ambient(); ++i) vec.push_back(exponent_to_json(g[i]));
        gens.push_back(std::move(vec));
    }
    return nlohmann::json{{"ambient", ideal.ambient()}, {"generators", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("ambient") || !j.contains("generators"))
        throw ParseError("ideal json: expected {ambient, generators}");
    int r = j.at("ambient").get<int>();
    std::vector<Monomial> gens;
    for (const auto& vec : j.at("generators")) {
        std::vector<BigInt> e;
        for (const auto& x : vec) e.push_back(exponent_from_json(x));
        if (static_cast<int>(e.size()) != r)
            throw ParseError("ideal json: generator length does not match ambient");
        gens.emplace_back(std::move(e));
    }
    try {
        return make_ideal(r, std::move(gens));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("ideal json: ") + e.what());
    }
}

MonomialIdeal read_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ideal file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("ideal json: ") + e.what());
    }
    return ideal_from_json(j);
}

Monomial parse_monomial_text(const std::string& text, int r) {
    std::vector<BigInt> e(r, BigInt(0));
    if (text == "1") return Monomial(std::move(e));
    std::stringstream ss(text);
    std::string term;
    while (std::getline(ss, term, '*')) {
        if (term.empty() || term[0] != 'x') throw ParseError("monomial: expected xN or xN^A term");
        std::size_t caret = term.find('^');
        std::string var = term.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        std::string exp = caret == std::string::npos ? "1" : term.substr(caret + 1);
        int index;
        try {
            index = std::stoi(var);
        } catch (...) {
            throw ParseError("monomial: bad variable index");
        }
        if (index < 1 || index > r) throw ParseError("monomial: variable index out of range");
        try {
            e[index - 1] += BigInt::from_string(exp);
        } catch (const std::invalid_argument&) {
            throw ParseError("monomial: bad exponent");
        }
    }
    return Monomial(std::move(e));
}

nlohmann::json ass_to_json(const AssSet& ass) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : ass.primes) out.push_back(p.support);
    return out;
}

nlohmann::json report_to_json(const StabilityReport& rep) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : rep.edges) edges.push_back({u, v});
    nlohmann::json ass = nlohmann::json::array();
    for (const auto& a : rep.ass_sequence) ass.push_back(ass_to_json(a));
    nlohmann::json j{
        {"schema", 1},
        {"graph", {{"vertices", rep.vertices}, {"edges", std::move(edges)}}},
        {"invariants",
         {{"vertices", rep.vertices},
          {"leaf_edges", rep.leaf_edges},
          {"odd_girth", rep.odd_girth ? nlohmann::json(*rep.odd_girth) : nlohmann::json()},
          {"bipartite", rep.bipartite},
          {"pseudoforest", rep.pseudoforest},
          {"has_c4", rep.has_c4},
          {"n0", rep.n0},
          {"n1", rep.n1 ? nlohmann::json(*rep.n1) : nlohmann::json()},
          {"phi0", rep.phi0},
          {"phi1", rep.phi1}}},
        {"ass_sequence", std::move(ass)},
        {"depth_sequence", rep.depth_sequence},
        {"astab_bar", rep.astab_bar},
        {"dstab_bar", rep.dstab_bar},
        {"char", "0"}};
    return j;
}

std::string stability_csv_header() {
    return "graph,vertices,edges,leaf_edges,odd_girth,bipartite,pseudoforest,has_c4,"
           "n0,n1,phi0,phi1,astab_bar,dstab_bar,ass_sequence,depth_sequence";
}

std::string report_to_csv_row(const StabilityReport& rep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < rep.edges.size(); ++i) {
        if (i) os << ";";
        os << rep.edges[i].first << "-" << rep.edges[i].second;
    }
    os << "," << rep.vertices << "," << rep.edges.size() << "," << rep.leaf_edges << ",";
    if (rep.odd_girth) os << *rep.odd_girth;
    os << "," << rep.bipartite << "," << rep.pseudoforest << "," << rep.has_c4 << "," << rep.n0
       << ",";
    if (rep.n1) os << *rep.n1;
    os << "," << rep.phi0 << "," << rep.phi1 << "," << rep.astab_bar << "," << rep.dstab_bar
       << ",";
    for (std::size_t n = 0; n < rep.ass_sequence.size(); ++n) {
        if (n) os << "|";
        for (const auto& p : rep.ass_sequence[n].primes) {
            os << "{";
            for (std::size_t i = 0; i < p.support.size(); ++i) {
                if (i) os << " ";
                os << p.support[i];
            }
            os << "}";
        }
    }
    os << ",";
    for (std::size_t n = 0; n < rep.depth_sequence.size(); ++n) {
        if (n) os << "|";
        os << rep.depth_sequence[n];
    }
    return os.str();
}

nlohmann::json verification_to_json(const VerificationReport& rep) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"fail", c.fail},
                          {"ms", c.ms},
                          {"failures", c.failures}});
    }
    return nlohmann::json{{"schema", 1},
                          {"corpus", rep.corpus},
                          {"graphs", rep.graph_count},
                          {"checks", std::move(checks)},
                          {"all_pass", rep.all_pass}};
}

}  // namespace icstab
