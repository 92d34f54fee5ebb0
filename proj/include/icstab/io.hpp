#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "icstab/decomp.hpp"
#include "icstab/graph.hpp"
#include "icstab/monomial.hpp"
#include "icstab/stability.hpp"
#include "icstab/verify.hpp"

namespace icstab {

// Malformed input content (as opposed to I/O failures, which surface as
// std::runtime_error).
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Edge-list text: line "r m", then m lines "u v" with 1 <= u < v <= r.
Graph parse_edge_list(std::istream& in);
std::string format_edge_list(const Graph& g);

// graph6, single-byte sizes (up to 62 vertices).
Graph parse_graph6_line(const std::string& line);

// Reads one or more graphs: graph6 when the extension is .g6, otherwise
// consecutive edge-list blocks.
std::vector<Graph> read_graphs_file(const std::string& path);
Graph read_graph_file(const std::string& path);

nlohmann::json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const nlohmann::json& j);
MonomialIdeal read_ideal_file(const std::string& path);

Monomial parse_monomial_text(const std::string& text, int r);

nlohmann::json ass_to_json(const AssSet& ass);
nlohmann::json report_to_json(const StabilityReport& rep);
std::string stability_csv_header();
std::string report_to_csv_row(const StabilityReport& rep);
nlohmann::json verification_to_json(const VerificationReport& rep);

}  // namespace icstab
