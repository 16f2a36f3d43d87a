#ifndef ASYM_IO_HPP
#define ASYM_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "asym/aut.hpp"
#include "asym/connectivity.hpp"
#include "asym/hypergraph.hpp"
#include "asym/minimality.hpp"

namespace asym {

enum class FileFormat { json, text };

// {"k": int, "vertices": [...], "edges": [[...]], "edge_names": [...]?, "meta": {...}?}
nlohmann::json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& doc);

// Line 1 "k n m", then n vertex labels, then m edges as k space-separated
// labels. Drops edge names and meta.
std::string hypergraph_to_text(const Hypergraph& h);
Hypergraph hypergraph_from_text(const std::string& text);

void save_hypergraph(const Hypergraph& h, const std::string& path, FileFormat format);
// Format is sniffed: JSON documents start with '{'.
Hypergraph load_hypergraph(const std::string& path);

nlohmann::json permutation_to_json(const Permutation& p);
nlohmann::json aut_report_to_json(const AutReport& report);
nlohmann::json minimality_report_to_json(const MinimalityReport& report, const Hypergraph& h);
nlohmann::json connectivity_to_json(const ConnectivityResult& result, const Hypergraph& h);
nlohmann::json stats_to_json(const Hypergraph& h);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace asym

#endif // ASYM_IO_HPP
