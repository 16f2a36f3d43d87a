#include "asym/io.hpp"

#include <fstream>
#include <sstream>

namespace asym {

nlohmann::json hypergraph_to_json(const Hypergraph& h) {
    nlohmann::json doc;
    doc["k"] = h.k;
    doc["vertices"] = h.vertex_labels;
    doc["edges"] = h.edges;
    if (h.has_edge_names()) doc["edge_names"] = h.edge_names;
    if (!h.meta.empty()) doc["meta"] = h.meta;
    return doc;
}

Hypergraph hypergraph_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("k") || !doc.contains("vertices") || !doc.contains("edges"))
        throw Error(ErrorKind::ParseError, "expected an object with k, vertices and edges");
    try {
        int k = doc.at("k").get<int>();
        auto labels = doc.at("vertices").get<std::vector<std::string>>();
        auto edges = doc.at("edges").get<std::vector<std::vector<int>>>();
        std::vector<std::string> names;
        if (doc.contains("edge_names")) names = doc.at("edge_names").get<std::vector<std::string>>();
        Hypergraph h = build(k, std::move(labels), std::move(edges), std::move(names));
        if (doc.contains("meta"))
            h.meta = doc.at("meta").get<std::map<std::string, std::string>>();
        return h;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

std::string hypergraph_to_text(const Hypergraph& h) {
    for (const auto& label : h.vertex_labels)
        if (label.empty() || label.find_first_of(" \t\n\r") != std::string::npos)
            throw Error(ErrorKind::InvalidParams,
                        "text format requires non-empty labels without whitespace");
    std::ostringstream out;
    out << h.k << ' ' << h.vertex_count() << ' ' << h.edge_count() << '\n';
    for (const auto& label : h.vertex_labels) out << label << '\n';
    for (const auto& e : h.edges) {
        for (size_t i = 0; i < e.size(); ++i)
            out << (i ? " " : "") << h.vertex_labels[e[i]];
        out << '\n';
    }
    return out.str();
}

Hypergraph hypergraph_from_text(const std::string& text) {
    std::istringstream in(text);
    int k = 0, n = 0, m = 0;
    if (!(in >> k >> n >> m) || n < 0 || m < 0)
        throw Error(ErrorKind::ParseError, "expected header line \"k n m\"");

    std::vector<std::string> labels(n);
    std::map<std::string, int> index_of;
    for (int v = 0; v < n; ++v) {
        if (!(in >> labels[v]))
            throw Error(ErrorKind::ParseError, "expected " + std::to_string(n) + " vertex labels");
        index_of[labels[v]] = v;
    }
    std::vector<std::vector<int>> edges(m);
    for (int e = 0; e < m; ++e) {
        edges[e].resize(k);
        for (int i = 0; i < k; ++i) {
            std::string label;
            if (!(in >> label))
                throw Error(ErrorKind::ParseError, "expected " + std::to_string(m) + " edges of " +
                                                       std::to_string(k) + " labels each");
            auto it = index_of.find(label);
            if (it == index_of.end())
                throw Error(ErrorKind::ParseError, "edge references unknown vertex \"" + label + "\"");
            edges[e][i] = it->second;
        }
    }
    std::string extra;
    if (in >> extra)
        throw Error(ErrorKind::ParseError, "trailing content after the last edge");
    return build(k, std::move(labels), std::move(edges));
}

void save_hypergraph(const Hypergraph& h, const std::string& path, FileFormat format) {
    if (format == FileFormat::json)
        write_file(path, hypergraph_to_json(h).dump(2) + "\n");
    else
        write_file(path, hypergraph_to_text(h));
}

Hypergraph load_hypergraph(const std::string& path) {
    const std::string content = read_file(path);
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') {
        nlohmann::json doc = nlohmann::json::parse(content, nullptr, false);
        if (doc.is_discarded())
            throw Error(ErrorKind::ParseError, "invalid JSON in " + path);
        return hypergraph_from_json(doc);
    }
    return hypergraph_from_text(content);
}

nlohmann::json permutation_to_json(const Permutation& p) { return p.image; }

nlohmann::json aut_report_to_json(const AutReport& report) {
    nlohmann::json doc;
    doc["asymmetric"] = report.asymmetric;
    doc["witness"] = report.witness ? permutation_to_json(*report.witness) : nlohmann::json(nullptr);
    doc["generators"] = nlohmann::json::array();
    for (const auto& g : report.generators) doc["generators"].push_back(permutation_to_json(g));
    if (report.group_order) doc["group_order"] = *report.group_order;
    doc["nodes_explored"] = report.nodes_explored;
    return doc;
}

nlohmann::json minimality_report_to_json(const MinimalityReport& report, const Hypergraph& h) {
    nlohmann::json doc;
    doc["mode"] = scan_mode_name(report.mode);
    doc["asymmetric_root"] = report.asymmetric_root;
    doc["subsets_checked"] = report.subsets_checked;
    doc["all_symmetric"] = report.all_symmetric;
    if (report.seed) doc["seed"] = *report.seed;
    if (report.samples) doc["samples"] = *report.samples;
    if (report.counterexample) {
        nlohmann::json ce;
        ce["subset"] = report.counterexample->first;
        nlohmann::json labels = nlohmann::json::array();
        for (int v : report.counterexample->first) labels.push_back(h.vertex_labels[v]);
        ce["labels"] = labels;
        ce["report"] = aut_report_to_json(report.counterexample->second);
        doc["counterexample"] = ce;
    } else {
        doc["counterexample"] = nullptr;
    }
    return doc;
}

nlohmann::json connectivity_to_json(const ConnectivityResult& result, const Hypergraph& h) {
    nlohmann::json doc;
    doc["max_edge_disjoint_paths"] = result.count;
    doc["paths"] = nlohmann::json::array();
    for (const auto& path : result.paths) {
        nlohmann::json p;
        nlohmann::json vertices = nlohmann::json::array();
        for (int v : path.vertices) vertices.push_back(h.vertex_labels[v]);
        p["vertices"] = vertices;
        p["edges"] = path.edges;
        if (h.has_edge_names()) {
            nlohmann::json names = nlohmann::json::array();
            for (int e : path.edges) names.push_back(h.edge_names[e]);
            p["edge_names"] = names;
        }
        doc["paths"].push_back(p);
    }
    return doc;
}

nlohmann::json stats_to_json(const Hypergraph& h) {
    nlohmann::json doc;
    doc["k"] = h.k;
    doc["n"] = h.vertex_count();
    doc["m"] = h.edge_count();
    std::map<std::string, int> histogram;
    for (int v = 0; v < h.vertex_count(); ++v) ++histogram[std::to_string(degree(h, v))];
    doc["degree_histogram"] = histogram;
    doc["max_degree"] = max_degree(h);
    if (h.vertex_count() >= 2) {
        doc["max_codegree"] = max_codegree(h);
        doc["linear"] = is_linear(h);
    } else {
        doc["max_codegree"] = nullptr;
        doc["linear"] = nullptr;
    }
    return doc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error(ErrorKind::IoError, "cannot read " + path);
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
}

} // namespace asym
