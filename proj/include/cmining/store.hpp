#pragma once

// On-disk graph store: `manifest.txt` listing model ids plus one
// `<model_id>.lpg` file per graph. Line-based UTF-8, url-encoded labels,
// order-stable so identical datasets serialize byte-identically.

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cmining/graph.hpp"

namespace cmining {

inline std::string url_encode(const std::string& s) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s) {
        bool safe = std::isalnum(c) || c == '-' || c == '_' || c == '.' ||
                    c == '*' || c == ':';
        if (safe) {
            out += static_cast<char>(c);
        } else {
            out += '%';
            out += hex[c >> 4];
            out += hex[c & 0xF];
        }
    }
    return out;
}

inline std::string url_decode(const std::string& s) {
    auto hexval = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        return -1;
    };
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '%' && i + 2 < s.size()) {
            int hi = hexval(s[i + 1]), lo = hexval(s[i + 2]);
            if (hi < 0 || lo < 0)
                throw std::invalid_argument("bad percent escape in: " + s);
            out += static_cast<char>(hi * 16 + lo);
            i += 2;
        } else {
            out += s[i];
        }
    }
    return out;
}

class StoreError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void write_graph_file(const ModelGraph& g, const std::filesystem::path& file) {
    std::ostringstream out;
    out << "g " << url_encode(g.model_id) << "\n";
    // Nodes are already sorted by id (dense).
    for (const Node& n : g.nodes) {
        out << "v " << n.id << ' ';
        bool first = true;
        for (const std::string& l : n.construct_labels) {
            if (!first) out << '|';
            out << url_encode(l);
            first = false;
        }
        if (!n.properties.empty()) {
            out << " {";
            first = true;
            for (const auto& [k, v] : n.properties) {
                if (!first) out << ',';
                out << url_encode(k) << '=' << url_encode(v);
                first = false;
            }
            out << '}';
        }
        out << "\n";
    }
    std::vector<std::tuple<NodeId, NodeId, std::string>> keys;
    keys.reserve(g.edges.size());
    for (const Edge& e : g.edges) keys.push_back(e.key());
    std::sort(keys.begin(), keys.end());
    for (const auto& [a, b, label] : keys)
        out << "e " << a << ' ' << b << ' ' << url_encode(label) << "\n";

    std::ofstream f(file, std::ios::binary);
    if (!f) throw StoreError("cannot open for writing: " + file.string());
    f << out.str();
    if (!f) throw StoreError("write failure: " + file.string());
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace detail

inline void write_store(const GraphDataset& dataset, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw StoreError("cannot create store directory: " + dir.string());

    std::ofstream manifest(dir / "manifest.txt", std::ios::binary);
    if (!manifest)
        throw StoreError("cannot write manifest: " + (dir / "manifest.txt").string());
    for (const ModelGraph& g : dataset.graphs) manifest << g.model_id << "\n";
    manifest.close();

    for (const ModelGraph& g : dataset.graphs)
        detail::write_graph_file(g, dir / (g.model_id + ".lpg"));
}

inline ModelGraph read_graph_file(const std::filesystem::path& file) {
    std::ifstream f(file, std::ios::binary);
    if (!f) throw StoreError("missing graph file: " + file.string());
    ModelGraph g;
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& what) {
        throw StoreError(file.string() + ":" + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream in(line);
        char kind;
        in >> kind;
        if (kind == 'g') {
            std::string id;
            in >> id;
            g.model_id = url_decode(id);
        } else if (kind == 'v') {
            std::uint64_t id;
            std::string labels, props;
            if (!(in >> id >> labels)) fail("malformed node record");
            in >> props;
            if (id != g.nodes.size()) fail("node ids must be dense and sorted");
            Node n;
            n.id = static_cast<NodeId>(id);
            for (const std::string& l : detail::split(labels, '|')) {
                if (l.empty()) fail("empty construct label");
                n.construct_labels.insert(url_decode(l));
            }
            if (!props.empty()) {
                if (props.front() != '{' || props.back() != '}')
                    fail("malformed property block");
                std::string body = props.substr(1, props.size() - 2);
                if (!body.empty()) {
                    for (const std::string& kv : detail::split(body, ',')) {
                        auto eq = kv.find('=');
                        if (eq == std::string::npos) fail("malformed property pair");
                        n.properties[url_decode(kv.substr(0, eq))] =
                            url_decode(kv.substr(eq + 1));
                    }
                }
            }
            g.nodes.push_back(std::move(n));
        } else if (kind == 'e') {
            std::uint64_t a, b;
            std::string label;
            if (!(in >> a >> b >> label)) fail("malformed edge record");
            if (a >= g.nodes.size() || b >= g.nodes.size())
                fail("edge endpoint out of range");
            g.edges.push_back(Edge{static_cast<NodeId>(a), static_cast<NodeId>(b),
                                   url_decode(label)});
        } else {
            fail("unknown record kind");
        }
    }
    return g;
}

inline GraphDataset read_store(const std::filesystem::path& dir) {
    std::ifstream manifest(dir / "manifest.txt", std::ios::binary);
    if (!manifest)
        throw StoreError("missing manifest: " + (dir / "manifest.txt").string());
    GraphDataset dataset;
    std::string id;
    while (std::getline(manifest, id)) {
        if (id.empty()) continue;
        dataset.graphs.push_back(read_graph_file(dir / (id + ".lpg")));
        if (dataset.graphs.back().model_id != id)
            throw StoreError("model_id mismatch between manifest and file: " + id);
    }
    dataset.validate();
    return dataset;
}

}  // namespace cmining
