#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "euleredit/editors.hpp"
#include "euleredit/graph.hpp"

namespace euleredit {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, int line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Strips comments and yields whitespace-tokenized lines with their numbers.
struct LineReader {
    std::istream& in;
    std::string source;
    int line_no = 0;

    bool next(std::vector<std::string>& tokens, int& line_out) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            const std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ss(line);
            tokens.clear();
            std::string tok;
            while (ss >> tok) tokens.push_back(tok);
            if (!tokens.empty()) {
                line_out = line_no;
                return true;
            }
        }
        return false;
    }
};

inline int parse_vertex(const std::string& tok, const std::string& source, int line) {
    std::size_t pos = 0;
    long value = 0;
    try {
        value = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(source, line, "expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size()) {
        throw ParseError(source, line, "trailing characters in '" + tok + "'");
    }
    if (value < 0 || value > 1'000'000'000L) {
        throw ParseError(source, line, "value out of range: " + tok);
    }
    return static_cast<int>(value);
}

}  // namespace detail

/// Canonical edge-list format: first non-comment line "n m", then m lines
/// "u v" with 0 <= u < v < n. Lines starting with '#' are ignored.
inline Graph read_edge_list(std::istream& in, const std::string& source = "<stream>") {
    detail::LineReader reader{in, source};
    std::vector<std::string> tokens;
    int line = 0;

    if (!reader.next(tokens, line)) {
        throw ParseError(source, reader.line_no, "missing header line 'n m'");
    }
    if (tokens.size() != 2) {
        throw ParseError(source, line, "header must be 'n m'");
    }
    const int n = detail::parse_vertex(tokens[0], source, line);
    const int m = detail::parse_vertex(tokens[1], source, line);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        if (!reader.next(tokens, line)) {
            throw ParseError(source, reader.line_no,
                             "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        }
        if (tokens.size() != 2) {
            throw ParseError(source, line, "edge line must be 'u v'");
        }
        const int u = detail::parse_vertex(tokens[0], source, line);
        const int v = detail::parse_vertex(tokens[1], source, line);
        if (u >= v) {
            throw ParseError(source, line, "edges must satisfy u < v");
        }
        if (v >= n) {
            throw ParseError(source, line, "vertex " + std::to_string(v) +
                                               " out of range for n=" + std::to_string(n));
        }
        edges.emplace_back(u, v);
    }
    if (reader.next(tokens, line)) {
        throw ParseError(source, line, "unexpected data after " + std::to_string(m) + " edges");
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(source, reader.line_no, e.what());
    }
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open graph file: " + path);
    return read_edge_list(in, path);
}

inline void save_edge_list(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    write_edge_list(out, g);
    if (!out) throw IoError("write failed: " + path);
}

/// Plan text format: one op per line, "ADD u v" or "DEL u v" with u < v;
/// '#' starts a comment.
inline std::vector<EditOp> read_plan(std::istream& in, const std::string& source = "<stream>") {
    detail::LineReader reader{in, source};
    std::vector<std::string> tokens;
    int line = 0;
    std::vector<EditOp> ops;
    while (reader.next(tokens, line)) {
        if (tokens.size() != 3) {
            throw ParseError(source, line, "op line must be 'ADD u v' or 'DEL u v'");
        }
        EditKind kind;
        if (tokens[0] == "ADD") {
            kind = EditKind::Add;
        } else if (tokens[0] == "DEL") {
            kind = EditKind::Remove;
        } else {
            throw ParseError(source, line, "unknown op '" + tokens[0] + "'");
        }
        const int u = detail::parse_vertex(tokens[1], source, line);
        const int v = detail::parse_vertex(tokens[2], source, line);
        if (u >= v) {
            throw ParseError(source, line, "ops must satisfy u < v");
        }
        ops.push_back(EditOp{kind, Edge(u, v)});
    }
    return ops;
}

inline void write_plan(std::ostream& out, const EditPlan& plan) {
    out << "# mode=" << to_string(plan.mode) << " achieved=" << plan.achieved()
        << " lower_bound=" << plan.lower_bound << " repair_ops=" << plan.repair_ops << '\n';
    if (!plan.residual.empty()) {
        out << "# residual";
        for (int v : plan.residual) out << ' ' << v;
        out << '\n';
    }
    for (const EditOp& op : plan.ops) {
        out << (op.kind == EditKind::Add ? "ADD " : "DEL ") << op.edge.u << ' ' << op.edge.v
            << '\n';
    }
}

inline std::vector<EditOp> load_plan(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open plan file: " + path);
    return read_plan(in, path);
}

inline void save_plan(const std::string& path, const EditPlan& plan) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    write_plan(out, plan);
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace euleredit
