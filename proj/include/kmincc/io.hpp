#pragma once

// Plain-text file formats.
//
// Instance file: first content line "n l", then l lines of n whitespace-
// separated integer labels (one input partition per line, canonicalized on
// load). Lines starting with '#' and blank lines are skipped; error messages
// reference physical line numbers.
//
// Graph file: first content line "n m", then m lines "u v" with 0-based
// endpoints.
//
// Reduction artifacts serialize as an instance file plus a "<path>.prov"
// sidecar holding one "index TAB tag" line per element.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "kmincc/exact.hpp"
#include "kmincc/instance.hpp"
#include "kmincc/reduction.hpp"

namespace kmincc {

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

inline std::int64_t parse_int(const std::string& tok, int lineno) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::runtime_error("malformed line " + std::to_string(lineno) +
                                 ": invalid integer '" + tok + "'");
    return value;
}

// Reads the next non-comment, non-blank line; returns false at end of input.
inline bool next_content_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace detail

inline Instance parse_instance(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!detail::next_content_line(in, line, lineno))
        throw std::runtime_error("empty instance file");
    auto header = detail::split_tokens(line);
    if (header.size() != 2)
        throw std::runtime_error("malformed line " + std::to_string(lineno) +
                                 ": expected 'n l' header");
    const std::int64_t n = detail::parse_int(header[0], lineno);
    const std::int64_t l = detail::parse_int(header[1], lineno);
    if (n < 1 || l < 1)
        throw std::runtime_error("malformed line " + std::to_string(lineno) +
                                 ": n and l must be positive");

    std::vector<Partition> parts;
    parts.reserve(static_cast<std::size_t>(l));
    for (std::int64_t t = 0; t < l; ++t) {
        if (!detail::next_content_line(in, line, lineno))
            throw std::runtime_error("unexpected end of file: expected " + std::to_string(l) +
                                     " partition lines");
        auto tokens = detail::split_tokens(line);
        if (static_cast<std::int64_t>(tokens.size()) != n)
            throw std::runtime_error("malformed line " + std::to_string(lineno) + ": expected " +
                                     std::to_string(n) + " labels");
        std::vector<std::int64_t> raw;
        raw.reserve(tokens.size());
        for (const auto& tok : tokens) raw.push_back(detail::parse_int(tok, lineno));
        parts.push_back(canonicalize(raw));
    }
    return build_instance(std::move(parts));
}

inline Instance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_instance(in);
}

inline void write_instance(std::ostream& out, const Instance& inst) {
    out << inst.size() << ' ' << inst.partition_count() << '\n';
    for (const auto& p : inst.partitions()) {
        for (Element i = 0; i < inst.size(); ++i) {
            if (i > 0) out << ' ';
            out << p.label(i);
        }
        out << '\n';
    }
}

inline void write_instance_file(const std::string& path, const Instance& inst) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    write_instance(out, inst);
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

// ---------------------------------------------------------------------------
// Graphs
// ---------------------------------------------------------------------------

inline Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!detail::next_content_line(in, line, lineno))
        throw std::runtime_error("empty graph file");
    auto header = detail::split_tokens(line);
    if (header.size() != 2)
        throw std::runtime_error("malformed line " + std::to_string(lineno) +
                                 ": expected 'n m' header");
    const std::int64_t n = detail::parse_int(header[0], lineno);
    const std::int64_t m = detail::parse_int(header[1], lineno);
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    for (std::int64_t t = 0; t < m; ++t) {
        if (!detail::next_content_line(in, line, lineno))
            throw std::runtime_error("unexpected end of file: expected " + std::to_string(m) +
                                     " edge lines");
        auto tokens = detail::split_tokens(line);
        if (tokens.size() != 2)
            throw std::runtime_error("malformed line " + std::to_string(lineno) +
                                     ": expected 'u v'");
        edges.emplace_back(static_cast<std::int32_t>(detail::parse_int(tokens[0], lineno)),
                           static_cast<std::int32_t>(detail::parse_int(tokens[1], lineno)));
    }
    return make_graph(static_cast<std::int32_t>(n), std::move(edges));
}

inline Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count << ' ' << g.edges.size() << '\n';
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
}

inline void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    write_graph(out, g);
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

// ---------------------------------------------------------------------------
// Reduction artifacts
// ---------------------------------------------------------------------------

inline std::string tag_to_string(const ElementTag& tag) {
    const char* kind = tag.kind == ElementTag::Kind::anchor ? "X" : "Y";
    return std::string(kind) + "(" + std::to_string(tag.vertex) + "," +
           std::to_string(tag.index) + ")";
}

// Writes the instance file at `path` and the provenance sidecar at
// "<path>.prov".
inline void write_reduction_files(const std::string& path, const ReductionArtifact& art) {
    write_instance_file(path, art.instance);
    std::ofstream out(path + ".prov");
    if (!out) throw std::runtime_error("cannot write '" + path + ".prov'");
    for (std::size_t e = 0; e < art.provenance.size(); ++e)
        out << e << '\t' << tag_to_string(art.provenance[e]) << '\n';
    if (!out) throw std::runtime_error("write failed for '" + path + ".prov'");
}

}  // namespace kmincc
