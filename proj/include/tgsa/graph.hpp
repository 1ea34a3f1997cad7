#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tgsa/common.hpp"

namespace tgsa {

enum class VertexKind { Element, TextNode };

enum class ArcLabel : std::uint8_t { PC = 0, O = 1 };

inline const char* label_name(ArcLabel l) { return l == ArcLabel::PC ? "PC" : "O"; }

struct Vertex {
    std::string id;
    VertexKind kind;
    std::string name;  // element name, or text content for TextNode
    Ordinal start = 0;
    Ordinal end = 0;  // TextNode has start == end
};

struct Arc {
    std::string from;
    ArcLabel label;
    std::string to;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Two-relational directed graph over element and text vertices. Arcs are
/// labeled PC (parent-child) or O (overlap) and always point from the
/// earlier-starting vertex to the later-starting one.
class TgsaGraph {
public:
    using Index = std::uint32_t;
    static constexpr Index npos = std::numeric_limits<Index>::max();

    void reserve(std::size_t n_vertices) {
        vertices_.reserve(n_vertices);
        children_.reserve(n_vertices);
        parents_.reserve(n_vertices);
        ov_out_.reserve(n_vertices);
        ov_in_.reserve(n_vertices);
    }

    Index add_vertex(Vertex v) {
        Index idx = static_cast<Index>(vertices_.size());
        vertices_.push_back(std::move(v));
        children_.emplace_back();
        parents_.emplace_back();
        ov_out_.emplace_back();
        ov_in_.emplace_back();
        return idx;
    }

    Index find(std::string_view id) const {
        ensure_id_index();
        auto it = by_id_.find(std::string(id));
        return it == by_id_.end() ? npos : it->second;
    }

    /// Forces the id index to exist; throws on duplicate vertex ids.
    /// Lookups build it on demand, so calling this is only needed to
    /// surface duplicate ids eagerly.
    void verify_unique_ids() const { ensure_id_index(); }

    Index require(std::string_view id) const {
        Index i = find(id);
        if (i == npos) throw UnknownIdError("unknown vertex id '" + std::string(id) + "'");
        return i;
    }

    const Vertex& vertex(Index i) const { return vertices_.at(i); }
    Vertex& vertex_mut(Index i) { return vertices_.at(i); }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t arc_count() const { return arc_count_; }

    void set_root(Index i) { root_ = i; }
    Index root() const { return root_; }

    // membership checks scan the in-list of `to`, which stays short: the
    // in-degree of a vertex is its parent/overlapper count, not the fanout
    bool has_arc(Index from, ArcLabel label, Index to) const {
        const auto& in = label == ArcLabel::PC ? parents_[to] : ov_in_[to];
        return std::find(in.begin(), in.end(), from) != in.end();
    }

    void add_arc(Index from, ArcLabel label, Index to) {
        if (from == to) throw Error("self arc on vertex '" + vertices_[from].id + "'");
        if (vertices_[from].start >= vertices_[to].start) {
            throw Error("arc does not follow start order: '" + vertices_[from].id +
                        "' -> '" + vertices_[to].id + "'");
        }
        auto& in = label == ArcLabel::PC ? parents_[to] : ov_in_[to];
        if (std::find(in.begin(), in.end(), from) != in.end()) {
            throw Error("duplicate arc '" + vertices_[from].id + "' -" + label_name(label) +
                        "-> '" + vertices_[to].id + "'");
        }
        in.push_back(from);
        (label == ArcLabel::PC ? children_[from] : ov_out_[from]).push_back(to);
        ++arc_count_;
    }

    void remove_arc(Index from, ArcLabel label, Index to) {
        auto& out = label == ArcLabel::PC ? children_[from] : ov_out_[from];
        auto& in = label == ArcLabel::PC ? parents_[to] : ov_in_[to];
        auto it = std::find(in.begin(), in.end(), from);
        if (it == in.end()) {
            throw Error("removing non-existent arc '" + vertices_[from].id + "' -" +
                        label_name(label) + "-> '" + vertices_[to].id + "'");
        }
        in.erase(it);
        out.erase(std::find(out.begin(), out.end(), to));
        --arc_count_;
    }

    const std::vector<Index>& children(Index v) const { return children_.at(v); }
    const std::vector<Index>& parents(Index v) const { return parents_.at(v); }
    const std::vector<Index>& overlap_successors(Index v) const { return ov_out_.at(v); }
    const std::vector<Index>& overlap_predecessors(Index v) const { return ov_in_.at(v); }

    std::size_t in_degree(Index v) const { return parents_.at(v).size() + ov_in_.at(v).size(); }

    /// True iff a sequence of PC arcs leads from u to v. The reflexive
    /// case is false: paths have distinct vertices.
    bool path_exists(Index u, Index v) const {
        if (u == v) return false;
        if (vertices_[u].start >= vertices_[v].start) return false;
        std::vector<Index> stack(children_[u].begin(), children_[u].end());
        std::unordered_set<Index> seen;
        while (!stack.empty()) {
            Index w = stack.back();
            stack.pop_back();
            if (w == v) return true;
            if (!seen.insert(w).second) continue;
            for (Index c : children_[w]) {
                if (vertices_[c].start <= vertices_[v].start) stack.push_back(c);
            }
        }
        return false;
    }

    std::vector<Index> ancestors(Index v) const { return closure(v, parents_); }
    std::vector<Index> descendants(Index v) const { return closure(v, children_); }

    // ---- id-based convenience surface ----

    bool path_exists(std::string_view u, std::string_view v) const {
        return path_exists(require(u), require(v));
    }
    std::vector<std::string> parents_of(std::string_view id) const {
        return ids(parents_.at(require(id)));
    }
    std::vector<std::string> children_of(std::string_view id) const {
        return ids(children_.at(require(id)));
    }
    std::vector<std::string> ancestors_of(std::string_view id) const {
        return ids(ancestors(require(id)));
    }
    std::vector<std::string> descendants_of(std::string_view id) const {
        return ids(descendants(require(id)));
    }
    std::vector<std::string> overlap_successors_of(std::string_view id) const {
        return ids(ov_out_.at(require(id)));
    }
    std::vector<std::string> overlap_predecessors_of(std::string_view id) const {
        return ids(ov_in_.at(require(id)));
    }

    bool has_arc(std::string_view from, ArcLabel label, std::string_view to) const {
        Index f = find(from), t = find(to);
        return f != npos && t != npos && has_arc(f, label, t);
    }

    /// Arcs sorted by (from.start, label, to.start); PC before O.
    std::vector<Arc> arcs_sorted() const {
        std::vector<std::tuple<Ordinal, int, Ordinal, Arc>> keyed;
        keyed.reserve(arc_count());
        for (Index v = 0; v < vertices_.size(); ++v) {
            for (Index c : children_[v]) {
                keyed.emplace_back(vertices_[v].start, 0, vertices_[c].start,
                                   Arc{vertices_[v].id, ArcLabel::PC, vertices_[c].id});
            }
            for (Index o : ov_out_[v]) {
                keyed.emplace_back(vertices_[v].start, 1, vertices_[o].start,
                                   Arc{vertices_[v].id, ArcLabel::O, vertices_[o].id});
            }
        }
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
            return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
                   std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
        });
        std::vector<Arc> out;
        out.reserve(keyed.size());
        for (auto& k : keyed) out.push_back(std::move(std::get<3>(k)));
        return out;
    }

    /// Vertex indexes sorted by start ordinal.
    std::vector<Index> vertices_by_start() const {
        std::vector<Index> order(vertices_.size());
        for (Index i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [this](Index a, Index b) {
            return vertices_[a].start < vertices_[b].start;
        });
        return order;
    }

    std::string source_digest;

private:
    // The id map is built lazily: bulk construction never pays for string
    // hashing, and most graphs are only ever queried by index.
    void ensure_id_index() const {
        if (by_id_.size() == vertices_.size()) return;
        by_id_.clear();
        by_id_.reserve(vertices_.size());
        for (Index i = 0; i < static_cast<Index>(vertices_.size()); ++i) {
            if (!by_id_.emplace(vertices_[i].id, i).second) {
                throw Error("duplicate vertex id '" + vertices_[i].id + "'");
            }
        }
    }

    std::vector<Index> closure(Index v, const std::vector<std::vector<Index>>& adj) const {
        std::vector<Index> stack(adj.at(v).begin(), adj.at(v).end());
        std::unordered_set<Index> seen;
        std::vector<Index> out;
        while (!stack.empty()) {
            Index w = stack.back();
            stack.pop_back();
            if (!seen.insert(w).second) continue;
            out.push_back(w);
            for (Index n : adj[w]) stack.push_back(n);
        }
        std::sort(out.begin(), out.end(), [this](Index a, Index b) {
            return vertices_[a].start < vertices_[b].start;
        });
        return out;
    }

    std::vector<std::string> ids(const std::vector<Index>& v) const {
        std::vector<std::string> out;
        out.reserve(v.size());
        std::vector<Index> sorted = v;
        std::sort(sorted.begin(), sorted.end(), [this](Index a, Index b) {
            return vertices_[a].start < vertices_[b].start;
        });
        for (Index i : sorted) out.push_back(vertices_[i].id);
        return out;
    }

    std::vector<Vertex> vertices_;
    mutable std::unordered_map<std::string, Index> by_id_;
    std::vector<std::vector<Index>> children_, parents_, ov_out_, ov_in_;
    std::size_t arc_count_ = 0;
    Index root_ = npos;
};

/// Line-delimited graph text: a header, one V record per vertex sorted by
/// start ordinal, one A record per arc sorted by (from.start, label,
/// to.start). Byte-deterministic for a given graph.
inline std::string serialize_graph(const TgsaGraph& g) {
    std::ostringstream os;
    os << "tgsa-graph\t" << g.source_digest << "\t" << g.vertex_count() << "\t"
       << g.arc_count() << "\n";
    for (TgsaGraph::Index i : g.vertices_by_start()) {
        const Vertex& v = g.vertex(i);
        os << "V\t" << detail::escape_field(v.id) << "\t"
           << (v.kind == VertexKind::Element ? "E" : "T") << "\t"
           << detail::escape_field(v.name) << "\t" << v.start << "\t" << v.end << "\n";
    }
    for (const Arc& a : g.arcs_sorted()) {
        os << "A\t" << detail::escape_field(a.from) << "\t" << label_name(a.label) << "\t"
           << detail::escape_field(a.to) << "\n";
    }
    return os.str();
}

namespace detail {

inline std::vector<std::string> split_tabs(std::string_view line) {
    std::vector<std::string> out;
    std::size_t begin = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == '\t') {
            out.emplace_back(line.substr(begin, i - begin));
            begin = i + 1;
        }
    }
    return out;
}

inline Ordinal parse_ordinal(const std::string& s) {
    try {
        unsigned long v = std::stoul(s);
        if (v > std::numeric_limits<Ordinal>::max()) throw ParseError("ordinal overflow");
        return static_cast<Ordinal>(v);
    } catch (const std::logic_error&) {
        throw ParseError("bad ordinal '" + s + "'");
    }
}

}  // namespace detail

inline TgsaGraph parse_graph(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty graph file");
    auto header = detail::split_tabs(line);
    if (header.size() != 4 || header[0] != "tgsa-graph") {
        throw ParseError("bad graph header");
    }
    TgsaGraph g;
    g.source_digest = header[1];
    std::size_t n_vertices = detail::parse_ordinal(header[2]);
    std::size_t n_arcs = detail::parse_ordinal(header[3]);

    std::size_t seen_v = 0, seen_a = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto f = detail::split_tabs(line);
        if (f[0] == "V") {
            if (f.size() != 6) throw ParseError("bad vertex record");
            Vertex v;
            v.id = detail::unescape_field(f[1]);
            if (f[2] == "E") {
                v.kind = VertexKind::Element;
            } else if (f[2] == "T") {
                v.kind = VertexKind::TextNode;
            } else {
                throw ParseError("bad vertex kind '" + f[2] + "'");
            }
            v.name = detail::unescape_field(f[3]);
            v.start = detail::parse_ordinal(f[4]);
            v.end = detail::parse_ordinal(f[5]);
            g.add_vertex(std::move(v));
            ++seen_v;
        } else if (f[0] == "A") {
            if (f.size() != 4) throw ParseError("bad arc record");
            ArcLabel label;
            if (f[2] == "PC") {
                label = ArcLabel::PC;
            } else if (f[2] == "O") {
                label = ArcLabel::O;
            } else {
                throw ParseError("bad arc label '" + f[2] + "'");
            }
            g.add_arc(g.require(detail::unescape_field(f[1])), label,
                      g.require(detail::unescape_field(f[3])));
            ++seen_a;
        } else {
            throw ParseError("unknown record '" + f[0] + "'");
        }
    }
    if (seen_v != n_vertices || seen_a != n_arcs) {
        throw ParseError("graph file truncated: header promises " +
                         std::to_string(n_vertices) + " vertices / " + std::to_string(n_arcs) +
                         " arcs, found " + std::to_string(seen_v) + " / " +
                         std::to_string(seen_a));
    }
    try {
        g.verify_unique_ids();
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    // root = unique vertex with no incoming arc
    TgsaGraph::Index root = TgsaGraph::npos;
    for (TgsaGraph::Index i = 0; i < g.vertex_count(); ++i) {
        if (g.in_degree(i) == 0) {
            if (root != TgsaGraph::npos) throw ParseError("graph has multiple roots");
            root = i;
        }
    }
    if (root == TgsaGraph::npos && g.vertex_count() > 0) {
        throw ParseError("graph has no root");
    }
    g.set_root(root);
    return g;
}

namespace detail {

inline std::string dot_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

/// DOT rendering: PC arcs solid, O arcs dashed, vertices in start order.
inline std::string to_dot(const TgsaGraph& g) {
    std::ostringstream os;
    os << "digraph tgsa {\n";
    for (TgsaGraph::Index i : g.vertices_by_start()) {
        const Vertex& v = g.vertex(i);
        os << "  " << detail::dot_quote(v.id) << " [label=" << detail::dot_quote(v.name)
           << (v.kind == VertexKind::TextNode ? " shape=plaintext" : "") << "];\n";
    }
    for (const Arc& a : g.arcs_sorted()) {
        os << "  " << detail::dot_quote(a.from) << " -> " << detail::dot_quote(a.to);
        if (a.label == ArcLabel::O) os << " [style=dashed]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace tgsa
