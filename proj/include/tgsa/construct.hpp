#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tgsa/graph.hpp"
#include "tgsa/token.hpp"

namespace tgsa {

struct ConstructError : Error {
    using Error::Error;
};

/// Construction trace for post-hoc instrumentation checks. OverlapChild
/// records the open entries preceding the closing node at the moment an
/// overlap-assigned child arc was added.
struct ConstructEvent {
    enum class Kind { Open, Close, Reparent, OverlapArc, OverlapChild };
    Kind kind;
    std::string node;                     // opened/closed node, or the closing n
    std::string other;                    // parent (Open), new parent (Reparent), y, or child c
    std::string old_parent;               // Reparent only
    std::vector<std::string> open_before; // OverlapChild: open ids preceding n, in open order
};

struct ConstructLog {
    std::vector<ConstructEvent> events;
};

namespace detail {

struct OpenEntry {
    TgsaGraph::Index vertex;
    TgsaGraph::Index parent;  // npos for the root
    std::unordered_set<TgsaGraph::Index> overlap_descendants;  // the D set
};

inline std::string text_vertex_id(Ordinal ord) { return "#t" + std::to_string(ord); }

}  // namespace detail

/// One-pass TGSA construction from a validated token stream. Open
/// elements live on a list; closing a non-latest element triggers the
/// overlap handling: re-parent the first node opened after it, emit O
/// arcs to every later open node, and adopt their containable children.
inline TgsaGraph construct(const TokenStream& stream, ConstructLog* log = nullptr) {
    // Stream invariants are checked inline during the single pass below;
    // only when something is off do we pay for the full diagnostic scan.
    auto fail = [&stream]() -> void {
        ValidationReport report = validate_stream(stream);
        if (report.ok()) {
            throw ConstructError("internal error: construction failed on a valid stream");
        }
        throw ConstructError("invalid token stream:\n" + report.to_string());
    };

    if (stream.tokens.empty() || stream.tokens.front().kind != TokenKind::StartTag) fail();
    std::size_t n_vertices = 0;  // start tags and text runs each become a vertex
    {
        Ordinal expected = 1;
        for (const Token& t : stream.tokens) {
            if (t.ordinal != expected++) fail();
            if (t.kind != TokenKind::EndTag) ++n_vertices;
        }
    }

    using Index = TgsaGraph::Index;
    TgsaGraph g;
    g.source_digest = stream.source_digest;
    g.reserve(n_vertices);

    std::vector<detail::OpenEntry> open;
    // open_slot[v] is v's position in the open list, or kClosed.
    constexpr std::size_t kClosed = static_cast<std::size_t>(-1);
    std::vector<std::size_t> open_slot(n_vertices, kClosed);

    auto record = [&](ConstructEvent ev) {
        if (log) log->events.push_back(std::move(ev));
    };
    auto open_ids_before = [&](std::size_t pos) {
        std::vector<std::string> ids;
        ids.reserve(pos);
        for (std::size_t i = 0; i < pos; ++i) ids.push_back(g.vertex(open[i].vertex).id);
        return ids;
    };

    // addParentChildRelation: the closing node n adopts each already-closed
    // child c of the still-open node y, unless c was already assigned to n
    // through an earlier overlap (c in n.D). Every adopted child is recorded
    // in the D set of all entries opened before n.
    auto add_parent_child_relation = [&](std::size_t n_pos, std::size_t y_pos) {
        detail::OpenEntry& n = open[n_pos];
        const std::vector<Index> snapshot = g.children(open[y_pos].vertex);
        for (Index c : snapshot) {
            if (open_slot[c] != kClosed && open_slot[c] > n_pos) continue;  // gets an O arc instead
            if (n.overlap_descendants.count(c)) continue;
            g.add_arc(n.vertex, ArcLabel::PC, c);
            record({ConstructEvent::Kind::OverlapChild, g.vertex(n.vertex).id,
                    g.vertex(c).id, {}, open_ids_before(n_pos)});
            for (std::size_t i = 0; i < n_pos; ++i) {
                open[i].overlap_descendants.insert(c);
            }
        }
    };

    for (const Token& tok : stream.tokens) {
        switch (tok.kind) {
            case TokenKind::Text: {
                if (open.empty()) fail();  // text outside the root element
                Index v = g.add_vertex(Vertex{detail::text_vertex_id(tok.ordinal),
                                              VertexKind::TextNode, tok.content, tok.ordinal,
                                              tok.ordinal});
                g.add_arc(open.back().vertex, ArcLabel::PC, v);
                break;
            }
            case TokenKind::StartTag: {
                if (open.empty() && g.vertex_count() > 0) fail();  // second root
                Index v;
                try {
                    v = g.add_vertex(
                        Vertex{tok.node_id, VertexKind::Element, tok.name, tok.ordinal, 0});
                } catch (const Error&) {
                    fail();  // duplicate node_id
                    throw;   // unreachable; fail() always throws
                }
                Index parent = TgsaGraph::npos;
                if (!open.empty()) {
                    parent = open.back().vertex;
                    g.add_arc(parent, ArcLabel::PC, v);
                }
                open_slot[v] = open.size();
                open.push_back({v, parent, {}});
                record({ConstructEvent::Kind::Open, tok.node_id,
                        parent == TgsaGraph::npos ? "" : g.vertex(parent).id, {}, {}});
                break;
            }
            case TokenKind::EndTag: {
                Index v;
                std::size_t pos;
                if (!open.empty() && g.vertex(open.back().vertex).id == tok.node_id) {
                    // common case: the closing tag matches the latest open element
                    v = open.back().vertex;
                    pos = open.size() - 1;
                } else {
                    // overlap close: scan the open list (bounded by nesting depth)
                    pos = kClosed;
                    for (std::size_t i = open.size(); i-- > 0;) {
                        if (g.vertex(open[i].vertex).id == tok.node_id) {
                            pos = i;
                            break;
                        }
                    }
                    if (pos == kClosed) fail();  // end before start, or duplicate end
                    v = open[pos].vertex;
                }
                g.vertex_mut(v).end = tok.ordinal;
                if (pos + 1 != open.size()) {
                    // n overlaps every node opened after it
                    detail::OpenEntry& n = open[pos];
                    if (n.parent == TgsaGraph::npos) {
                        fail();  // root closed while children remain open
                    }
                    detail::OpenEntry& x = open[pos + 1];
                    g.remove_arc(n.vertex, ArcLabel::PC, x.vertex);
                    g.add_arc(n.parent, ArcLabel::PC, x.vertex);
                    record({ConstructEvent::Kind::Reparent, g.vertex(x.vertex).id,
                            g.vertex(n.parent).id, g.vertex(n.vertex).id, {}});
                    x.parent = n.parent;
                    for (std::size_t i = pos + 1; i < open.size(); ++i) {
                        g.add_arc(n.vertex, ArcLabel::O, open[i].vertex);
                        record({ConstructEvent::Kind::OverlapArc, g.vertex(n.vertex).id,
                                g.vertex(open[i].vertex).id, {}, {}});
                        add_parent_child_relation(pos, i);
                    }
                }
                open_slot[v] = kClosed;
                open.erase(open.begin() + static_cast<std::ptrdiff_t>(pos));
                for (std::size_t i = pos; i < open.size(); ++i) {
                    open_slot[open[i].vertex] = i;
                }
                record({ConstructEvent::Kind::Close, tok.node_id, {}, {}, {}});
                break;
            }
        }
    }
    if (!open.empty()) fail();  // unclosed nodes

    // Duplicate node_id check, deferred so the hot loop never hashes ids.
    // Sorted 64-bit hashes clear the common case; only a repeated hash
    // (true duplicate, or a rare collision) pays for the exact string check.
    {
        std::vector<std::uint64_t> hashes;
        hashes.reserve(g.vertex_count());
        for (Index i = 0; i < static_cast<Index>(g.vertex_count()); ++i) {
            if (g.vertex(i).kind == VertexKind::Element) {
                hashes.push_back(fnv1a(g.vertex(i).id));
            }
        }
        std::sort(hashes.begin(), hashes.end());
        if (std::adjacent_find(hashes.begin(), hashes.end()) != hashes.end()) {
            std::unordered_set<std::string> ids;
            ids.reserve(hashes.size());
            for (Index i = 0; i < static_cast<Index>(g.vertex_count()); ++i) {
                if (g.vertex(i).kind == VertexKind::Element &&
                    !ids.insert(g.vertex(i).id).second) {
                    fail();  // duplicate node_id
                }
            }
        }
    }
    g.set_root(0);
    return g;
}

}  // namespace tgsa
