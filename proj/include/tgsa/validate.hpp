#pragma once

#include <string>
#include <vector>

#include "tgsa/graph.hpp"
#include "tgsa/token.hpp"

namespace tgsa {

namespace detail {

// Span containment on pre-post ordinals. Works for text vertices too,
// where start == end collapses both comparisons onto the position.
inline bool span_contains(const Vertex& a, const Vertex& b) {
    if (a.kind != VertexKind::Element) return false;
    return a.start < b.start && b.end < a.end;
}

inline bool span_overlaps(const Vertex& a, const Vertex& b) {
    if (a.kind != VertexKind::Element || b.kind != VertexKind::Element) return false;
    return a.start < b.start && b.start < a.end && a.end < b.end;
}

}  // namespace detail

/// Checks a graph against the TGSA definition: connected, acyclic, a
/// unique root, PC arcs matching immediate span containment, O arcs
/// matching span interleaving, and no PC arc shadowed by a longer path.
inline ValidationReport validate_tgsa(const TgsaGraph& g) {
    using Index = TgsaGraph::Index;
    ValidationReport report;
    const std::size_t n = g.vertex_count();
    if (n == 0) {
        report.add(0, "empty graph");
        return report;
    }

    // acyclicity: every arc must advance the start ordinal
    for (const Arc& a : g.arcs_sorted()) {
        if (g.vertex(g.require(a.from)).start >= g.vertex(g.require(a.to)).start) {
            report.add(g.vertex(g.require(a.from)).start,
                       "arc '" + a.from + "' -> '" + a.to + "' does not follow start order");
        }
    }

    // unique zero-in-degree root
    Index root = TgsaGraph::npos;
    for (Index i = 0; i < n; ++i) {
        if (g.in_degree(i) == 0) {
            if (root == TgsaGraph::npos) {
                root = i;
            } else {
                report.add(g.vertex(i).start,
                           "second root '" + g.vertex(i).id + "' with no incoming arc");
            }
        }
    }
    if (root == TgsaGraph::npos) {
        report.add(0, "no root: every vertex has an incoming arc");
        return report;
    }

    // connectivity: undirected reachability from the root
    {
        std::vector<bool> seen(n, false);
        std::vector<Index> stack{root};
        seen[root] = true;
        while (!stack.empty()) {
            Index v = stack.back();
            stack.pop_back();
            auto visit = [&](const std::vector<Index>& adj) {
                for (Index w : adj) {
                    if (!seen[w]) {
                        seen[w] = true;
                        stack.push_back(w);
                    }
                }
            };
            visit(g.children(v));
            visit(g.parents(v));
            visit(g.overlap_successors(v));
            visit(g.overlap_predecessors(v));
        }
        for (Index i = 0; i < n; ++i) {
            if (!seen[i]) {
                report.add(g.vertex(i).start,
                           "vertex '" + g.vertex(i).id + "' not connected to the root");
            }
        }
    }

    const std::vector<Index> by_start = g.vertices_by_start();

    // PC arcs <=> immediate span containment
    for (Index b : by_start) {
        if (b == root) continue;
        std::vector<Index> containers;
        for (Index a : by_start) {
            if (a != b && detail::span_contains(g.vertex(a), g.vertex(b))) {
                containers.push_back(a);
            }
        }
        for (Index a : containers) {
            bool immediate = true;
            for (Index c : containers) {
                if (c != a && detail::span_contains(g.vertex(a), g.vertex(c))) {
                    immediate = false;
                    break;
                }
            }
            if (immediate != g.has_arc(a, ArcLabel::PC, b)) {
                report.add(g.vertex(b).start,
                           immediate ? "missing PC arc '" + g.vertex(a).id + "' -> '" +
                                           g.vertex(b).id + "' (immediate containment)"
                                     : "PC arc '" + g.vertex(a).id + "' -> '" +
                                           g.vertex(b).id + "' without immediate containment");
            }
        }
        // a PC arc from a non-container is always wrong
        for (Index a : g.parents(b)) {
            if (!detail::span_contains(g.vertex(a), g.vertex(b))) {
                report.add(g.vertex(b).start, "PC arc '" + g.vertex(a).id + "' -> '" +
                                                  g.vertex(b).id + "' without containment");
            }
        }
    }

    // O arcs <=> span interleaving in document order
    for (Index a : by_start) {
        for (Index b : by_start) {
            if (a == b) continue;
            bool expect = detail::span_overlaps(g.vertex(a), g.vertex(b));
            if (expect != g.has_arc(a, ArcLabel::O, b)) {
                report.add(g.vertex(b).start,
                           expect ? "missing O arc '" + g.vertex(a).id + "' -> '" +
                                        g.vertex(b).id + "'"
                                  : "O arc '" + g.vertex(a).id + "' -> '" + g.vertex(b).id +
                                        "' without span interleaving");
            }
        }
    }

    // transitive reduction: no PC arc may be implied by a longer PC path
    for (Index a : by_start) {
        for (Index b : g.children(a)) {
            for (Index w : g.children(a)) {
                if (w != b && g.path_exists(w, b)) {
                    report.add(g.vertex(b).start,
                               "PC arc '" + g.vertex(a).id + "' -> '" + g.vertex(b).id +
                                   "' shadowed by an indirect path through '" +
                                   g.vertex(w).id + "'");
                    break;
                }
            }
        }
    }

    return report;
}

}  // namespace tgsa
