#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tgsa/construct.hpp"
#include "tgsa/graph.hpp"
#include "tgsa/token.hpp"
#include "tgsa/tokenize.hpp"

// Brute-force ground truth for the construction algorithm. Everything in
// here favors clarity over speed; it is the trusted side of every check
// and is never optimized.

namespace tgsa::oracle {

struct Span {
    std::string id;
    std::string name;  // element name, or text content
    Ordinal start = 0;
    Ordinal end = 0;
    bool is_text = false;
};

struct SpanTable {
    std::vector<Span> items;  // sorted by start
};

/// Reads every node's (start, end) interval straight off the token
/// stream; text tokens become single-position spans.
inline SpanTable spans(const TokenStream& stream) {
    SpanTable table;
    std::unordered_map<std::string, std::size_t> open;
    for (const Token& t : stream.tokens) {
        switch (t.kind) {
            case TokenKind::StartTag:
                open[t.node_id] = table.items.size();
                table.items.push_back({t.node_id, t.name, t.ordinal, 0, false});
                break;
            case TokenKind::EndTag:
                table.items[open.at(t.node_id)].end = t.ordinal;
                break;
            case TokenKind::Text:
                table.items.push_back(
                    {detail::text_vertex_id(t.ordinal), t.content, t.ordinal, t.ordinal, true});
                break;
        }
    }
    std::sort(table.items.begin(), table.items.end(),
              [](const Span& a, const Span& b) { return a.start < b.start; });
    return table;
}

inline bool contains(const Span& a, const Span& b) {
    if (a.is_text) return false;
    return a.start < b.start && b.end < a.end;
}

inline bool interleaves(const Span& a, const Span& b) {
    if (a.is_text || b.is_text) return false;
    return a.start < b.start && b.start < a.end && a.end < b.end;
}

struct ReferenceRelations {
    // all pairs are (earlier id, later id) by start ordinal
    std::vector<std::pair<std::string, std::string>> overlap_pairs;
    std::vector<std::pair<std::string, std::string>> containment_pairs;
    std::vector<std::pair<std::string, std::string>> immediate_containment_pairs;
};

/// Exhaustive interval scans over the span table.
inline ReferenceRelations reference_relations(const SpanTable& table) {
    ReferenceRelations rel;
    const auto& s = table.items;
    for (const Span& a : s) {
        for (const Span& b : s) {
            if (&a == &b) continue;
            if (interleaves(a, b)) rel.overlap_pairs.emplace_back(a.id, b.id);
            if (contains(a, b)) {
                rel.containment_pairs.emplace_back(a.id, b.id);
                bool immediate = true;
                for (const Span& c : s) {
                    if (&c != &a && &c != &b && contains(a, c) && contains(c, b)) {
                        immediate = false;
                        break;
                    }
                }
                if (immediate) rel.immediate_containment_pairs.emplace_back(a.id, b.id);
            }
        }
    }
    return rel;
}

/// Builds the graph the interval semantics demand: PC arcs are immediate
/// containment, O arcs are interleaving pairs.
inline TgsaGraph reference_graph(const SpanTable& table) {
    TgsaGraph g;
    for (const Span& sp : table.items) {
        g.add_vertex(Vertex{sp.id, sp.is_text ? VertexKind::TextNode : VertexKind::Element,
                            sp.name, sp.start, sp.end});
    }
    ReferenceRelations rel = reference_relations(table);
    for (const auto& [a, b] : rel.immediate_containment_pairs) {
        g.add_arc(g.require(a), ArcLabel::PC, g.require(b));
    }
    for (const auto& [a, b] : rel.overlap_pairs) {
        g.add_arc(g.require(a), ArcLabel::O, g.require(b));
    }
    g.set_root(0);  // items sorted by start; the root span starts first
    return g;
}

struct GenParams {
    std::uint64_t seed = 1;
    std::size_t n_elements = 10;
    double overlap_probability = 0.0;
    std::size_t max_depth = 16;
    std::vector<std::string> name_alphabet = {"a", "b", "c", "d", "e"};
    double text_probability = 0.3;
};

namespace gen_detail {

// Hand-rolled draws so streams are identical across standard libraries.
inline double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
inline std::size_t below(std::mt19937_64& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
}

inline const std::vector<std::string>& vocab() {
    static const std::vector<std::string> words = {
        "lorem", "ipsum", "dolor", "sit",    "amet",  "tempor",
        "magna", "aliqua", "labore", "umbra", "flux",  "veritas"};
    return words;
}

}  // namespace gen_detail

/// Deterministic random overlap-only document: a single root, every
/// element closed, and with the given probability a close targets a
/// non-latest open node, creating an interleave. overlap_probability 0
/// yields pure nesting.
inline TokenStream random_document(const GenParams& p) {
    if (p.n_elements < 1) throw std::invalid_argument("n_elements must be >= 1");
    if (p.max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");
    if (p.max_depth < 2 && p.n_elements > 1) {
        throw std::invalid_argument("max_depth must be >= 2 for more than one element");
    }
    if (p.overlap_probability < 0.0 || p.overlap_probability > 1.0) {
        throw std::invalid_argument("overlap_probability must be in [0, 1]");
    }
    if (p.text_probability < 0.0 || p.text_probability > 1.0) {
        throw std::invalid_argument("text_probability must be in [0, 1]");
    }
    if (p.name_alphabet.empty()) throw std::invalid_argument("name_alphabet must be non-empty");

    std::mt19937_64 rng(p.seed);
    std::vector<Token> draft;
    Ordinal ord = 1;
    std::size_t created = 0;

    struct OpenElem {
        std::string name, id;
    };
    std::vector<OpenElem> open;

    auto emit_open = [&] {
        ++created;
        OpenElem e{p.name_alphabet[gen_detail::below(rng, p.name_alphabet.size())],
                   "n" + std::to_string(created)};
        draft.push_back(Token::start(e.name, e.id, ord++));
        open.push_back(std::move(e));
    };
    auto emit_text = [&] {
        std::size_t n_words = 1 + gen_detail::below(rng, 3);
        std::string content;
        for (std::size_t i = 0; i < n_words; ++i) {
            if (i) content += ' ';
            content += gen_detail::vocab()[gen_detail::below(rng, gen_detail::vocab().size())];
        }
        draft.push_back(Token::text(std::move(content), ord++));
    };

    emit_open();  // root
    while (created < p.n_elements || open.size() > 1) {
        if (gen_detail::unit(rng) < p.text_probability) emit_text();
        bool can_open = created < p.n_elements && open.size() < p.max_depth;
        bool can_close = open.size() > 1;
        bool do_open = can_open && (!can_close || gen_detail::unit(rng) < 0.5);
        if (do_open) {
            emit_open();
        } else if (can_close) {
            std::size_t victim = open.size() - 1;
            if (open.size() > 2 && gen_detail::unit(rng) < p.overlap_probability) {
                victim = 1 + gen_detail::below(rng, open.size() - 2);  // non-root, non-latest
            }
            draft.push_back(Token::end(open[victim].name, open[victim].id, ord++));
            open.erase(open.begin() + static_cast<std::ptrdiff_t>(victim));
        }
    }
    draft.push_back(Token::end(open[0].name, open[0].id, ord++));

    // round through the milestone form so the stream matches what a
    // written-out document would tokenize to, digest included
    TokenStream tmp;
    tmp.tokens = std::move(draft);
    return tokenize(to_milestone(tmp), Format::Milestone);
}

}  // namespace tgsa::oracle
