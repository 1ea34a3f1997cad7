#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tgsa/graph.hpp"
#include "tgsa/token.hpp"

namespace tgsa {

/// Pre-post entry of one element: the ordinals of its start and end tags
/// plus the start ordinals of its parents (ascending). Start ordinals are
/// unique per document, so a parent start fully identifies the parent.
struct ElementEntry {
    std::string name;
    Ordinal start = 0;
    Ordinal end = 0;
    std::vector<Ordinal> parents;

    friend bool operator==(const ElementEntry&, const ElementEntry&) = default;
};

struct ElementIndex {
    std::map<std::string, std::vector<ElementEntry>> by_name;  // entries sorted by start
    std::string digest;

    std::size_t entry_count() const {
        std::size_t n = 0;
        for (const auto& [_, v] : by_name) n += v.size();
        return n;
    }
};

struct TextIndex {
    std::map<std::string, std::vector<Ordinal>> postings;  // term -> ascending ordinals
    std::string digest;
};

enum class OverlapRule {
    Interleaving,  // a.start < b.start < a.end < b.end
    PaperLiteral,  // a.start < b.start AND a.end < b.end (also true for disjoint spans)
};

inline bool overlaps(const ElementEntry& a, const ElementEntry& b,
                     OverlapRule rule = OverlapRule::Interleaving) {
    if (rule == OverlapRule::PaperLiteral) {
        return a.start < b.start && a.end < b.end;
    }
    return a.start < b.start && b.start < a.end && a.end < b.end;
}

inline bool is_ancestor(const ElementEntry& a, const ElementEntry& b) {
    return a.start < b.start && b.end < a.end;
}

inline bool is_parent(const ElementEntry& a, const ElementEntry& b) {
    return std::binary_search(b.parents.begin(), b.parents.end(), a.start);
}

namespace detail {

// Term rule: split text content on whitespace, case-folded.
template <typename Fn>
void for_each_term(std::string_view content, Fn&& fn) {
    std::string term;
    auto flush = [&] {
        if (!term.empty()) {
            fn(term);
            term.clear();
        }
    };
    for (char c : content) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            term += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
    }
    flush();
}

}  // namespace detail

/// Builds the element and text inverted indexes from a stream and its
/// constructed graph. The two must come from the same document.
inline std::pair<ElementIndex, TextIndex> build_indexes(const TokenStream& stream,
                                                        const TgsaGraph& graph) {
    if (stream.source_digest != graph.source_digest) {
        throw Error("digest mismatch: stream " + stream.source_digest + " vs graph " +
                    graph.source_digest);
    }
    ElementIndex elements;
    elements.digest = stream.source_digest;
    for (TgsaGraph::Index i : graph.vertices_by_start()) {
        const Vertex& v = graph.vertex(i);
        if (v.kind != VertexKind::Element) continue;
        ElementEntry entry{v.name, v.start, v.end, {}};
        for (TgsaGraph::Index p : graph.parents(i)) {
            entry.parents.push_back(graph.vertex(p).start);
        }
        std::sort(entry.parents.begin(), entry.parents.end());
        elements.by_name[v.name].push_back(std::move(entry));
    }
    // vertices_by_start is already ascending, so per-name lists stay sorted

    TextIndex text;
    text.digest = stream.source_digest;
    for (const Token& t : stream.tokens) {
        if (t.kind != TokenKind::Text) continue;
        detail::for_each_term(t.content, [&](const std::string& term) {
            auto& list = text.postings[term];
            if (list.empty() || list.back() != t.ordinal) list.push_back(t.ordinal);
        });
    }
    return {std::move(elements), std::move(text)};
}

// ---- query operations ----

inline const std::vector<ElementEntry>& elements_named(const ElementIndex& index,
                                                       const std::string& name) {
    static const std::vector<ElementEntry> empty;
    auto it = index.by_name.find(name);
    return it == index.by_name.end() ? empty : it->second;
}

inline std::vector<Ordinal> term_positions(const TextIndex& index, std::string_view term) {
    std::string folded;
    detail::for_each_term(term, [&](const std::string& t) {
        if (folded.empty()) folded = t;
    });
    auto it = index.postings.find(folded);
    return it == index.postings.end() ? std::vector<Ordinal>{} : it->second;
}

/// All entries whose interval strictly contains the given ordinal.
inline std::vector<ElementEntry> elements_containing(const ElementIndex& index, Ordinal ord) {
    std::vector<ElementEntry> out;
    for (const auto& [_, entries] : index.by_name) {
        for (const ElementEntry& e : entries) {
            if (e.start < ord && ord < e.end) out.push_back(e);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ElementEntry& a, const ElementEntry& b) { return a.start < b.start; });
    return out;
}

/// Pairs (a, b) with a named name_a, b named name_b and the two spans
/// interleaving in either direction. Sorted by (a.start, b.start).
inline std::vector<std::pair<ElementEntry, ElementEntry>> overlapping_pairs(
    const ElementIndex& index, const std::string& name_a, const std::string& name_b,
    OverlapRule rule = OverlapRule::Interleaving) {
    std::vector<std::pair<ElementEntry, ElementEntry>> out;
    for (const ElementEntry& a : elements_named(index, name_a)) {
        for (const ElementEntry& b : elements_named(index, name_b)) {
            if (name_a == name_b && a.start >= b.start) continue;  // one pair per unordered pair
            if (overlaps(a, b, rule) || overlaps(b, a, rule)) out.emplace_back(a, b);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::tie(x.first.start, x.second.start) < std::tie(y.first.start, y.second.start);
    });
    return out;
}

/// Entries named name_a that overlap no entry named name_b.
inline std::vector<ElementEntry> exclusive_elements(const ElementIndex& index,
                                                    const std::string& name_a,
                                                    const std::string& name_b,
                                                    OverlapRule rule = OverlapRule::Interleaving) {
    std::vector<ElementEntry> out;
    for (const ElementEntry& a : elements_named(index, name_a)) {
        bool clean = true;
        for (const ElementEntry& b : elements_named(index, name_b)) {
            if (a == b) continue;
            if (overlaps(a, b, rule) || overlaps(b, a, rule)) {
                clean = false;
                break;
            }
        }
        if (clean) out.push_back(a);
    }
    std::sort(out.begin(), out.end(),
              [](const ElementEntry& a, const ElementEntry& b) { return a.start < b.start; });
    return out;
}

// ---- persistence ----

/// Single index file holding both inverted lists. Header carries the
/// document digest and record counts; element records sorted by
/// (name, start), text records by term. Byte-deterministic.
inline std::string serialize_indexes(const ElementIndex& elements, const TextIndex& text) {
    if (elements.digest != text.digest) {
        throw Error("digest mismatch between element and text index");
    }
    std::ostringstream os;
    os << "tgsa-index\t" << elements.digest << "\t" << elements.entry_count() << "\t"
       << text.postings.size() << "\n";
    for (const auto& [name, entries] : elements.by_name) {
        for (const ElementEntry& e : entries) {
            os << "E\t" << detail::escape_field(name) << "\t" << e.start << "\t" << e.end
               << "\t";
            for (std::size_t i = 0; i < e.parents.size(); ++i) {
                if (i) os << ",";
                os << e.parents[i];
            }
            os << "\n";
        }
    }
    for (const auto& [term, positions] : text.postings) {
        os << "T\t" << detail::escape_field(term) << "\t";
        for (std::size_t i = 0; i < positions.size(); ++i) {
            if (i) os << ",";
            os << positions[i];
        }
        os << "\n";
    }
    return os.str();
}

inline std::pair<ElementIndex, TextIndex> parse_indexes(std::string_view data) {
    std::istringstream is{std::string(data)};
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty index file");
    auto header = detail::split_tabs(line);
    if (header.size() != 4 || header[0] != "tgsa-index") {
        throw ParseError("bad index header");
    }
    ElementIndex elements;
    TextIndex text;
    elements.digest = text.digest = header[1];
    std::size_t n_entries = detail::parse_ordinal(header[2]);
    std::size_t n_terms = detail::parse_ordinal(header[3]);

    auto parse_ordinal_list = [](const std::string& s) {
        std::vector<Ordinal> out;
        if (s.empty()) return out;
        std::size_t begin = 0;
        for (std::size_t i = 0; i <= s.size(); ++i) {
            if (i == s.size() || s[i] == ',') {
                out.push_back(detail::parse_ordinal(s.substr(begin, i - begin)));
                begin = i + 1;
            }
        }
        return out;
    };

    std::size_t seen_e = 0, seen_t = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto f = detail::split_tabs(line);
        if (f[0] == "E") {
            if (f.size() != 5) throw ParseError("bad element record");
            ElementEntry e;
            e.name = detail::unescape_field(f[1]);
            e.start = detail::parse_ordinal(f[2]);
            e.end = detail::parse_ordinal(f[3]);
            e.parents = parse_ordinal_list(f[4]);
            elements.by_name[e.name].push_back(std::move(e));
            ++seen_e;
        } else if (f[0] == "T") {
            if (f.size() != 3) throw ParseError("bad text record");
            text.postings[detail::unescape_field(f[1])] = parse_ordinal_list(f[2]);
            ++seen_t;
        } else {
            throw ParseError("unknown record '" + f[0] + "'");
        }
    }
    if (seen_e != n_entries || seen_t != n_terms) {
        throw ParseError("index file truncated: header promises " + std::to_string(n_entries) +
                         " elements / " + std::to_string(n_terms) + " terms, found " +
                         std::to_string(seen_e) + " / " + std::to_string(seen_t));
    }
    return {std::move(elements), std::move(text)};
}

inline void save_indexes(const ElementIndex& elements, const TextIndex& text,
                         const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    std::string data = serialize_indexes(elements, text);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw IoError("write failed for '" + path + "'");
}

inline std::pair<ElementIndex, TextIndex> load_indexes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_indexes(buf.str());
}

}  // namespace tgsa
