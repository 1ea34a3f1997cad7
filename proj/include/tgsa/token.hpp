#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tgsa/common.hpp"

namespace tgsa {

enum class TokenKind { StartTag, EndTag, Text };

/// One physical unit of an annotated document: a start tag, an end tag,
/// or a maximal run of text between tags.
struct Token {
    TokenKind kind;
    std::string name;     // element name (StartTag/EndTag)
    std::string node_id;  // document-unique node id (StartTag/EndTag)
    std::string content;  // raw text (Text)
    Ordinal ordinal = 0;  // 1-based global position

    static Token start(std::string name, std::string node_id, Ordinal ord) {
        return Token{TokenKind::StartTag, std::move(name), std::move(node_id), {}, ord};
    }
    static Token end(std::string name, std::string node_id, Ordinal ord) {
        return Token{TokenKind::EndTag, std::move(name), std::move(node_id), {}, ord};
    }
    static Token text(std::string content, Ordinal ord) {
        return Token{TokenKind::Text, {}, {}, std::move(content), ord};
    }
};

struct TokenStream {
    std::vector<Token> tokens;
    std::string source_digest;
};

struct Violation {
    Ordinal ordinal = 0;  // 0 when no single token is at fault
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    void add(Ordinal ord, std::string msg) { violations.push_back({ord, std::move(msg)}); }

    std::string to_string() const {
        if (ok()) return "ok";
        std::ostringstream os;
        for (const auto& v : violations) {
            os << "@" << v.ordinal << ": " << v.message << "\n";
        }
        return os.str();
    }
};

/// Checks the TokenStream invariants: consecutive ordinals, balanced
/// start/end tags, a single root spanning the whole stream.
inline ValidationReport validate_stream(const TokenStream& stream) {
    ValidationReport report;
    const auto& toks = stream.tokens;
    if (toks.empty()) {
        report.add(0, "empty stream");
        return report;
    }
    if (toks.front().kind != TokenKind::StartTag) {
        report.add(toks.front().ordinal, "first token is not a start tag");
    }

    struct NodeState {
        Ordinal start = 0;
        bool open = false;
        bool ended = false;
    };
    std::unordered_map<std::string, NodeState> nodes;
    nodes.reserve(toks.size() / 2 + 1);
    std::size_t open_count = 0;
    bool root_closed = false;
    Ordinal expected = 1;
    for (const auto& t : toks) {
        if (t.ordinal != expected) {
            report.add(t.ordinal, "ordinal out of sequence (expected " +
                                      std::to_string(expected) + ")");
        }
        ++expected;
        if (root_closed) {
            if (t.kind == TokenKind::StartTag) {
                report.add(t.ordinal, "multiple roots: second top-level element '" +
                                          t.node_id + "'");
            } else {
                report.add(t.ordinal, "token outside the root element");
            }
        }
        switch (t.kind) {
            case TokenKind::StartTag: {
                auto [it, inserted] = nodes.try_emplace(t.node_id, NodeState{t.ordinal, true});
                if (!inserted) {
                    report.add(t.ordinal, "duplicate node_id '" + t.node_id + "'");
                } else {
                    ++open_count;
                }
                break;
            }
            case TokenKind::EndTag: {
                auto it = nodes.find(t.node_id);
                if (it == nodes.end()) {
                    report.add(t.ordinal, "end tag before start tag for node '" +
                                              t.node_id + "'");
                } else if (it->second.ended) {
                    report.add(t.ordinal, "duplicate end tag for node '" + t.node_id + "'");
                } else {
                    it->second.ended = true;
                    it->second.open = false;
                    if (--open_count == 0 && !root_closed) root_closed = true;
                }
                break;
            }
            case TokenKind::Text:
                if (open_count == 0) {
                    report.add(t.ordinal, "text outside the root element");
                }
                break;
        }
    }
    for (const auto& [id, state] : nodes) {
        if (state.open) report.add(state.start, "unclosed node '" + id + "'");
    }
    return report;
}

}  // namespace tgsa
