#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tgsa/common.hpp"
#include "tgsa/token.hpp"

namespace tgsa {

enum class Format { Milestone, Nested };

/// Tokenize failure with the byte offset of the offending input.
struct TokenizeError : ParseError {
    std::size_t offset;
    TokenizeError(const std::string& msg, std::size_t off)
        : ParseError(msg + " at offset " + std::to_string(off)), offset(off) {}
};

namespace detail {

inline bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
}

inline bool is_blank(std::string_view s) {
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// Reads a [A-Za-z0-9_.-]+ run starting at i; empty result means failure.
inline std::string_view read_name(std::string_view text, std::size_t& i) {
    std::size_t begin = i;
    while (i < text.size() && is_name_char(text[i])) ++i;
    return text.substr(begin, i - begin);
}

inline void expect(std::string_view text, std::size_t& i, std::string_view lit,
                   std::size_t tag_offset) {
    if (text.substr(i, lit.size()) != lit) {
        throw TokenizeError("malformed tag syntax", tag_offset);
    }
    i += lit.size();
}

}  // namespace detail

/// Splits an in-line annotated document into start tags, end tags and
/// maximal text runs, assigning consecutive 1-based ordinals.
///
/// Milestone grammar: <name sID="id"/> opens node id, <name eID="id"/>
/// closes it. Nested grammar: <name> / </name>, matched by a stack and
/// given synthetic node ids n1, n2, ... in start order.
inline TokenStream tokenize(std::string_view input_text, Format format,
                            bool keep_whitespace = false) {
    TokenStream stream;
    stream.source_digest = digest_of(input_text);
    Ordinal next_ordinal = 1;

    auto flush_text = [&](std::size_t begin, std::size_t end) {
        if (begin >= end) return;
        std::string_view run = input_text.substr(begin, end - begin);
        if (!keep_whitespace && detail::is_blank(run)) return;
        stream.tokens.push_back(Token::text(std::string(run), next_ordinal++));
    };

    // milestone state: node id -> element name, for eID matching
    std::unordered_map<std::string, std::string> open_names;
    // nested state: stack of (name, synthetic id)
    std::vector<std::pair<std::string, std::string>> nest_stack;
    std::size_t synthetic = 0;

    std::size_t i = 0;
    std::size_t text_begin = 0;
    while (i < input_text.size()) {
        if (input_text[i] != '<') {
            ++i;
            continue;
        }
        flush_text(text_begin, i);
        const std::size_t tag_offset = i;
        ++i;  // consume '<'
        if (format == Format::Nested && i < input_text.size() && input_text[i] == '/') {
            ++i;
            std::string name(detail::read_name(input_text, i));
            if (name.empty()) throw TokenizeError("malformed tag syntax", tag_offset);
            detail::expect(input_text, i, ">", tag_offset);
            if (nest_stack.empty()) {
                throw TokenizeError("end tag '" + name + "' with no open element", tag_offset);
            }
            if (nest_stack.back().first != name) {
                throw TokenizeError("end tag '" + name + "' does not match open element '" +
                                        nest_stack.back().first + "'",
                                    tag_offset);
            }
            stream.tokens.push_back(
                Token::end(name, nest_stack.back().second, next_ordinal++));
            nest_stack.pop_back();
        } else {
            std::string name(detail::read_name(input_text, i));
            if (name.empty()) throw TokenizeError("malformed tag syntax", tag_offset);
            if (format == Format::Nested) {
                detail::expect(input_text, i, ">", tag_offset);
                std::string id = "n" + std::to_string(++synthetic);
                nest_stack.emplace_back(name, id);
                stream.tokens.push_back(Token::start(name, id, next_ordinal++));
            } else {
                detail::expect(input_text, i, " ", tag_offset);
                bool is_start;
                if (input_text.substr(i, 5) == "sID=\"") {
                    is_start = true;
                } else if (input_text.substr(i, 5) == "eID=\"") {
                    is_start = false;
                } else {
                    throw TokenizeError("malformed tag syntax", tag_offset);
                }
                i += 5;
                std::string id(detail::read_name(input_text, i));
                if (id.empty()) throw TokenizeError("malformed tag syntax", tag_offset);
                detail::expect(input_text, i, "\"/>", tag_offset);
                if (is_start) {
                    open_names[id] = name;
                    stream.tokens.push_back(Token::start(name, id, next_ordinal++));
                } else {
                    auto it = open_names.find(id);
                    if (it == open_names.end()) {
                        throw TokenizeError("eID '" + id + "' with no prior matching sID",
                                            tag_offset);
                    }
                    if (it->second != name) {
                        throw TokenizeError("eID name '" + name + "' does not match sID name '" +
                                                it->second + "' for node '" + id + "'",
                                            tag_offset);
                    }
                    stream.tokens.push_back(Token::end(name, id, next_ordinal++));
                }
            }
        }
        text_begin = i;
    }
    flush_text(text_begin, input_text.size());
    return stream;
}

/// Renders a stream back to milestone markup. tokenize(to_milestone(s))
/// reproduces s token for token whenever text runs are non-blank and
/// free of '<'.
inline std::string to_milestone(const TokenStream& stream) {
    std::string out;
    for (const auto& t : stream.tokens) {
        switch (t.kind) {
            case TokenKind::StartTag:
                out += "<" + t.name + " sID=\"" + t.node_id + "\"/>";
                break;
            case TokenKind::EndTag:
                out += "<" + t.name + " eID=\"" + t.node_id + "\"/>";
                break;
            case TokenKind::Text:
                out += t.content;
                break;
        }
    }
    return out;
}

}  // namespace tgsa
