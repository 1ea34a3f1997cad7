#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tgsa {

// 1-based global token position within a document.
using Ordinal = std::uint32_t;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct UnknownIdError : Error {
    using Error::Error;
};

// FNV-1a 64-bit hash.
inline std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// FNV-1a 64-bit content digest, rendered as 16 hex digits.
inline std::string digest_of(std::string_view text) {
    std::uint64_t h = fnv1a(text);
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

namespace detail {

// Escapes tab, newline, CR and backslash so a field can live in a
// tab-separated, line-delimited record.
inline std::string escape_field(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '\t': out += "\\t"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string unescape_field(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '\\') {
            out += s[i];
            continue;
        }
        if (i + 1 >= s.size()) throw ParseError("dangling escape in field");
        switch (s[++i]) {
            case '\\': out += '\\'; break;
            case 't': out += '\t'; break;
            case 'n': out += '\n'; break;
            case 'r': out += '\r'; break;
            default: throw ParseError("unknown escape in field");
        }
    }
    return out;
}

}  // namespace detail

}  // namespace tgsa
