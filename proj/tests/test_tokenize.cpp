#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "tgsa/token.hpp"
#include "tgsa/tokenize.hpp"

using namespace tgsa;

TEST_CASE("milestone tags transcribe directly") {
    auto s = tokenize("<r sID=\"r\"/><a sID=\"a\"/>hi<a eID=\"a\"/><r eID=\"r\"/>",
                      Format::Milestone);
    REQUIRE(s.tokens.size() == 5);
    CHECK(s.tokens[0].kind == TokenKind::StartTag);
    CHECK(s.tokens[0].name == "r");
    CHECK(s.tokens[0].node_id == "r");
    CHECK(s.tokens[0].ordinal == 1);
    CHECK(s.tokens[1].node_id == "a");
    CHECK(s.tokens[2].kind == TokenKind::Text);
    CHECK(s.tokens[2].content == "hi");
    CHECK(s.tokens[2].ordinal == 3);
    CHECK(s.tokens[3].kind == TokenKind::EndTag);
    CHECK(s.tokens[3].node_id == "a");
    CHECK(s.tokens[4].node_id == "r");
    CHECK(s.tokens[4].ordinal == 5);
}

TEST_CASE("DOC-2 tokenizes to nine tokens with the expected spans") {
    auto s = tokenize(fixtures::kDoc2, Format::Milestone);
    REQUIRE(s.tokens.size() == 9);
    auto span = [&](const std::string& id) {
        Ordinal start = 0, end = 0;
        for (const auto& t : s.tokens) {
            if (t.node_id == id) {
                (t.kind == TokenKind::StartTag ? start : end) = t.ordinal;
            }
        }
        return std::pair{start, end};
    };
    CHECK(span("a") == std::pair<Ordinal, Ordinal>{2, 6});
    CHECK(span("b") == std::pair<Ordinal, Ordinal>{4, 8});
    CHECK(span("r") == std::pair<Ordinal, Ordinal>{1, 9});
}

TEST_CASE("nested format matches by stack and assigns synthetic ids") {
    auto s = tokenize("<r><a></a></r>", Format::Nested);
    REQUIRE(s.tokens.size() == 4);
    CHECK(s.tokens[0].name == "r");
    CHECK(s.tokens[0].node_id == "n1");
    CHECK(s.tokens[1].node_id == "n2");
    CHECK(s.tokens[2].kind == TokenKind::EndTag);
    CHECK(s.tokens[2].node_id == "n2");
    CHECK(s.tokens[3].node_id == "n1");
}

TEST_CASE("whitespace-only runs are dropped unless keep_whitespace") {
    auto dropped = tokenize("<r sID=\"r\"/>  \n  <r eID=\"r\"/>", Format::Milestone);
    CHECK(dropped.tokens.size() == 2);
    auto kept = tokenize("<r sID=\"r\"/>  \n  <r eID=\"r\"/>", Format::Milestone, true);
    REQUIRE(kept.tokens.size() == 3);
    CHECK(kept.tokens[1].content == "  \n  ");
}

TEST_CASE("tokenize rejects malformed input with a position") {
    CHECK_THROWS_AS(tokenize("<r sID=\"r\"/><broken<r eID=\"r\"/>", Format::Milestone),
                    TokenizeError);
    try {
        tokenize("xx<bad!>", Format::Milestone);
        FAIL("expected TokenizeError");
    } catch (const TokenizeError& e) {
        CHECK(e.offset == 2);
    }
    CHECK_THROWS_AS(tokenize("<r><a></b></r>", Format::Nested), TokenizeError);
    CHECK_THROWS_AS(tokenize("<r sID=\"r\"/><a eID=\"a\"/><r eID=\"r\"/>", Format::Milestone),
                    TokenizeError);  // eID with no prior sID
    CHECK_THROWS_AS(tokenize("<a sID=\"x\"/><b eID=\"x\"/>", Format::Milestone),
                    TokenizeError);  // name mismatch for the same node id
}

TEST_CASE("validate_stream accepts DOC-2") {
    auto s = tokenize(fixtures::kDoc2, Format::Milestone);
    CHECK(validate_stream(s).ok());
}

TEST_CASE("validate_stream reports unclosed nodes") {
    auto s = tokenize(fixtures::kDoc2, Format::Milestone);
    std::erase_if(s.tokens, [](const Token& t) {
        return t.kind == TokenKind::EndTag && t.node_id == "b";
    });
    for (Ordinal i = 0; i < s.tokens.size(); ++i) s.tokens[i].ordinal = i + 1;
    auto report = validate_stream(s);
    REQUIRE_FALSE(report.ok());
    CHECK(report.to_string().find("unclosed node 'b'") != std::string::npos);
}

TEST_CASE("validate_stream reports multiple roots") {
    auto s = tokenize("<a sID=\"a\"/><a eID=\"a\"/><b sID=\"b\"/><b eID=\"b\"/>",
                      Format::Milestone);
    auto report = validate_stream(s);
    REQUIRE_FALSE(report.ok());
    CHECK(report.to_string().find("multiple roots") != std::string::npos);
}

TEST_CASE("validate_stream reports empty streams and broken ordinals") {
    CHECK_FALSE(validate_stream(TokenStream{}).ok());

    auto s = tokenize(fixtures::kDoc2, Format::Milestone);
    s.tokens[3].ordinal = 42;
    CHECK_FALSE(validate_stream(s).ok());
}

TEST_CASE("tokenize is deterministic") {
    auto a = tokenize(fixtures::kFig2, Format::Milestone);
    auto b = tokenize(fixtures::kFig2, Format::Milestone);
    REQUIRE(a.tokens.size() == b.tokens.size());
    CHECK(a.source_digest == b.source_digest);
    for (std::size_t i = 0; i < a.tokens.size(); ++i) {
        CHECK(a.tokens[i].ordinal == b.tokens[i].ordinal);
        CHECK(a.tokens[i].node_id == b.tokens[i].node_id);
    }
}

TEST_CASE("start and end node ids balance on valid streams") {
    auto s = tokenize(fixtures::kFig2, Format::Milestone);
    std::multiset<std::string> starts, ends;
    for (const auto& t : s.tokens) {
        if (t.kind == TokenKind::StartTag) starts.insert(t.node_id);
        if (t.kind == TokenKind::EndTag) ends.insert(t.node_id);
    }
    CHECK(starts == ends);
}

TEST_CASE("nested input always validates with zero overlap") {
    auto s = tokenize("<r><a><b>x</b></a><c>y</c></r>", Format::Nested);
    CHECK(validate_stream(s).ok());
    // every end tag closes the most recently opened node
    std::vector<std::string> stack;
    for (const auto& t : s.tokens) {
        if (t.kind == TokenKind::StartTag) stack.push_back(t.node_id);
        if (t.kind == TokenKind::EndTag) {
            REQUIRE(stack.back() == t.node_id);
            stack.pop_back();
        }
    }
    CHECK(stack.empty());
}

TEST_CASE("to_milestone round-trips a stream") {
    auto s = tokenize(fixtures::kDoc3, Format::Milestone);
    CHECK(to_milestone(s) == fixtures::kDoc3);
}
