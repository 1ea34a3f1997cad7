// Acceptance suite: runs every release criterion and prints one
// pass/fail line each. Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "tgsa/tgsa.hpp"

using namespace tgsa;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void verdict(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!pass) ++failures;
}

std::set<std::string> arc_triples(const TgsaGraph& g) {
    std::set<std::string> out;
    for (const Arc& a : g.arcs_sorted()) {
        out.insert(a.from + "|" + label_name(a.label) + "|" + a.to);
    }
    return out;
}

struct CorpusDoc {
    std::uint64_t seed;
    double overlap_probability;
    TokenStream stream;
    TgsaGraph graph;
    ConstructLog log;
};

// seeds 1..1000, up to 200 elements, overlap probability cycling over
// {0, 0.1, 0.3, 0.5}
std::vector<CorpusDoc> make_corpus() {
    static const double probs[] = {0.0, 0.1, 0.3, 0.5};
    std::vector<CorpusDoc> docs;
    docs.reserve(1000);
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        oracle::GenParams p;
        p.seed = seed;
        p.n_elements = 1 + seed % 200;
        p.overlap_probability = probs[seed % 4];
        CorpusDoc doc;
        doc.seed = seed;
        doc.overlap_probability = p.overlap_probability;
        doc.stream = oracle::random_document(p);
        doc.graph = construct(doc.stream, &doc.log);
        docs.push_back(std::move(doc));
    }
    return docs;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main() {
    auto corpus_t0 = Clock::now();
    std::vector<CorpusDoc> corpus = make_corpus();

    // 1. oracle equivalence, exact arc sets, all 1000 documents, < 60 s
    {
        std::size_t mismatches = 0;
        for (const CorpusDoc& doc : corpus) {
            auto reference = oracle::reference_graph(oracle::spans(doc.stream));
            if (arc_triples(doc.graph) != arc_triples(reference)) {
                ++mismatches;
                std::cerr << "  arc-set mismatch at seed " << doc.seed << "\n";
            }
        }
        double elapsed = seconds_since(corpus_t0);
        verdict(1, "oracle equivalence on 1000 generated documents",
                mismatches == 0 && elapsed < 60.0,
                std::to_string(mismatches) + " mismatches, " + std::to_string(elapsed) + " s");
    }

    // 2. validate_tgsa clean on every graph, including transitive reduction
    {
        std::size_t bad = 0;
        for (const CorpusDoc& doc : corpus) {
            auto report = validate_tgsa(doc.graph);
            if (!report.ok()) {
                ++bad;
                std::cerr << "  validation failure at seed " << doc.seed << ":\n"
                          << report.to_string();
            }
        }
        verdict(2, "definition validation on every constructed graph", bad == 0,
                std::to_string(bad) + " failing graphs");
    }

    // 3. predicate/graph agreement for all element pairs
    {
        std::size_t mismatches = 0;
        for (const CorpusDoc& doc : corpus) {
            auto [elems, text] = build_indexes(doc.stream, doc.graph);
            std::vector<std::pair<std::string, ElementEntry>> all;
            for (TgsaGraph::Index i : doc.graph.vertices_by_start()) {
                const Vertex& v = doc.graph.vertex(i);
                if (v.kind != VertexKind::Element) continue;
                ElementEntry e{v.name, v.start, v.end, {}};
                for (TgsaGraph::Index p : doc.graph.parents(i)) {
                    e.parents.push_back(doc.graph.vertex(p).start);
                }
                std::sort(e.parents.begin(), e.parents.end());
                all.emplace_back(v.id, std::move(e));
            }
            for (const auto& [ida, ea] : all) {
                for (const auto& [idb, eb] : all) {
                    if (ida == idb) continue;
                    if (overlaps(ea, eb) != doc.graph.has_arc(ida, ArcLabel::O, idb) ||
                        is_ancestor(ea, eb) != doc.graph.path_exists(ida, idb) ||
                        is_parent(ea, eb) != doc.graph.has_arc(ida, ArcLabel::PC, idb)) {
                        ++mismatches;
                    }
                }
            }
        }
        verdict(3, "predicate/graph agreement on all element pairs", mismatches == 0,
                std::to_string(mismatches) + " mismatches");
    }

    // 4. hierarchical specialization: zero overlap probability gives trees
    {
        std::size_t bad = 0;
        std::size_t checked = 0;
        for (const CorpusDoc& doc : corpus) {
            if (doc.overlap_probability != 0.0) continue;
            ++checked;
            for (TgsaGraph::Index i = 0; i < doc.graph.vertex_count(); ++i) {
                if (!doc.graph.overlap_successors(i).empty() ||
                    (i != doc.graph.root() && doc.graph.parents(i).size() != 1)) {
                    ++bad;
                    break;
                }
            }
        }
        verdict(4, "hierarchical documents construct to trees", bad == 0 && checked >= 200,
                std::to_string(checked) + " hierarchical documents, " + std::to_string(bad) +
                    " non-trees");
    }

    // 5. Lemma instrumentation: every overlap-assigned child is reachable
    //    from every open entry preceding the closing node
    {
        std::size_t violations = 0;
        std::size_t events = 0;
        for (const CorpusDoc& doc : corpus) {
            for (const ConstructEvent& ev : doc.log.events) {
                if (ev.kind != ConstructEvent::Kind::OverlapChild) continue;
                ++events;
                for (const std::string& precedent : ev.open_before) {
                    if (!doc.graph.path_exists(precedent, ev.other)) {
                        ++violations;
                        std::cerr << "  no path " << precedent << " -> " << ev.other
                                  << " at seed " << doc.seed << "\n";
                    }
                }
            }
        }
        verdict(5, "indirect path from every precedent at each overlap adoption",
                violations == 0 && events > 0,
                std::to_string(events) + " events, " + std::to_string(violations) +
                    " violations");
    }

    // 6. worked examples: DOC-2, DOC-3 and the d/f adoption fixture
    {
        auto doc2 = construct(tokenize(fixtures::kDoc2, Format::Milestone));
        bool ok = arc_triples(doc2) ==
                  std::set<std::string>{"r|PC|a", "r|PC|b", "a|PC|#t3", "a|PC|#t5",
                                        "b|PC|#t5", "b|PC|#t7", "a|O|b"};
        auto doc3 = construct(tokenize(fixtures::kDoc3, Format::Milestone));
        ok = ok && arc_triples(doc3) == std::set<std::string>{"r|PC|a", "r|PC|b", "r|PC|c",
                                                              "a|O|b", "b|O|c"};
        auto fig2 = construct(tokenize(fixtures::kFig2, Format::Milestone));
        ok = ok && fig2.has_arc("d", ArcLabel::PC, "#t9") &&
             !fig2.has_arc("d", ArcLabel::PC, "#t7") && fig2.path_exists("d", "#t7");
        verdict(6, "worked examples reproduce their exact arc sets", ok);
    }

    // 7. linear scaling on hierarchical input: 10x tokens within 15x time
    {
        auto timed_build = [](std::size_t n_elements) {
            oracle::GenParams p;
            p.seed = 42;
            p.n_elements = n_elements;
            p.overlap_probability = 0.0;
            p.text_probability = 0.0;
            p.max_depth = 64;
            auto stream = oracle::random_document(p);
            double best = 1e18;
            for (int run = 0; run < 3; ++run) {
                auto t0 = Clock::now();
                auto g = construct(stream);
                double t = seconds_since(t0);
                if (g.vertex_count() != n_elements) return std::pair{0.0, stream.tokens.size()};
                if (t < best) best = t;
            }
            return std::pair{best, stream.tokens.size()};
        };
        auto [t_small, tokens_small] = timed_build(50'000);    // 100k tokens
        auto [t_large, tokens_large] = timed_build(500'000);   // 1M tokens
        bool ok = t_small > 0.0 && t_large > 0.0 && t_large <= 15.0 * t_small &&
                  t_small < 10.0 && t_large < 10.0 && tokens_small == 100'000 &&
                  tokens_large == 1'000'000;
        char detail[128];
        std::snprintf(detail, sizeof detail, "%.1f ms for 100k tokens, %.1f ms for 1M, ratio %.2f",
                      t_small * 1e3, t_large * 1e3, t_large / t_small);
        verdict(7, "hierarchical construction scales linearly", ok, detail);
    }

    // 8. index save/load byte-stable and query-equivalent on 100 documents
    {
        bool ok = true;
        const std::string path = "acceptance_index.tmp";
        for (std::uint64_t seed = 2001; seed <= 2100 && ok; ++seed) {
            oracle::GenParams p;
            p.seed = seed;
            p.n_elements = 1 + seed % 60;
            p.overlap_probability = 0.3;
            auto stream = oracle::random_document(p);
            auto graph = construct(stream);
            auto [elems, text] = build_indexes(stream, graph);
            save_indexes(elems, text, path);
            auto [elems2, text2] = load_indexes(path);
            if (serialize_indexes(elems2, text2) != serialize_indexes(elems, text)) ok = false;
            save_indexes(elems2, text2, path);
            auto [elems3, text3] = load_indexes(path);
            if (serialize_indexes(elems3, text3) != serialize_indexes(elems, text)) ok = false;
            for (const auto& [name_a, _] : elems.by_name) {
                for (const auto& [name_b, __] : elems.by_name) {
                    if (overlapping_pairs(elems, name_a, name_b) !=
                            overlapping_pairs(elems2, name_a, name_b) ||
                        exclusive_elements(elems, name_a, name_b) !=
                            exclusive_elements(elems2, name_a, name_b)) {
                        ok = false;
                    }
                }
            }
            for (const auto& [term, positions] : text.postings) {
                if (term_positions(text2, term) != positions) ok = false;
            }
        }
        std::remove(path.c_str());
        verdict(8, "index round-trip is byte-stable and query-equivalent", ok);
    }

    // 9. Axiom witness: DOC-3 overlap is not transitive
    {
        auto g = construct(tokenize(fixtures::kDoc3, Format::Milestone));
        verdict(9, "overlap chain without a transitive arc",
                g.has_arc("a", ArcLabel::O, "b") && g.has_arc("b", ArcLabel::O, "c") &&
                    !g.has_arc("a", ArcLabel::O, "c"));
    }

    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
