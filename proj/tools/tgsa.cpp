// tgsa: command-line front end for the TGSA library.
//
// Verbs: build, validate, index, query, gen, bench, export-dot.
// Exit codes: 0 success, 1 validation failure, 2 usage error, 3 I/O error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tgsa/tgsa.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

bool log_enabled() {
    static const bool on = [] {
        const char* v = std::getenv("TGSA_LOG");
        return v != nullptr && *v != '\0' && std::string(v) != "0";
    }();
    return on;
}

void log_line(const std::string& msg) {
    if (log_enabled()) std::cerr << "tgsa: " << msg << "\n";
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tgsa::IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw tgsa::IoError("cannot open '" + path + "' for writing");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw tgsa::IoError("write failed for '" + path + "'");
}

struct DocOptions {
    std::string in;
    std::string format = "milestone";
    bool keep_ws = false;

    tgsa::TokenStream load() const {
        auto fmt = format == "nested" ? tgsa::Format::Nested : tgsa::Format::Milestone;
        auto stream = tgsa::tokenize(read_input(in), fmt, keep_ws);
        log_line("tokenized " + std::to_string(stream.tokens.size()) + " tokens, digest " +
                 stream.source_digest);
        return stream;
    }
};

void add_doc_options(CLI::App* cmd, DocOptions& opts, bool required = true) {
    auto* in = cmd->add_option("--in", opts.in, "input document path, or - for stdin");
    if (required) in->required();
    cmd->add_option("--format", opts.format, "input dialect")
        ->check(CLI::IsMember({"milestone", "nested"}))
        ->capture_default_str();
    cmd->add_flag("--keep-ws", opts.keep_ws, "keep whitespace-only text runs");
}

std::string entry_line(const tgsa::ElementEntry& e) {
    return e.name + "\t" + std::to_string(e.start) + "\t" + std::to_string(e.end);
}

int run(int argc, char** argv) {
    CLI::App app{"TGSA: parse, validate, index and query overlap-only annotated documents"};
    app.require_subcommand(1);

    // ---- build ----
    DocOptions build_doc;
    std::string build_out;
    auto* build = app.add_subcommand("build", "construct the graph from a document");
    add_doc_options(build, build_doc);
    build->add_option("--out", build_out, "output graph path (default stdout)");

    // ---- validate ----
    DocOptions validate_doc;
    std::string validate_graph;
    auto* validate = app.add_subcommand("validate", "validate a document or a graph file");
    add_doc_options(validate, validate_doc, /*required=*/false);
    validate->add_option("--graph", validate_graph, "graph file to validate, or - for stdin");

    // ---- index ----
    DocOptions index_doc;
    std::string index_out;
    auto* index = app.add_subcommand("index", "build the element and text indexes");
    add_doc_options(index, index_doc);
    index->add_option("--out", index_out, "output index path (default stdout)");

    // ---- query ----
    DocOptions query_doc;
    std::string query_index;
    bool compat_property1 = false;
    auto* query = app.add_subcommand("query", "structural queries over a document");
    add_doc_options(query, query_doc);
    query->add_option("--index", query_index, "load indexes from this file instead of building");
    query->add_flag("--compat-property1", compat_property1,
                    "use the uncorrected overlap predicate (also true for disjoint spans)");
    query->require_subcommand(1);

    std::vector<std::string> query_names(2);
    auto* q_overlapping =
        query->add_subcommand("overlapping", "pairs of nameA/nameB entries that interleave");
    q_overlapping->add_option("nameA", query_names[0])->required();
    q_overlapping->add_option("nameB", query_names[1])->required();
    auto* q_exclusive =
        query->add_subcommand("exclusive", "nameA entries with no overlap against nameB");
    q_exclusive->add_option("nameA", query_names[0])->required();
    q_exclusive->add_option("nameB", query_names[1])->required();
    std::string query_id;
    auto* q_ancestors = query->add_subcommand("ancestors", "ancestors of a node id");
    q_ancestors->add_option("id", query_id)->required();
    auto* q_parents = query->add_subcommand("parents", "parents of a node id");
    q_parents->add_option("id", query_id)->required();
    std::string query_term;
    auto* q_containing =
        query->add_subcommand("containing-term", "elements containing a text term");
    q_containing->add_option("term", query_term)->required();

    // ---- gen ----
    tgsa::oracle::GenParams gen_params;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "generate a random overlap-only document");
    gen->add_option("--seed", gen_params.seed, "generator seed")->capture_default_str();
    gen->add_option("--elements", gen_params.n_elements, "number of elements")
        ->capture_default_str();
    gen->add_option("--overlap-prob", gen_params.overlap_probability,
                    "probability a close targets a non-latest open node")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    gen->add_option("--text-prob", gen_params.text_probability, "text emission probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    gen->add_option("--max-depth", gen_params.max_depth, "maximum open-list depth")
        ->capture_default_str();
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // ---- bench ----
    std::uint64_t bench_seed = 42;
    double bench_overlap = 0.0;
    std::vector<std::size_t> bench_sizes = {1000, 10000, 100000};
    auto* bench = app.add_subcommand("bench", "construction timing over generated sizes");
    bench->add_option("--seed", bench_seed)->capture_default_str();
    bench->add_option("--overlap-prob", bench_overlap)->check(CLI::Range(0.0, 1.0));
    bench->add_option("--sizes", bench_sizes, "element counts to time")->delimiter(',');

    // ---- export-dot ----
    DocOptions dot_doc;
    std::string dot_graph, dot_out;
    auto* dot = app.add_subcommand("export-dot", "render a document or graph file as DOT");
    add_doc_options(dot, dot_doc, /*required=*/false);
    dot->add_option("--graph", dot_graph, "graph file to render, or - for stdin");
    dot->add_option("--out", dot_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (build->parsed()) {
        auto graph = tgsa::construct(build_doc.load());
        write_output(build_out, tgsa::serialize_graph(graph));
        return kExitOk;
    }

    if (validate->parsed()) {
        if (validate_graph.empty() && validate_doc.in.empty()) {
            std::cerr << "validate: need --in or --graph\n";
            return kExitUsage;
        }
        tgsa::ValidationReport report;
        if (!validate_graph.empty()) {
            report = tgsa::validate_tgsa(tgsa::parse_graph(read_input(validate_graph)));
        } else {
            auto stream = validate_doc.load();
            report = tgsa::validate_stream(stream);
            if (report.ok()) report = tgsa::validate_tgsa(tgsa::construct(stream));
        }
        std::cout << report.to_string() << (report.ok() ? "\n" : "");
        return report.ok() ? kExitOk : kExitValidation;
    }

    if (index->parsed()) {
        auto stream = index_doc.load();
        auto [elems, text] = tgsa::build_indexes(stream, tgsa::construct(stream));
        write_output(index_out, tgsa::serialize_indexes(elems, text));
        return kExitOk;
    }

    if (query->parsed()) {
        auto stream = query_doc.load();
        auto graph = tgsa::construct(stream);
        tgsa::ElementIndex elems;
        tgsa::TextIndex text;
        if (!query_index.empty()) {
            std::tie(elems, text) = tgsa::load_indexes(query_index);
            if (elems.digest != stream.source_digest) {
                std::cerr << "index digest " << elems.digest << " does not match document "
                          << stream.source_digest << "\n";
                return kExitValidation;
            }
        } else {
            std::tie(elems, text) = tgsa::build_indexes(stream, graph);
        }
        auto rule = compat_property1 ? tgsa::OverlapRule::PaperLiteral
                                     : tgsa::OverlapRule::Interleaving;

        if (q_overlapping->parsed()) {
            for (const auto& [a, b] :
                 tgsa::overlapping_pairs(elems, query_names[0], query_names[1], rule)) {
                std::cout << entry_line(a) << "\t" << entry_line(b) << "\n";
            }
        } else if (q_exclusive->parsed()) {
            for (const auto& e :
                 tgsa::exclusive_elements(elems, query_names[0], query_names[1], rule)) {
                std::cout << entry_line(e) << "\n";
            }
        } else if (q_ancestors->parsed() || q_parents->parsed()) {
            auto v = graph.find(query_id);
            if (v == tgsa::TgsaGraph::npos) {
                std::cerr << "unknown node id '" << query_id << "'\n";
                return kExitValidation;
            }
            auto ids = q_ancestors->parsed() ? graph.ancestors_of(query_id)
                                             : graph.parents_of(query_id);
            for (const auto& id : ids) {
                const auto& vx = graph.vertex(graph.require(id));
                std::cout << vx.name << "\t" << vx.start << "\t" << vx.end << "\n";
            }
        } else if (q_containing->parsed()) {
            std::set<std::pair<tgsa::Ordinal, std::string>> lines;
            for (tgsa::Ordinal pos : tgsa::term_positions(text, query_term)) {
                for (const auto& e : tgsa::elements_containing(elems, pos)) {
                    lines.emplace(e.start, entry_line(e));
                }
            }
            for (const auto& [_, line] : lines) std::cout << line << "\n";
        }
        return kExitOk;
    }

    if (gen->parsed()) {
        auto stream = tgsa::oracle::random_document(gen_params);
        write_output(gen_out, tgsa::to_milestone(stream));
        return kExitOk;
    }

    if (bench->parsed()) {
        std::cout << "elements\ttokens\tbuild_ms\ttokens_per_ms\n";
        for (std::size_t n : bench_sizes) {
            tgsa::oracle::GenParams p;
            p.seed = bench_seed;
            p.n_elements = n;
            p.overlap_probability = bench_overlap;
            p.max_depth = 64;
            auto stream = tgsa::oracle::random_document(p);
            double best = 1e18;
            for (int run = 0; run < 3; ++run) {
                auto t0 = std::chrono::steady_clock::now();
                auto graph = tgsa::construct(stream);
                double ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
                if (graph.vertex_count() == 0) return kExitValidation;
                if (ms < best) best = ms;
            }
            std::cout << n << "\t" << stream.tokens.size() << "\t" << best << "\t"
                      << static_cast<double>(stream.tokens.size()) / best << "\n";
        }
        return kExitOk;
    }

    if (dot->parsed()) {
        if (dot_graph.empty() && dot_doc.in.empty()) {
            std::cerr << "export-dot: need --in or --graph\n";
            return kExitUsage;
        }
        tgsa::TgsaGraph graph = !dot_graph.empty()
                                    ? tgsa::parse_graph(read_input(dot_graph))
                                    : tgsa::construct(dot_doc.load());
        write_output(dot_out, tgsa::to_dot(graph));
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const tgsa::IoError& e) {
        std::cerr << "tgsa: " << e.what() << "\n";
        return kExitIo;
    } catch (const tgsa::Error& e) {
        std::cerr << "tgsa: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "tgsa: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "tgsa: " << e.what() << "\n";
        return kExitValidation;
    }
}
