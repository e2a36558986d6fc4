// Command-line front end: construct labelings, predict and census row
// colors, verify labelings, run the exact brute-force search, build tuple
// partitions, and export DOT drawings.
//
// JSON goes to stdout, prose to stderr. Exit codes: 0 success, 1 a labeling
// failed verification, 2 usage or input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lamtree/labeler.hpp"
#include "lamtree/oracle.hpp"
#include "lamtree/partitions.hpp"
#include "lamtree/serialization.hpp"
#include "lamtree/verifier.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::int64_t label_guard() {
    if (const char* env = std::getenv("LAMTREE_MAX_LABELS")) {
        try {
            const std::int64_t guard = std::stoll(env);
            if (guard > 0) return guard;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument("LAMTREE_MAX_LABELS must be a positive integer");
    }
    return lamtree::kDefaultMaxLabels;
}

lamtree::LabeledExplicitTree load_labeled(const std::string& text) {
    if (lamtree::detect_input(text) == lamtree::InputKind::labeling)
        return lamtree::to_explicit(lamtree::labeling_from_json(text));
    return lamtree::labeled_tree_from_json(text);
}

int run_label(int t, int n, const std::string& format) {
    lamtree::EdgeLabeling labeling = lamtree::label_tree(t, n, label_guard());
    if (t % 2 == 0) labeling = lamtree::resolve_jump_conflicts(labeling);
    const lamtree::ColorReport report = lamtree::check(labeling);
    if (format == "dot") std::cout << lamtree::to_dot(labeling);
    else std::cout << lamtree::to_json(labeling) << "\n";
    std::cerr << "labeled t=" << t << " n=" << n << ": " << labeling.labels.size()
              << " edges, " << report.distinct_colors << " colors, verdict "
              << lamtree::to_string(report.verdict) << "\n";
    return report.is_local_antimagic ? 0 : 1;
}

int run_predict(int t, int n) {
    std::vector<lamtree::RowColorPrediction> rows;
    std::string method = "closed_form";
    if (n >= 2 && n % 2 == 0) {
        rows = lamtree::predict_row_colors(t, n);
    } else {
        rows = lamtree::extract_row_colors(lamtree::label_tree(t, n, label_guard()));
        method = "empirical";
    }
    std::cout << lamtree::rows_to_json(t, n, rows, method) << "\n";
    std::cerr << "predicted " << rows.size() << " internal rows for t=" << t << " n=" << n
              << " (" << method << ")\n";
    return 0;
}

int run_verify(const std::string& input_path) {
    const lamtree::LabeledExplicitTree tree = load_labeled(read_input(input_path));
    const lamtree::ColorReport report = lamtree::check(tree);
    std::cout << lamtree::to_json(report) << "\n";
    if (report.is_local_antimagic) {
        std::cerr << "valid labeling: " << report.distinct_colors << " colors, verdict "
                  << lamtree::to_string(report.verdict) << "\n";
        return 0;
    }
    std::cerr << "INVALID labeling: " << report.violations.size() << " equal-sum edges, "
              << report.duplicate_labels.size() << " duplicate and "
              << report.missing_labels.size() << " missing labels\n";
    return 1;
}

int run_chi_la(const std::string& input_path, int max_edges, bool no_prune) {
    const lamtree::ExplicitTree tree = lamtree::tree_from_json(read_input(input_path));
    lamtree::SearchOptions options;
    options.max_edges = max_edges;
    options.prune = !no_prune;
    const lamtree::SearchResult result = lamtree::brute_force_chi_la(tree, options);
    std::cout << lamtree::to_json(result) << "\n";
    std::cerr << "chi_la = " << result.chi_la << " after " << result.labelings_examined
              << " complete labelings in " << result.elapsed.count() << " ms\n";
    return 0;
}

int run_partition(int t, std::int64_t count, std::int64_t base) {
    const lamtree::TuplePartition partition = lamtree::tuple_partition(t, count, base);
    std::cout << lamtree::to_json(partition) << "\n";
    std::cerr << "partitioned [" << partition.source.lo << "," << partition.source.hi << "] into "
              << count << " tuples of " << t << (partition.profile.isolate ? " with isolate " : "")
              << (partition.profile.isolate ? std::to_string(*partition.profile.isolate) : "")
              << "\n";
    return 0;
}

int run_export_dot(const std::string& input_path, const std::string& out_path) {
    const lamtree::LabeledExplicitTree tree = load_labeled(read_input(input_path));
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << lamtree::to_dot(tree);
    std::cerr << "wrote " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local antimagic labelings of complete full t-ary trees"};
    app.require_subcommand(1);

    int t = 0, n = 0;
    std::string format = "json";
    auto* label = app.add_subcommand("label", "construct a labeling for the (t, n) tree");
    label->add_option("--t", t, "branching factor")->required();
    label->add_option("--n", n, "number of levels")->required();
    label->add_option("--format", format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));

    int pt = 0, pn = 0;
    auto* predict = app.add_subcommand("predict", "row colors for the (t, n) tree");
    predict->add_option("--t", pt, "branching factor")->required();
    predict->add_option("--n", pn, "number of levels")->required();

    std::string verify_input;
    auto* verify = app.add_subcommand("verify", "validate a labeling (file or - for stdin)");
    verify->add_option("--input", verify_input, "labeling or labeled-tree JSON")->required();

    std::string chi_input;
    int max_edges = lamtree::kDefaultMaxSearchEdges;
    bool no_prune = false;
    auto* chi = app.add_subcommand("chi-la", "exact chromatic number by exhaustive search");
    chi->add_option("--input", chi_input, "tree JSON {nodes, edges}")->required();
    chi->add_option("--max-edges", max_edges, "search size guard");
    chi->add_flag("--no-prune", no_prune, "enumerate all m! labelings");

    int part_t = 0;
    std::int64_t part_count = 0, part_base = 1;
    auto* partition = app.add_subcommand("partition", "consecutive-sum tuple partition");
    partition->add_option("--t", part_t, "tuple size")->required();
    partition->add_option("--count", part_count, "number of tuples")->required();
    partition->add_option("--base", part_base, "first integer of the interval");

    std::string dot_input, dot_out;
    auto* export_dot = app.add_subcommand("export-dot", "render a labeling as DOT");
    export_dot->add_option("--input", dot_input, "labeling or labeled-tree JSON")->required();
    export_dot->add_option("--out", dot_out, "output .dot path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (label->parsed()) return run_label(t, n, format);
        if (predict->parsed()) return run_predict(pt, pn);
        if (verify->parsed()) return run_verify(verify_input);
        if (chi->parsed()) return run_chi_la(chi_input, max_edges, no_prune);
        if (partition->parsed()) return run_partition(part_t, part_count, part_base);
        if (export_dot->parsed()) return run_export_dot(dot_input, dot_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
