#include "lamtree/oracle.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>

namespace lamtree {

namespace {

struct SearchGraph {
    int nodes = 0;
    int m = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adjacency;  // neighbor vertex ids
};

SearchGraph prepare(const ExplicitTree& tree, int max_edges) {
    if (tree.nodes < 3)
        throw std::invalid_argument("brute_force_chi_la: need at least 3 vertices");
    if (static_cast<std::int64_t>(tree.edges.size()) != tree.nodes - 1)
        throw std::invalid_argument("brute_force_chi_la: edge count does not match a tree");
    if (static_cast<int>(tree.edges.size()) > max_edges)
        throw std::invalid_argument("brute_force_chi_la: edge count exceeds max_edges guard of " +
                                    std::to_string(max_edges));

    SearchGraph g;
    g.nodes = static_cast<int>(tree.nodes);
    g.m = static_cast<int>(tree.edges.size());
    g.adjacency.resize(static_cast<std::size_t>(g.nodes));
    for (const auto& [u, v] : tree.edges) {
        if (u < 0 || u >= tree.nodes || v < 0 || v >= tree.nodes || u == v)
            throw std::invalid_argument("brute_force_chi_la: bad edge endpoint");
        g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        g.adjacency[static_cast<std::size_t>(u)].push_back(static_cast<int>(v));
        g.adjacency[static_cast<std::size_t>(v)].push_back(static_cast<int>(u));
    }

    std::vector<char> reached(static_cast<std::size_t>(g.nodes), 0);
    std::vector<int> stack{0};
    reached[0] = 1;
    int seen = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : g.adjacency[static_cast<std::size_t>(v)])
            if (!reached[static_cast<std::size_t>(w)]) {
                reached[static_cast<std::size_t>(w)] = 1;
                ++seen;
                stack.push_back(w);
            }
    }
    if (seen != g.nodes) throw std::invalid_argument("brute_force_chi_la: tree is not connected");
    return g;
}

struct WorkerResult {
    std::int64_t chi = -1;
    std::vector<int> best_labels;  // by edge position
    std::uint64_t examined = 0;
};

// Depth-first over label assignments in lexicographic order of the label
// sequence. `clashes` counts fully-labeled adjacent pairs with equal sums;
// it can only persist downward, so pruning on it is sound.
struct Enumerator {
    const SearchGraph& g;
    bool prune;
    std::vector<int> labels;          // per edge position, 0 = unassigned
    std::vector<char> label_used;     // 1-based
    std::vector<std::int64_t> sums;   // per vertex
    std::vector<int> remaining;       // unlabeled incident edges per vertex
    int clashes = 0;
    WorkerResult out;

    explicit Enumerator(const SearchGraph& graph, bool prune_enabled)
        : g(graph),
          prune(prune_enabled),
          labels(static_cast<std::size_t>(graph.m), 0),
          label_used(static_cast<std::size_t>(graph.m) + 1, 0),
          sums(static_cast<std::size_t>(graph.nodes), 0),
          remaining(static_cast<std::size_t>(graph.nodes), 0) {
        for (int v = 0; v < g.nodes; ++v)
            remaining[static_cast<std::size_t>(v)] =
                static_cast<int>(g.adjacency[static_cast<std::size_t>(v)].size());
    }

    int clash_delta(int vertex) const {
        int delta = 0;
        for (int w : g.adjacency[static_cast<std::size_t>(vertex)])
            if (remaining[static_cast<std::size_t>(w)] == 0 &&
                sums[static_cast<std::size_t>(w)] == sums[static_cast<std::size_t>(vertex)])
                ++delta;
        return delta;
    }

    void assign(int position, int label, int& delta) {
        const auto [u, v] = g.edges[static_cast<std::size_t>(position)];
        labels[static_cast<std::size_t>(position)] = label;
        label_used[static_cast<std::size_t>(label)] = 1;
        sums[static_cast<std::size_t>(u)] += label;
        sums[static_cast<std::size_t>(v)] += label;
        --remaining[static_cast<std::size_t>(u)];
        --remaining[static_cast<std::size_t>(v)];
        delta = 0;
        if (remaining[static_cast<std::size_t>(u)] == 0) delta += clash_delta(u);
        if (remaining[static_cast<std::size_t>(v)] == 0) delta += clash_delta(v);
        clashes += delta;
    }

    void unassign(int position, int label, int delta) {
        const auto [u, v] = g.edges[static_cast<std::size_t>(position)];
        clashes -= delta;
        ++remaining[static_cast<std::size_t>(u)];
        ++remaining[static_cast<std::size_t>(v)];
        sums[static_cast<std::size_t>(u)] -= label;
        sums[static_cast<std::size_t>(v)] -= label;
        label_used[static_cast<std::size_t>(label)] = 0;
        labels[static_cast<std::size_t>(position)] = 0;
    }

    void complete() {
        ++out.examined;
        if (clashes != 0) return;
        std::vector<std::int64_t> distinct = sums;
        std::sort(distinct.begin(), distinct.end());
        const std::int64_t colors =
            std::unique(distinct.begin(), distinct.end()) - distinct.begin();
        if (out.chi < 0 || colors < out.chi) {
            out.chi = colors;
            out.best_labels = labels;
        }
    }

    void descend(int position) {
        if (position == g.m) {
            complete();
            return;
        }
        for (int label = 1; label <= g.m; ++label) {
            if (label_used[static_cast<std::size_t>(label)]) continue;
            int delta = 0;
            assign(position, label, delta);
            if (!(prune && clashes > 0)) descend(position + 1);
            unassign(position, label, delta);
        }
    }

    WorkerResult run_with_first(int first_label) {
        int delta = 0;
        assign(0, first_label, delta);
        if (!(prune && clashes > 0)) descend(1);
        unassign(0, first_label, delta);
        return std::move(out);
    }
};

}  // namespace

SearchResult brute_force_chi_la(const ExplicitTree& tree, SearchOptions options) {
    const auto started = std::chrono::steady_clock::now();
    const SearchGraph g = prepare(tree, options.max_edges);

    // Split over the first edge's label; merging in label order keeps the
    // lexicographically smallest witness independent of scheduling.
    std::vector<std::future<WorkerResult>> workers;
    workers.reserve(static_cast<std::size_t>(g.m));
    for (int first = 1; first <= g.m; ++first)
        workers.push_back(std::async(
            options.parallelism == 1 ? std::launch::deferred : std::launch::async,
            [&g, &options, first] {
                Enumerator enumerator(g, options.prune);
                return enumerator.run_with_first(first);
            }));

    SearchResult result;
    std::vector<int> best_labels;
    for (auto& worker : workers) {
        WorkerResult partial = worker.get();
        result.labelings_examined += partial.examined;
        if (partial.chi < 0) continue;
        if (result.chi_la == 0 || partial.chi < result.chi_la) {
            result.chi_la = partial.chi;
            best_labels = std::move(partial.best_labels);
        }
    }
    if (result.chi_la == 0)
        throw std::runtime_error("brute_force_chi_la: no local antimagic labeling found");

    result.witness.nodes = tree.nodes;
    for (std::size_t i = 0; i < tree.edges.size(); ++i)
        result.witness.edges.push_back(
            {tree.edges[i].first, tree.edges[i].second, best_labels[i]});
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    return result;
}

bool confirm_lower_bound(const ExplicitTree& tree, SearchOptions options) {
    std::vector<std::int64_t> degree(static_cast<std::size_t>(tree.nodes), 0);
    for (const auto& [u, v] : tree.edges) {
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    }
    const std::int64_t leaves = std::count(degree.begin(), degree.end(), 1);
    return brute_force_chi_la(tree, options).chi_la >= leaves + 1;
}

}  // namespace lamtree
