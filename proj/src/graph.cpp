#include "dnormal/graph.hpp"

#include <algorithm>
#include <limits>

#include "dnormal/parallel.hpp"

namespace dnormal {

DnGraph::DnGraph(std::size_t n, PairMode mode, Tolerance tol)
    : n_(n), mode_(mode), tol_(tol), adj_(n * n, 0) {}

void DnGraph::set_edge(std::size_t i, std::size_t j, bool value) {
    if (i == j) throw OutOfRange("self-loops are not representable");
    adj_[i * n_ + j] = value ? 1 : 0;
    adj_[j * n_ + i] = value ? 1 : 0;
}

std::size_t DnGraph::edge_count() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (edge(i, j)) ++c;
    return c;
}

std::vector<std::array<std::size_t, 2>> DnGraph::edges() const {
    std::vector<std::array<std::size_t, 2>> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (edge(i, j)) out.push_back({i, j});
    return out;
}

DnGraph build_graph(const PointSet& V, PairMode mode, Tolerance tol) {
    const std::size_t n = V.size();
    if (n < 2) throw OutOfRange("build_graph needs at least two points");
    DnGraph g(n, mode, tol);
    // Each pair's predicate is pure; rows are filled independently.
    parallel_for(n, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < n; ++j)
            if (is_pair(mode, i, j, V, tol)) g.set_edge(i, j, true);
    });
    return g;
}

namespace {

struct CliqueSearch {
    const DnGraph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::vector<std::size_t> best;
    std::vector<std::size_t> current;

    explicit CliqueSearch(const DnGraph& graph, std::uint64_t node_budget)
        : g(graph), budget(node_budget) {}

    // Greedy coloring in increasing index order; returns candidates sorted by
    // color ascending (stable, so ties stay in index order).
    std::vector<std::pair<std::size_t, std::size_t>> color(
        const std::vector<std::size_t>& cand) const {
        std::vector<std::pair<std::size_t, std::size_t>> out;  // (vertex, color)
        out.reserve(cand.size());
        std::vector<std::vector<std::size_t>> classes;
        for (std::size_t v : cand) {
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool fits = true;
                for (std::size_t u : classes[c])
                    if (g.edge(u, v)) {
                        fits = false;
                        break;
                    }
                if (fits) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
            out.emplace_back(v, c + 1);
        }
        std::stable_sort(out.begin(), out.end(),
                         [](const auto& a, const auto& b) { return a.second < b.second; });
        return out;
    }

    void expand(std::vector<std::size_t> cand) {
        if (exhausted) return;
        if (++nodes > budget) {
            exhausted = true;
            return;
        }
        if (cand.empty()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        auto colored = color(cand);
        while (!colored.empty()) {
            auto [v, c] = colored.back();
            colored.pop_back();
            if (current.size() + c <= best.size()) return;  // bound
            current.push_back(v);
            std::vector<std::size_t> next;
            for (const auto& [u, uc] : colored)
                if (g.edge(u, v)) next.push_back(u);
            std::sort(next.begin(), next.end());
            expand(std::move(next));
            current.pop_back();
            if (exhausted) return;
        }
    }
};

}  // namespace

CliqueResult max_clique(const DnGraph& G, std::uint64_t node_budget) {
    const std::size_t n = G.size();
    CliqueResult result;
    if (n == 0) return result;
    CliqueSearch search(G, node_budget);
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    search.best = {0};  // single vertex is always a clique
    search.expand(all);
    std::sort(search.best.begin(), search.best.end());
    result.vertices = search.best;
    result.complete = !search.exhausted;
    result.nodes_expanded = search.nodes;
    return result;
}

PartitionedConfig::PartitionedConfig(PointSet points,
                                     std::vector<std::size_t> part_of)
    : points_(std::move(points)), part_of_(std::move(part_of)), part_count_(0) {
    if (part_of_.size() != points_.size())
        throw PartitionMismatch("partition labels do not match point count");
    for (std::size_t label : part_of_) {
        if (label == 0) throw PartitionMismatch("part labels start at 1");
        part_count_ = std::max(part_count_, label);
    }
    std::vector<std::size_t> sizes(part_count_, 0);
    for (std::size_t label : part_of_) ++sizes[label - 1];
    for (std::size_t s : sizes)
        if (s == 0) throw PartitionMismatch("part labels must be contiguous with every part non-empty");
}

Certificate is_complete_multipartite_sub(const DnGraph& G,
                                         const PartitionedConfig& config) {
    if (G.size() != config.point_set().size())
        throw PartitionMismatch("graph and partition disagree on vertex count");
    Certificate cert;
    const auto& part = config.part_of();
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j)
            if (part[i] != part[j] && !G.edge(i, j))
                cert.violations.push_back({i, j});
    cert.pass = cert.violations.empty();
    return cert;
}

double turan_fit(std::size_t n, std::uint64_t edges) {
    if (n < 2) throw OutOfRange("turan_fit needs n >= 2");
    const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (edges > max_edges) throw OutOfRange("edge count exceeds n(n-1)/2");
    const double density = 2.0 * static_cast<double>(edges) /
                           (static_cast<double>(n) * static_cast<double>(n));
    if (density >= 1.0) return std::numeric_limits<double>::infinity();
    return 1.0 / (1.0 - density);
}

}  // namespace dnormal
