#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dnormal/geometry.hpp"

namespace dnormal {

struct PartitionMismatch : GeometryError {
    using GeometryError::GeometryError;
};

/// Verifier verdict: pass iff `violations` is empty. For pair-level checks
/// the entries are the offending (i, j) index pairs.
struct Certificate {
    bool pass = true;
    std::vector<std::array<std::size_t, 2>> violations;
};

/// Symmetric adjacency over a point set under one pair mode, no self-loops.
class DnGraph {
  public:
    DnGraph(std::size_t n, PairMode mode, Tolerance tol);

    std::size_t size() const { return n_; }
    PairMode mode() const { return mode_; }
    Tolerance tol() const { return tol_; }

    bool edge(std::size_t i, std::size_t j) const { return adj_[i * n_ + j] != 0; }
    void set_edge(std::size_t i, std::size_t j, bool value);

    std::size_t edge_count() const;
    std::vector<std::array<std::size_t, 2>> edges() const;

  private:
    std::size_t n_;
    PairMode mode_;
    Tolerance tol_;
    std::vector<std::uint8_t> adj_;
};

/// Naive O(n^3 d) sweep: adjacency[i][j] = is_pair(mode, i, j, V, tol).
DnGraph build_graph(const PointSet& V, PairMode mode, Tolerance tol = {});

struct CliqueResult {
    std::vector<std::size_t> vertices;
    /// True when branch-and-bound finished within the node budget, so the
    /// clique is a proven maximum; false means best-found-so-far.
    bool complete = true;
    std::uint64_t nodes_expanded = 0;
};

/// Branch-and-bound maximum clique with a greedy-coloring upper bound.
/// Deterministic: vertices are processed in input order, ties by lowest index.
CliqueResult max_clique(const DnGraph& G, std::uint64_t node_budget = 10'000'000);

/// A point set with part labels 1..m, every part non-empty.
class PartitionedConfig {
  public:
    PartitionedConfig(PointSet points, std::vector<std::size_t> part_of);

    const PointSet& point_set() const { return points_; }
    const std::vector<std::size_t>& part_of() const { return part_of_; }
    std::size_t part_count() const { return part_count_; }

  private:
    PointSet points_;
    std::vector<std::size_t> part_of_;
    std::size_t part_count_;
};

/// Checks that every cross-part pair is an edge of G (subgraph containment of
/// the complete multipartite graph; within-part pairs are unconstrained).
Certificate is_complete_multipartite_sub(const DnGraph& G,
                                         const PartitionedConfig& config);

/// Turan density fit: k-hat = 1 / (1 - 2 e / n^2). Returns +infinity when
/// edges equals n^2/2 exactly. Callers round when interpreting.
double turan_fit(std::size_t n, std::uint64_t edges);

}  // namespace dnormal
