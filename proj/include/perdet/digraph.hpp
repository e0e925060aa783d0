#pragma once

#include "perdet/errors.hpp"
#include "perdet/matrix.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace perdet {

inline constexpr std::size_t kCycleCap = 1'000'000;

// Loop-free digraph on vertex set [n].
class Digraph {
public:
    Digraph(int n, const std::vector<std::pair<int, int>>& arcs);

    int n() const { return n_; }
    std::size_t arc_count() const { return arc_count_; }
    bool has_arc(int i, int j) const;

    // Out-neighbours of v in ascending order.
    const std::vector<int>& neighbors(int v) const;

    // All arcs sorted by (tail, head).
    std::vector<std::pair<int, int>> arcs() const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    int n_;
    std::size_t arc_count_ = 0;
    std::vector<std::vector<int>> adj_; // adj_[v-1] sorted, duplicate-free
};

// Simple directed cycle, stored in canonical rotation: vertices[0] is the
// minimum vertex, and vertices[k-1] -> vertices[0] closes the cycle.
struct Dicycle {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    bool even() const { return length() % 2 == 0; }

    friend bool operator==(const Dicycle&, const Dicycle&) = default;
};

// True iff every consecutive arc (including the closing one) exists in g.
bool cycle_in_digraph(const Dicycle& c, const Digraph& g);

// Arc (i,j) present iff a(i,j) != 0 and i != j; the diagonal is ignored.
Digraph build_digraph(const SquareMatrix& a);

// {0,1} adjacency matrix of g.
SquareMatrix adjacency_matrix(const Digraph& g);

// All simple dicycles of length >= 2, canonical rotation, sorted by
// (length, vertex sequence). Throws CycleCapExceeded beyond max_cycles.
std::vector<Dicycle> enumerate_dicycles(const Digraph& g, std::size_t max_cycles = kCycleCap);

// First even-length dicycle in enumeration order, if any. Length-2 dicycles
// count as even.
std::optional<Dicycle> find_even_dicycle(const Digraph& g, std::size_t max_cycles = kCycleCap);

// A shortest dicycle (BFS, deterministic tie-break), independent of the
// enumeration cap.
std::optional<Dicycle> shortest_dicycle(const Digraph& g);

// Entry (i,j) of the k-th power of the adjacency matrix: the number of
// walks of length k from i to j.
SquareMatrix count_walks(const Digraph& g, int k);

} // namespace perdet
