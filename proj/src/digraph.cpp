#include "perdet/digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace perdet {

Digraph::Digraph(int n, const std::vector<std::pair<int, int>>& arcs) : n_(n) {
    if (n < 1) throw std::invalid_argument("digraph needs at least one vertex");
    adj_.resize(static_cast<std::size_t>(n));
    for (const auto& [i, j] : arcs) {
        if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("arc endpoint out of range");
        if (i == j) throw std::invalid_argument("self-loops are not allowed");
        adj_[static_cast<std::size_t>(i - 1)].push_back(j);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        arc_count_ += nbrs.size();
    }
}

bool Digraph::has_arc(int i, int j) const {
    const auto& nbrs = neighbors(i);
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

const std::vector<int>& Digraph::neighbors(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex out of range");
    return adj_[static_cast<std::size_t>(v - 1)];
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(arc_count_);
    for (int v = 1; v <= n_; ++v)
        for (int w : neighbors(v)) out.emplace_back(v, w);
    return out;
}

bool cycle_in_digraph(const Dicycle& c, const Digraph& g) {
    const int k = c.length();
    if (k < 2) return false;
    for (int t = 0; t < k; ++t) {
        const int from = c.vertices[static_cast<std::size_t>(t)];
        const int to = c.vertices[static_cast<std::size_t>((t + 1) % k)];
        if (from < 1 || from > g.n() || !g.has_arc(from, to)) return false;
    }
    return true;
}

Digraph build_digraph(const SquareMatrix& a) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= a.n(); ++i)
        for (int j = 1; j <= a.n(); ++j)
            if (i != j && a.at(i, j) != 0) arcs.emplace_back(i, j);
    return Digraph(a.n(), arcs);
}

SquareMatrix adjacency_matrix(const Digraph& g) {
    SquareMatrix m(g.n());
    for (int v = 1; v <= g.n(); ++v)
        for (int w : g.neighbors(v)) m.at(v, w) = 1;
    return m;
}

namespace {

// Johnson-style enumeration of the simple cycles whose minimum vertex is the
// root. The root's subgraph is restricted to vertices >= root, so every cycle
// is found exactly once and already in canonical rotation.
class CycleSearch {
public:
    CycleSearch(const Digraph& g, std::size_t max_cycles, std::vector<Dicycle>& out)
        : g_(g), max_cycles_(max_cycles), out_(out),
          blocked_(static_cast<std::size_t>(g.n()) + 1, false),
          block_list_(static_cast<std::size_t>(g.n()) + 1) {}

    void run() {
        for (int root = 1; root <= g_.n(); ++root) {
            for (int v = root; v <= g_.n(); ++v) {
                blocked_[static_cast<std::size_t>(v)] = false;
                block_list_[static_cast<std::size_t>(v)].clear();
            }
            root_ = root;
            circuit(root);
        }
    }

private:
    bool circuit(int v) {
        bool found = false;
        path_.push_back(v);
        blocked_[static_cast<std::size_t>(v)] = true;
        for (int w : g_.neighbors(v)) {
            if (w < root_) continue;
            if (w == root_) {
                if (out_.size() >= max_cycles_) throw CycleCapExceeded(max_cycles_);
                out_.push_back(Dicycle{path_});
                found = true;
            } else if (!blocked_[static_cast<std::size_t>(w)]) {
                if (circuit(w)) found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            // v stays blocked until some successor reaches the root; record
            // the dependency so unblocking cascades.
            for (int w : g_.neighbors(v)) {
                if (w < root_ || w == root_) continue;
                auto& lst = block_list_[static_cast<std::size_t>(w)];
                if (std::find(lst.begin(), lst.end(), v) == lst.end()) lst.push_back(v);
            }
        }
        path_.pop_back();
        return found;
    }

    void unblock(int v) {
        blocked_[static_cast<std::size_t>(v)] = false;
        auto pending = std::move(block_list_[static_cast<std::size_t>(v)]);
        block_list_[static_cast<std::size_t>(v)].clear();
        for (int w : pending)
            if (blocked_[static_cast<std::size_t>(w)]) unblock(w);
    }

    const Digraph& g_;
    std::size_t max_cycles_;
    std::vector<Dicycle>& out_;
    std::vector<bool> blocked_;
    std::vector<std::vector<int>> block_list_;
    std::vector<int> path_;
    int root_ = 1;
};

} // namespace

std::vector<Dicycle> enumerate_dicycles(const Digraph& g, std::size_t max_cycles) {
    std::vector<Dicycle> out;
    CycleSearch(g, max_cycles, out).run();
    std::sort(out.begin(), out.end(), [](const Dicycle& a, const Dicycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.vertices < b.vertices;
    });
    return out;
}

std::optional<Dicycle> find_even_dicycle(const Digraph& g, std::size_t max_cycles) {
    for (const Dicycle& c : enumerate_dicycles(g, max_cycles))
        if (c.even()) return c;
    return std::nullopt;
}

std::optional<Dicycle> shortest_dicycle(const Digraph& g) {
    std::optional<Dicycle> best;
    // A cycle's canonical rotation starts at its minimum vertex, so BFS from
    // each root within the subgraph of vertices >= root.
    for (int root = 1; root <= g.n(); ++root) {
        std::vector<int> parent(static_cast<std::size_t>(g.n()) + 1, 0);
        std::vector<int> dist(static_cast<std::size_t>(g.n()) + 1, -1);
        std::vector<int> queue{root};
        dist[static_cast<std::size_t>(root)] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            if (best && dist[static_cast<std::size_t>(v)] + 1 >= best->length()) continue;
            for (int w : g.neighbors(v)) {
                if (w < root) continue;
                if (w == root) {
                    std::vector<int> path;
                    for (int u = v; u != 0; u = parent[static_cast<std::size_t>(u)])
                        path.push_back(u);
                    std::reverse(path.begin(), path.end());
                    Dicycle cand{std::move(path)};
                    if (!best || cand.length() < best->length() ||
                        (cand.length() == best->length() && cand.vertices < best->vertices))
                        best = std::move(cand);
                } else if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    parent[static_cast<std::size_t>(w)] = v;
                    queue.push_back(w);
                }
            }
        }
    }
    return best;
}

SquareMatrix count_walks(const Digraph& g, int k) {
    if (k < 1) throw std::invalid_argument("walk length must be positive");
    return adjacency_matrix(g).pow(k);
}

} // namespace perdet
