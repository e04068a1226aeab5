#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pse {

/// Undirected simple graph: irreflexive, stored symmetrically.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<std::string> vertices);

    /// Graph on vertices "0".."n-1".
    static Graph with_n(int n);

    int size() const { return static_cast<int>(vertices_.size()); }
    long edge_count() const { return static_cast<long>(edges_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::string& vertex(int i) const { return vertices_[static_cast<size_t>(i)]; }
    int index_of(const std::string& v) const;

    /// Inserts the undirected edge {u,v}; rejects loops, ignores repeats.
    /// Returns false when the edge was already present.
    bool insert_edge(int u, int v);
    bool insert_edge(const std::string& u, const std::string& v);

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int u) const { return adj_[static_cast<size_t>(u)]; }
    /// Canonical (min,max) index pairs in increasing order.
    const std::set<std::pair<int, int>>& edges() const { return edges_; }

private:
    std::vector<std::string> vertices_;
    std::vector<std::vector<int>> adj_;
    std::set<std::pair<int, int>> edges_;
};

/// True iff s and t lie in the same component (breadth-first search).
bool connected(const Graph& g, const std::string& s, const std::string& t);
bool connected_idx(const Graph& g, int s, int t);

/// Shortest s-t path as a vertex index sequence, if any.
std::optional<std::vector<int>> shortest_path_idx(const Graph& g, int s, int t);

/// BFS distance, or -1 when unreachable.
long bfs_distance_idx(const Graph& g, int s, int t);

} // namespace pse
