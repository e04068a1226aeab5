#include "pse/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "pse/errors.hpp"

namespace pse {

Graph::Graph(std::vector<std::string> vertices) : vertices_(std::move(vertices)) {
    adj_.resize(vertices_.size());
    std::map<std::string, bool> seen;
    for (const auto& v : vertices_)
        if (!seen.emplace(v, true).second)
            throw ValidationError("graph: duplicate vertex '" + v + "'");
}

Graph Graph::with_n(int n) {
    std::vector<std::string> vs;
    vs.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vs.push_back(std::to_string(i));
    return Graph(std::move(vs));
}

int Graph::index_of(const std::string& v) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    return it == vertices_.end() ? -1 : static_cast<int>(it - vertices_.begin());
}

bool Graph::insert_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= size() || v >= size())
        throw ValidationError("graph: vertex index out of range");
    if (u == v) throw ValidationError("graph: self-loop");
    auto e = std::minmax(u, v);
    if (!edges_.emplace(e.first, e.second).second) return false;
    adj_[static_cast<size_t>(u)].push_back(v);
    adj_[static_cast<size_t>(v)].push_back(u);
    return true;
}

bool Graph::insert_edge(const std::string& u, const std::string& v) {
    int iu = index_of(u), iv = index_of(v);
    if (iu < 0) throw ValidationError("graph: unknown vertex '" + u + "'");
    if (iv < 0) throw ValidationError("graph: unknown vertex '" + v + "'");
    return insert_edge(iu, iv);
}

bool Graph::has_edge(int u, int v) const {
    auto e = std::minmax(u, v);
    return edges_.count({e.first, e.second}) != 0;
}

namespace {

int checked_index(const Graph& g, const std::string& v) {
    int i = g.index_of(v);
    if (i < 0) throw ValidationError("graph: unknown vertex '" + v + "'");
    return i;
}

} // namespace

bool connected(const Graph& g, const std::string& s, const std::string& t) {
    return connected_idx(g, checked_index(g, s), checked_index(g, t));
}

bool connected_idx(const Graph& g, int s, int t) { return bfs_distance_idx(g, s, t) >= 0; }

long bfs_distance_idx(const Graph& g, int s, int t) {
    if (s == t) return 0;
    std::vector<long> dist(static_cast<size_t>(g.size()), -1);
    std::deque<int> queue{s};
    dist[static_cast<size_t>(s)] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<size_t>(w)] >= 0) continue;
            dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
            if (w == t) return dist[static_cast<size_t>(w)];
            queue.push_back(w);
        }
    }
    return -1;
}

std::optional<std::vector<int>> shortest_path_idx(const Graph& g, int s, int t) {
    std::vector<int> prev(static_cast<size_t>(g.size()), -2);
    prev[static_cast<size_t>(s)] = -1;
    std::deque<int> queue{s};
    while (!queue.empty() && prev[static_cast<size_t>(t)] == -2) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (prev[static_cast<size_t>(w)] != -2) continue;
            prev[static_cast<size_t>(w)] = u;
            queue.push_back(w);
        }
    }
    if (prev[static_cast<size_t>(t)] == -2) return std::nullopt;
    std::vector<int> path;
    for (int v = t; v != -1; v = prev[static_cast<size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace pse
