#include "asym/connectivity.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>

namespace asym {

namespace {

// Incidence flow network: vertex v is node v, hyperedge e splits into
// in-node n+2e and out-node n+2e+1 joined by a unit-capacity arc.
struct FlowNetwork {
    struct Arc {
        int to;
        int cap;
    };

    std::vector<Arc> arcs; // arc i and i^1 are a forward/backward pair
    std::vector<std::vector<int>> adj;

    explicit FlowNetwork(int nodes) : adj(nodes) {}

    void add_arc(int from, int to, int cap) {
        adj[from].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({to, cap});
        adj[to].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({from, 0});
    }

    // Edmonds-Karp; augmenting paths discovered in deterministic arc order.
    int max_flow(int s, int t) {
        int total = 0;
        while (true) {
            std::vector<int> pred_arc(adj.size(), -1);
            std::queue<int> bfs;
            bfs.push(s);
            pred_arc[s] = -2;
            while (!bfs.empty() && pred_arc[t] == -1) {
                int cur = bfs.front();
                bfs.pop();
                for (int a : adj[cur]) {
                    if (arcs[a].cap > 0 && pred_arc[arcs[a].to] == -1) {
                        pred_arc[arcs[a].to] = a;
                        bfs.push(arcs[a].to);
                    }
                }
            }
            if (pred_arc[t] == -1) break;
            for (int node = t; node != s;) {
                int a = pred_arc[node];
                arcs[a].cap -= 1;
                arcs[a ^ 1].cap += 1;
                node = arcs[a ^ 1].to;
            }
            ++total;
        }
        return total;
    }

    // Remaining flow on the forward arc (cap moved to the reverse side).
    int flow_on(int arc_index) const { return arcs[arc_index ^ 1].cap; }
    void consume(int arc_index) {
        arcs[arc_index ^ 1].cap -= 1;
    }
};

// Drops cycles so the walk becomes a Berge path over a subset of its edges.
BergePath shortcut_to_path(std::vector<int> vs, std::vector<int> es) {
    bool again = true;
    while (again) {
        again = false;
        std::map<int, int> pos;
        for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
            auto it = pos.find(vs[i]);
            if (it != pos.end()) {
                const int p = it->second;
                vs.erase(vs.begin() + p + 1, vs.begin() + i + 1);
                es.erase(es.begin() + p, es.begin() + i);
                again = true;
                break;
            }
            pos[vs[i]] = i;
        }
    }
    return {std::move(vs), std::move(es)};
}

} // namespace

ConnectivityResult max_edge_disjoint_paths(const Hypergraph& h, int u, int v) {
    const int n = h.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw Error(ErrorKind::IndexOutOfRange, "vertex out of range");
    if (u == v) throw Error(ErrorKind::SameVertex, "connectivity needs two distinct vertices");

    const int m = h.edge_count();
    FlowNetwork net(n + 2 * m);
    auto edge_in = [n](int e) { return n + 2 * e; };
    auto edge_out = [n](int e) { return n + 2 * e + 1; };
    for (int e = 0; e < m; ++e) {
        net.add_arc(edge_in(e), edge_out(e), 1);
        for (int w : h.edges[e]) {
            net.add_arc(w, edge_in(e), 1);
            net.add_arc(edge_out(e), w, 1);
        }
    }

    ConnectivityResult result;
    result.count = net.max_flow(u, v);

    // Peel off one unit walk per flow unit, consuming arcs as we go.
    for (int unit = 0; unit < result.count; ++unit) {
        std::vector<int> vs = {u};
        std::vector<int> es;
        int cur = u;
        while (cur != v) {
            int chosen = -1;
            for (int a : net.adj[cur]) {
                if ((a & 1) == 0 && net.flow_on(a) > 0) {
                    chosen = a;
                    break;
                }
            }
            assert(chosen >= 0 && "flow conservation left the walk without an outgoing unit");
            net.consume(chosen);
            int node = net.arcs[chosen].to; // edge in-node
            const int e = (node - n) / 2;
            es.push_back(e);
            int through = -1;
            net.consume(net.adj[node][0]); // the in->out arc
            node = edge_out(e);
            for (int a : net.adj[node]) {
                if ((a & 1) == 0 && net.flow_on(a) > 0) {
                    through = a;
                    break;
                }
            }
            assert(through >= 0 && "flow conservation left the edge without an exit vertex");
            net.consume(through);
            cur = net.arcs[through].to;
            vs.push_back(cur);
        }
        result.paths.push_back(shortcut_to_path(std::move(vs), std::move(es)));
    }
    return result;
}

bool is_t_connected(const Hypergraph& h, int u, int v, int t) {
    if (t < 0) throw Error(ErrorKind::InvalidParams, "t must be non-negative");
    const int n = h.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw Error(ErrorKind::IndexOutOfRange, "vertex out of range");
    if (u == v) throw Error(ErrorKind::SameVertex, "connectivity needs two distinct vertices");
    if (t == 0) return true;
    return max_edge_disjoint_paths(h, u, v).count >= t;
}

} // namespace asym
