#include "esbss/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace esbss::oracle {

namespace {

using Matrix = std::vector<std::vector<bool>>;

bool reaches_all(const Matrix& adj, bool forward) {
    const std::size_t n = adj.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> todo{0};
    seen[0] = true;
    while (!todo.empty()) {
        const std::size_t v = todo.back();
        todo.pop_back();
        for (std::size_t w = 0; w < n; ++w) {
            const bool edge = forward ? adj[v][w] : adj[w][v];
            if (edge && !seen[w]) {
                seen[w] = true;
                todo.push_back(w);
            }
        }
    }
    return std::ranges::all_of(seen, [](bool b) { return b; });
}

bool strongly_connected(const Matrix& adj) {
    return !adj.empty() && reaches_all(adj, true) && reaches_all(adj, false);
}

// Connectivity of the undirected view of `adj` with vertex `gone` deleted
// (pass n for none).
bool connected_without(const Matrix& adj, std::size_t gone) {
    const std::size_t n = adj.size();
    std::size_t start = gone == 0 ? 1 : 0;
    if (start >= n) {
        return true;
    }
    std::vector<bool> seen(n, false);
    seen[start] = true;
    if (gone < n) {
        seen[gone] = true;
    }
    std::vector<std::size_t> todo{start};
    while (!todo.empty()) {
        const std::size_t v = todo.back();
        todo.pop_back();
        for (std::size_t w = 0; w < n; ++w) {
            if ((adj[v][w] || adj[w][v]) && !seen[w]) {
                seen[w] = true;
                todo.push_back(w);
            }
        }
    }
    return std::ranges::all_of(seen, [](bool b) { return b; });
}

bool biconnected(const Matrix& adj) {
    const std::size_t n = adj.size();
    if (n < 3 || !connected_without(adj, n)) {
        return false;
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (!connected_without(adj, x)) {
            return false;
        }
    }
    return true;
}

bool strongly_biconnected(const Matrix& adj) { return strongly_connected(adj) && biconnected(adj); }

// Advances `c` to the next k-combination of 0..m-1 in lexicographic order.
bool next_combination(std::vector<std::uint32_t>& c, std::size_t m) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < m - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

struct DisjointSets {
    std::vector<std::size_t> parent;

    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

bool brute_feasible(const Digraph& g, std::span<const ArcId> s) {
    const std::size_t n = g.vertex_count();
    if (n < 3) {
        return false;
    }
    Matrix adj(n, std::vector<bool>(n, false));
    std::vector<Arc> chosen;
    for (ArcId a : s) {
        const Arc& arc = g.arc(a);
        if (!adj[arc.tail][arc.head]) {
            adj[arc.tail][arc.head] = true;
            chosen.push_back(arc);
        }
    }
    if (!strongly_biconnected(adj)) {
        return false;
    }
    for (const Arc& arc : chosen) {
        adj[arc.tail][arc.head] = false;
        const bool ok = strongly_biconnected(adj);
        adj[arc.tail][arc.head] = true;
        if (!ok) {
            return false;
        }
    }
    return true;
}

ExactResult exact_m2esbss(const Digraph& g, std::uint64_t budget) {
    const std::size_t m = g.arc_count();
    ExactResult result;
    result.witness = g.all_arcs();
    result.opt_size = m;

    auto charge = [&] {
        if (result.explored >= budget) {
            throw BudgetExceeded(result.opt_size, result.witness);
        }
        ++result.explored;
    };

    charge();
    if (!brute_feasible(g, result.witness)) {
        throw PreconditionError("input is not 2-edge strongly biconnected");
    }

    for (std::size_t k = m; k-- > 0;) {
        std::vector<std::uint32_t> combo(k);
        std::iota(combo.begin(), combo.end(), 0u);
        ArcSet subset(k);
        std::uint64_t checks = 0;
        bool found = false;
        do {
            charge();
            ++checks;
            for (std::size_t j = 0; j < k; ++j) {
                subset[j] = ArcId{combo[j]};
            }
            if (brute_feasible(g, subset)) {
                found = true;
                break;
            }
        } while (next_combination(combo, m));

        if (!found) {
            result.certified_checks = checks;
            return result;
        }
        result.opt_size = k;
        result.witness = subset;
    }
    return result;
}

SbcDecomposition brute_sbcs(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 12) {
        throw RangeError("brute_sbcs supports n <= 12, got " + std::to_string(n));
    }

    Matrix reach(n, std::vector<bool>(n, false));
    for (std::size_t v = 0; v < n; ++v) {
        reach[v][v] = true;
    }
    for (const Arc& a : g.arcs()) {
        reach[a.tail][a.head] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (reach[i][k] && reach[k][j]) {
                    reach[i][j] = true;
                }
            }
        }
    }

    SbcDecomposition out;
    std::vector<bool> assigned(n, false);
    for (std::size_t root = 0; root < n; ++root) {
        if (assigned[root]) {
            continue;
        }
        std::vector<std::size_t> scc;
        for (std::size_t v = 0; v < n; ++v) {
            if (reach[root][v] && reach[v][root]) {
                scc.push_back(v);
                assigned[v] = true;
            }
        }
        if (scc.size() == 1) {
            out.components.push_back({static_cast<Vertex>(root)});
            continue;
        }

        std::vector<bool> inside(n, false);
        for (std::size_t v : scc) {
            inside[v] = true;
        }
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        Matrix undirected(n, std::vector<bool>(n, false));
        for (const Arc& a : g.arcs()) {
            if (inside[a.tail] && inside[a.head] && !undirected[a.tail][a.head]) {
                undirected[a.tail][a.head] = undirected[a.head][a.tail] = true;
                edges.emplace_back(a.tail, a.head);
            }
        }

        // label[x][v]: component of v once x is deleted from the SCC.
        std::vector<std::vector<std::size_t>> label(n, std::vector<std::size_t>(n, n));
        for (std::size_t x : scc) {
            std::size_t next_label = 0;
            for (std::size_t s : scc) {
                if (s == x || label[x][s] != n) {
                    continue;
                }
                std::vector<std::size_t> todo{s};
                label[x][s] = next_label;
                while (!todo.empty()) {
                    const std::size_t v = todo.back();
                    todo.pop_back();
                    for (std::size_t w : scc) {
                        if (w != x && undirected[v][w] && label[x][w] == n) {
                            label[x][w] = next_label;
                            todo.push_back(w);
                        }
                    }
                }
                ++next_label;
            }
        }

        // Two edges share a block iff no single vertex deletion separates them.
        DisjointSets sets(edges.size());
        for (std::size_t e = 0; e < edges.size(); ++e) {
            for (std::size_t f = e + 1; f < edges.size(); ++f) {
                bool separated = false;
                for (std::size_t x : scc) {
                    const std::size_t a = edges[e].first == x ? edges[e].second : edges[e].first;
                    const std::size_t c = edges[f].first == x ? edges[f].second : edges[f].first;
                    if (label[x][a] != label[x][c]) {
                        separated = true;
                        break;
                    }
                }
                if (!separated) {
                    sets.unite(e, f);
                }
            }
        }
        std::vector<std::vector<bool>> in_block(edges.size(), std::vector<bool>(n, false));
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const std::size_t r = sets.find(e);
            in_block[r][edges[e].first] = in_block[r][edges[e].second] = true;
        }
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (sets.find(e) != e) {
                continue;
            }
            VertexSet block;
            for (std::size_t v = 0; v < n; ++v) {
                if (in_block[e][v]) {
                    block.push_back(static_cast<Vertex>(v));
                }
            }
            out.components.push_back(std::move(block));
        }
    }

    std::ranges::sort(out.components);
    out.membership.assign(n, {});
    for (std::uint32_t c = 0; c < out.components.size(); ++c) {
        for (Vertex v : out.components[c]) {
            out.membership[v].push_back(c);
        }
    }
    return out;
}

}  // namespace esbss::oracle
