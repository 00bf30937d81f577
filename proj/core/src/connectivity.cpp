#include "esbss/connectivity.hpp"

#include <algorithm>
#include <limits>

#include "esbss/error.hpp"

namespace esbss {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

// Marks every vertex reachable from `root` along out-arcs (forward) or
// in-arcs (backward), never crossing `skip`.
std::vector<bool> reach(const Digraph& g, Vertex root, bool forward, std::optional<ArcId> skip,
                        std::vector<ArcId>* tree = nullptr) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Vertex> queue{root};
    seen[root] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        for (ArcId a : forward ? g.out_arcs(v) : g.in_arcs(v)) {
            if (skip && a == *skip) {
                continue;
            }
            const Vertex w = forward ? g.arc(a).head : g.arc(a).tail;
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
                if (tree) {
                    tree->push_back(a);
                }
            }
        }
    }
    return seen;
}

bool all_of(const std::vector<bool>& flags) {
    return std::ranges::all_of(flags, [](bool b) { return b; });
}

bool strongly_connected_impl(const Digraph& g, std::optional<ArcId> skip) {
    if (g.vertex_count() == 0) {
        return false;
    }
    return all_of(reach(g, 0, true, skip)) && all_of(reach(g, 0, false, skip));
}

}  // namespace

SccPartition sccs(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> index(n, kUnvisited);
    std::vector<std::uint32_t> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<Vertex> stack;
    std::vector<VertexSet> found;
    std::uint32_t counter = 0;

    struct Frame {
        Vertex v;
        std::size_t next;
    };
    std::vector<Frame> frames;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) {
            continue;
        }
        frames.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!frames.empty()) {
            Frame& f = frames.back();
            const Vertex v = f.v;
            const auto out = g.out_arcs(v);
            if (f.next < out.size()) {
                const Vertex w = g.arc(out[f.next++]).head;
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }

            frames.pop_back();
            if (!frames.empty()) {
                const Vertex parent = frames.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
            if (low[v] == index[v]) {
                VertexSet comp;
                Vertex w = 0;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                std::ranges::sort(comp);
                found.push_back(std::move(comp));
            }
        }
    }

    std::ranges::sort(found, {}, [](const VertexSet& c) { return c.front(); });
    SccPartition part{std::vector<std::uint32_t>(n, 0), std::move(found)};
    for (std::uint32_t c = 0; c < part.components.size(); ++c) {
        for (Vertex v : part.components[c]) {
            part.comp_of[v] = c;
        }
    }
    return part;
}

bool is_strongly_connected(const Digraph& g) { return strongly_connected_impl(g, std::nullopt); }

bool is_strongly_connected_without(const Digraph& g, ArcId skip) {
    return strongly_connected_impl(g, skip);
}

BlockDecomposition blocks(const UndirectedView& u) {
    const auto adj = u.adjacency();
    const std::size_t n = u.n;
    std::vector<std::uint32_t> disc(n, kUnvisited);
    std::vector<std::uint32_t> low(n, 0);
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    std::uint32_t counter = 0;

    BlockDecomposition out;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };
    std::vector<Frame> frames;

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != kUnvisited) {
            continue;
        }
        disc[root] = low[root] = counter++;
        if (adj[root].empty()) {
            out.blocks.push_back({root});
            continue;
        }
        frames.push_back({root, root, 0});

        while (!frames.empty()) {
            Frame& f = frames.back();
            const Vertex v = f.v;
            if (f.next < adj[v].size()) {
                const Vertex w = adj[v][f.next++];
                if (disc[w] == kUnvisited) {
                    edge_stack.emplace_back(v, w);
                    disc[w] = low[w] = counter++;
                    frames.push_back({w, v, 0});
                } else if (w != f.parent && disc[w] < disc[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }

            frames.pop_back();
            if (frames.empty()) {
                break;
            }
            const Vertex p = frames.back().v;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= disc[p]) {
                VertexSet block;
                while (true) {
                    const auto e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e.first);
                    block.push_back(e.second);
                    if (e.first == p && e.second == v) {
                        break;
                    }
                }
                std::ranges::sort(block);
                block.erase(std::ranges::unique(block).begin(), block.end());
                out.blocks.push_back(std::move(block));
            }
        }
    }

    std::ranges::sort(out.blocks);
    std::vector<std::uint32_t> membership(n, 0);
    for (const auto& b : out.blocks) {
        for (Vertex v : b) {
            ++membership[v];
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (membership[v] >= 2) {
            out.cut_vertices.push_back(v);
        }
    }
    return out;
}

bool is_biconnected(const UndirectedView& u) {
    if (u.n < 3) {
        return false;
    }
    const auto decomposition = blocks(u);
    return decomposition.blocks.size() == 1 && decomposition.blocks.front().size() == u.n;
}

ArcSet strong_bridges(const Digraph& g) {
    if (!is_strongly_connected(g)) {
        throw PreconditionError("graph not strongly connected");
    }
    std::vector<ArcId> candidates;
    reach(g, 0, true, std::nullopt, &candidates);
    reach(g, 0, false, std::nullopt, &candidates);
    std::ranges::sort(candidates);
    candidates.erase(std::ranges::unique(candidates).begin(), candidates.end());

    ArcSet bridges;
    for (ArcId a : candidates) {
        if (!is_strongly_connected_without(g, a)) {
            bridges.push_back(a);
        }
    }
    return bridges;
}

bool is_two_edge_connected(const Digraph& g) {
    return g.vertex_count() >= 2 && is_strongly_connected(g) && strong_bridges(g).empty();
}

}  // namespace esbss
