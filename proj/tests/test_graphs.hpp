#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "esbss/digraph.hpp"

namespace esbss::test {

inline Digraph directed_cycle(std::size_t n) {
    std::vector<Arc> arcs;
    for (Vertex v = 0; v < n; ++v) {
        arcs.push_back({v, static_cast<Vertex>((v + 1) % n)});
    }
    return Digraph(n, arcs);
}

/// Both directions of every edge of the undirected cycle 0-1-...-(n-1)-0.
inline Digraph bidirected_cycle(std::size_t n) {
    std::vector<Arc> arcs;
    for (Vertex v = 0; v < n; ++v) {
        const auto w = static_cast<Vertex>((v + 1) % n);
        arcs.push_back({v, w});
        arcs.push_back({w, v});
    }
    return Digraph(n, arcs);
}

inline Digraph bidirected_complete(std::size_t n) {
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u != v) {
                arcs.push_back({u, v});
            }
        }
    }
    return Digraph(n, arcs);
}

inline Digraph bidirected_path(std::size_t n) {
    std::vector<Arc> arcs;
    for (Vertex v = 0; v + 1 < n; ++v) {
        arcs.push_back({v, v + 1});
        arcs.push_back({v + 1, v});
    }
    return Digraph(n, arcs);
}

// Clamps a random extra-arc count to what the generator accepts for n.
inline std::size_t capped_extra(std::size_t n, std::size_t extra) {
    return std::min(extra, n * (n - 1) - 2 * n);
}

inline std::string data_file(const std::string& name) {
    return std::string(ESBSS_DATA_DIR) + "/" + name;
}

}  // namespace esbss::test
