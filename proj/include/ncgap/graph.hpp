#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace ncgap {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// Compressed adjacency for an undirected graph.
struct Csr {
    std::vector<std::uint32_t> offsets;  // size nv + 1
    std::vector<std::uint32_t> targets;

    std::size_t num_vertices() const { return offsets.empty() ? 0 : offsets.size() - 1; }
    std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
        return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
    }
};

// enabled: optional per-edge mask; edges with enabled[e] == 0 are skipped.
Csr build_csr(std::size_t nv, std::span<const std::pair<std::uint32_t, std::uint32_t>> edges,
              const std::vector<char>* enabled = nullptr);

// BFS buffers with epoch-stamped visitation; repeated searches on large graphs
// avoid reallocation and O(n) clears.
class BfsWorkspace {
public:
    void bfs(const Csr& g, std::uint32_t src, std::uint32_t depth_cap = kUnreached);

    bool visited(std::uint32_t v) const { return v < stamp_.size() && stamp_[v] == epoch_; }
    std::uint32_t dist(std::uint32_t v) const { return visited(v) ? dist_[v] : kUnreached; }
    const std::vector<std::uint32_t>& order() const { return order_; }

    // Minimum pairwise distance among `nodes` via one labeled multi-source
    // BFS; kUnreached when fewer than two nodes or no pair is connected.
    // depth_cap bounds the exploration radius from each node.
    std::uint32_t min_pairwise_distance(const Csr& g, std::span<const std::uint32_t> nodes,
                                        std::uint32_t depth_cap = kUnreached);

private:
    void ensure(std::size_t nv);
    std::vector<std::uint32_t> dist_;
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint32_t> label_;
    std::vector<std::uint32_t> order_;
    std::uint32_t epoch_ = 0;
};

bool graph_connected(const Csr& g);

}  // namespace ncgap
