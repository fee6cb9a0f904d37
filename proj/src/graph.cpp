#include "ncgap/graph.hpp"

#include <stdexcept>

namespace ncgap {

Csr build_csr(std::size_t nv, std::span<const std::pair<std::uint32_t, std::uint32_t>> edges,
              const std::vector<char>* enabled) {
    Csr g;
    g.offsets.assign(nv + 1, 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (enabled != nullptr && !(*enabled)[e]) continue;
        ++g.offsets[edges[e].first + 1];
        ++g.offsets[edges[e].second + 1];
    }
    for (std::size_t v = 0; v < nv; ++v) g.offsets[v + 1] += g.offsets[v];
    g.targets.resize(g.offsets[nv]);
    std::vector<std::uint32_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (enabled != nullptr && !(*enabled)[e]) continue;
        const auto [u, v] = edges[e];
        g.targets[cursor[u]++] = v;
        g.targets[cursor[v]++] = u;
    }
    return g;
}

void BfsWorkspace::ensure(std::size_t nv) {
    if (stamp_.size() < nv) {
        dist_.resize(nv, 0);
        stamp_.resize(nv, 0);
        label_.resize(nv, 0);
    }
    if (epoch_ == kUnreached) {  // stamp wraparound
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 0;
    }
    ++epoch_;
    order_.clear();
}

void BfsWorkspace::bfs(const Csr& g, std::uint32_t src, std::uint32_t depth_cap) {
    ensure(g.num_vertices());
    stamp_[src] = epoch_;
    dist_[src] = 0;
    order_.push_back(src);
    for (std::size_t head = 0; head < order_.size(); ++head) {
        const std::uint32_t u = order_[head];
        if (dist_[u] >= depth_cap) continue;
        for (std::uint32_t v : g.neighbors(u)) {
            if (stamp_[v] == epoch_) continue;
            stamp_[v] = epoch_;
            dist_[v] = dist_[u] + 1;
            order_.push_back(v);
        }
    }
}

std::uint32_t BfsWorkspace::min_pairwise_distance(const Csr& g,
                                                  std::span<const std::uint32_t> nodes,
                                                  std::uint32_t depth_cap) {
    if (nodes.size() < 2) return kUnreached;
    ensure(g.num_vertices());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const std::uint32_t s = nodes[i];
        if (stamp_[s] == epoch_) return 0;  // duplicate node
        stamp_[s] = epoch_;
        dist_[s] = 0;
        label_[s] = static_cast<std::uint32_t>(i);
        order_.push_back(s);
    }
    std::uint32_t best = kUnreached;
    for (std::size_t head = 0; head < order_.size(); ++head) {
        const std::uint32_t u = order_[head];
        if (2 * dist_[u] >= best) continue;  // no shorter meeting can start here
        if (dist_[u] >= depth_cap) continue;
        for (std::uint32_t v : g.neighbors(u)) {
            if (stamp_[v] == epoch_) {
                if (label_[v] != label_[u]) {
                    const std::uint32_t cand = dist_[u] + dist_[v] + 1;
                    if (cand < best) best = cand;
                }
                continue;
            }
            stamp_[v] = epoch_;
            dist_[v] = dist_[u] + 1;
            label_[v] = label_[u];
            order_.push_back(v);
        }
    }
    return best;
}

bool graph_connected(const Csr& g) {
    const std::size_t nv = g.num_vertices();
    if (nv <= 1) return true;
    BfsWorkspace ws;
    ws.bfs(g, 0);
    return ws.order().size() == nv;
}

}  // namespace ncgap
