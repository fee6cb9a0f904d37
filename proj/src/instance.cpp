#include "ncgap/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ncgap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t floor_mul(const Rational& delta, std::size_t n) {
    const BigInt num = numerator(delta) * n;
    return BigInt(num / denominator(delta)).convert_to<std::uint64_t>();
}

// Left-complete binary tree with n_leaves leaves under root; every internal
// node has two children and the root doubles as the leaf when n_leaves == 1.
// Returns leaves in left-to-right order.
void grow_binary_tree(GapInstance& inst, std::uint32_t root, std::size_t n_leaves,
                      std::vector<std::uint32_t>& leaves) {
    if (n_leaves == 1) {
        leaves.push_back(root);
        return;
    }
    const std::size_t left = (n_leaves + 1) / 2;
    const std::size_t right = n_leaves - left;
    for (std::size_t part : {left, right}) {
        const std::uint32_t child = static_cast<std::uint32_t>(inst.roles.size());
        inst.roles.push_back(part == 1 ? VertexRole::leaf : VertexRole::tree_internal);
        inst.edges.emplace_back(root, child);
        grow_binary_tree(inst, child, part, leaves);
    }
}

// Streams disjoint decode sets for one session. The mock backend keeps the
// complement of U as an array and swap-removes used coordinates, which yields
// the same uniform q-subsets as decode_avoiding without rebuilding the
// complement per call.
class DecodeStream {
public:
    DecodeStream(const CodeSpec& code, std::size_t session, RngStream rng)
        : code_(code), i_(session), rng_(rng) {
        if (code.backend == CodeBackend::mock_smooth) {
            avail_.resize(code.N);
            std::iota(avail_.begin(), avail_.end(), 0);
        } else {
            used_.assign(code.N, 0);
        }
    }

    std::size_t used() const { return used_count_; }

    std::vector<std::uint32_t> next() {
        std::vector<std::uint32_t> D;
        if (code_.backend == CodeBackend::mock_smooth) {
            if (avail_.size() < code_.q)
                throw std::runtime_error("fewer than q coordinates remain outside U");
            for (std::size_t j = 0; j < code_.q; ++j) {
                const std::size_t pick =
                    static_cast<std::size_t>(rng_.below(avail_.size() - j));
                std::swap(avail_[pick], avail_[avail_.size() - 1 - j]);
            }
            D.assign(avail_.end() - code_.q, avail_.end());
            avail_.resize(avail_.size() - code_.q);
        } else {
            const std::size_t R = randomness_size(code_);
            bool found = false;
            QueryPlan plan;
            for (int attempt = 0; attempt < 10000 && !found; ++attempt) {
                plan = make_query_plan(code_, i_, static_cast<std::size_t>(rng_.below(R)));
                found = std::none_of(plan.coordinates.begin(), plan.coordinates.end(),
                                     [&](std::size_t c) { return used_[c]; });
            }
            for (std::size_t w = 0; w < R && !found; ++w) {
                plan = make_query_plan(code_, i_, w);
                found = std::none_of(plan.coordinates.begin(), plan.coordinates.end(),
                                     [&](std::size_t c) { return used_[c]; });
            }
            if (!found)
                throw std::runtime_error("no decoder randomness avoids U (smoothness violated)");
            for (std::size_t c : plan.coordinates) {
                used_[c] = 1;
                D.push_back(static_cast<std::uint32_t>(c));
            }
        }
        used_count_ += code_.q;
        std::sort(D.begin(), D.end());
        return D;
    }

private:
    const CodeSpec& code_;
    std::size_t i_;
    RngStream rng_;
    std::vector<std::uint32_t> avail_;  // mock: complement of U
    std::vector<char> used_;            // real: U membership
    std::size_t used_count_ = 0;
};

// Removes, for each surviving sink u in insertion order, every other sink of
// the same session within the threshold distance in G \ F. Pruned sinks keep
// their vertices and edges.
void prune_sinks(BuildResult& result, double threshold) {
    GapInstance& inst = result.instance;
    result.sinks_before_prune = 0;
    for (const auto& s : inst.sessions) result.sinks_before_prune += s.sinks.size();
    if (result.sinks_before_prune == 0 || threshold < 1.0) return;

    std::vector<char> present(inst.num_vertices(), 0);
    for (const auto& s : inst.sessions) {
        for (std::uint32_t v : s.sinks) present[v] = 1;
    }

    if (std::isinf(threshold)) {  // degenerate threshold keeps one sink per session
        for (auto& s : inst.sessions) {
            for (std::size_t idx = 1; idx < s.sinks.size(); ++idx) present[s.sinks[idx]] = 0;
        }
    } else {
        const Csr res = inst.residual_csr();
        const auto depth_cap = static_cast<std::uint32_t>(std::floor(threshold));
        std::vector<std::uint32_t> session_of(inst.num_vertices(), kUnreached);
        for (std::size_t i = 0; i < inst.sessions.size(); ++i) {
            for (std::uint32_t v : inst.sessions[i].sinks)
                session_of[v] = static_cast<std::uint32_t>(i);
        }
        BfsWorkspace ws;
        for (std::size_t i = 0; i < inst.sessions.size(); ++i) {
            for (std::uint32_t u : inst.sessions[i].sinks) {
                if (!present[u]) continue;
                ws.bfs(res, u, depth_cap);
                for (std::uint32_t v : ws.order()) {
                    if (v != u && present[v] && session_of[v] == i) present[v] = 0;
                }
            }
        }
    }

    for (std::size_t i = 0; i < inst.sessions.size(); ++i) {
        auto& sinks = inst.sessions[i].sinks;
        auto& sets = result.decode_sets[i];
        std::size_t out = 0;
        for (std::size_t idx = 0; idx < sinks.size(); ++idx) {
            if (present[sinks[idx]]) {
                sinks[out] = sinks[idx];
                sets[out] = std::move(sets[idx]);
                ++out;
            }
        }
        result.sinks_pruned += sinks.size() - out;
        sinks.resize(out);
        sets.resize(out);
    }
}

void init_tripartite(GapInstance& inst, const CodeSpec& code) {
    inst.roles.push_back(VertexRole::source);
    for (std::size_t j = 0; j < code.N; ++j) {
        inst.roles.push_back(VertexRole::bvertex);
        inst.edges.emplace_back(0, static_cast<std::uint32_t>(1 + j));
        inst.cut.push_back(static_cast<std::uint32_t>(j));
    }
}

double log2_of(std::size_t v) { return std::log2(static_cast<double>(v)); }

}  // namespace

double sampling_prune_threshold(std::size_t k) {
    const double denom = std::log2(log2_of(k));
    if (!(denom > 0)) return kInf;
    return log2_of(k) / denom;
}

double tree_prune_threshold(std::size_t k) { return log2_of(k) / 4.0; }

double rd_prune_threshold(std::size_t k, std::size_t q) {
    const double denom = log2_of(q) + std::log2(log2_of(k));
    if (!(denom > 0)) return kInf;
    return log2_of(k) / denom;
}

std::vector<char> GapInstance::cut_mask() const {
    std::vector<char> mask(edges.size(), 0);
    for (std::uint32_t e : cut) mask[e] = 1;
    return mask;
}

Csr GapInstance::full_csr() const { return build_csr(num_vertices(), edges); }

Csr GapInstance::residual_csr() const {
    std::vector<char> enabled(edges.size(), 1);
    for (std::uint32_t e : cut) enabled[e] = 0;
    return build_csr(num_vertices(), edges, &enabled);
}

BuildResult build_sampling_instance(const CodeSpec& code, std::uint64_t seed) {
    return build_sampling_instance_with_threshold(code, seed, sampling_prune_threshold(code.k));
}

BuildResult build_sampling_instance_with_threshold(const CodeSpec& code, std::uint64_t seed,
                                                   double prune_threshold) {
    if (code.k < 2) throw std::invalid_argument("construction needs k >= 2");
    BuildResult result;
    GapInstance& inst = result.instance;
    init_tripartite(inst, code);
    inst.sessions.resize(code.k);
    result.decode_sets.resize(code.k);
    inst.provenance = {code_to_json(code), seed, "sampling"};

    const double keep_prob = std::min(1.0, log2_of(code.k) / static_cast<double>(code.k));
    const std::uint64_t radius = floor_mul(code.delta, code.N);
    const RngStream root(seed);

    for (std::size_t i = 0; i < code.k; ++i) {
        inst.sessions[i].source = 0;
        DecodeStream decode(code, i, root.child(1).child(i));
        RngStream keep = root.child(2).child(i);
        while (decode.used() <= radius) {
            const auto D = decode.next();
            ++result.decode_sets_generated;
            if (keep.bernoulli(keep_prob)) {
                const auto v = static_cast<std::uint32_t>(inst.roles.size());
                inst.roles.push_back(VertexRole::sink);
                inst.sessions[i].sinks.push_back(v);
                for (std::uint32_t j : D) inst.edges.emplace_back(1 + j, v);
                result.decode_sets[i].push_back(D);
            }
        }
    }
    prune_sinks(result, prune_threshold);
    return result;
}

BuildResult build_tree_instance(const CodeSpec& code, std::uint64_t seed) {
    if (code.k < 2) throw std::invalid_argument("construction needs k >= 2");
    BuildResult result;
    GapInstance& inst = result.instance;

    // exact size reservation; sink count per session is delta-radius driven
    const std::uint64_t radius = floor_mul(code.delta, code.N);
    const std::size_t sets_per_session = static_cast<std::size_t>(radius / code.q) + 1;
    const std::size_t tree_extra = code.k == 1 ? 0 : 2 * code.k - 2;
    const std::size_t sink_extra = code.q == 1 ? 0 : 2 * code.q - 2;
    const std::size_t est_sinks = code.k * sets_per_session + code.k;
    inst.roles.reserve(1 + code.N * (1 + tree_extra) + est_sinks * (1 + sink_extra));
    inst.edges.reserve(code.N * (1 + tree_extra) + est_sinks * (sink_extra + code.q));

    init_tripartite(inst, code);
    inst.sessions.resize(code.k);
    result.decode_sets.resize(code.k);
    inst.provenance = {code_to_json(code), seed, "tree"};

    const RngStream root(seed);

    // complete binary tree with k leaves per B-vertex, leaf labels a uniform
    // permutation of the sessions
    std::vector<std::vector<std::uint32_t>> label_leaf(code.N);
    std::vector<std::uint32_t> leaves;
    std::vector<std::uint32_t> perm(code.k);
    for (std::size_t j = 0; j < code.N; ++j) {
        leaves.clear();
        grow_binary_tree(inst, static_cast<std::uint32_t>(1 + j), code.k, leaves);
        std::iota(perm.begin(), perm.end(), 0);
        RngStream tree_rng = root.child(1).child(j);
        tree_rng.shuffle(perm);
        label_leaf[j].resize(code.k);
        for (std::size_t pos = 0; pos < code.k; ++pos) label_leaf[j][perm[pos]] = leaves[pos];
    }

    for (std::size_t i = 0; i < code.k; ++i) {
        inst.sessions[i].source = 0;
        DecodeStream decode(code, i, root.child(2).child(i));
        while (decode.used() <= radius) {
            const auto D = decode.next();
            ++result.decode_sets_generated;
            const auto v = static_cast<std::uint32_t>(inst.roles.size());
            inst.roles.push_back(VertexRole::sink);
            inst.sessions[i].sinks.push_back(v);
            leaves.clear();
            grow_binary_tree(inst, v, code.q, leaves);
            for (std::size_t r = 0; r < D.size(); ++r) {
                inst.edges.emplace_back(label_leaf[D[r]][i], leaves[r]);
            }
            result.decode_sets[i].push_back(D);
        }
    }
    prune_sinks(result, tree_prune_threshold(code.k));
    return result;
}

std::pair<GapParams, ConditionReport> measure_params(const GapInstance& inst,
                                                     std::uint32_t b_depth_cap) {
    GapParams params;
    ConditionReport report;

    params.f = inst.cut.size();
    params.m = inst.edges.size();
    for (const auto& s : inst.sessions) params.r += s.sinks.size();

    const Csr full = inst.full_csr();
    report.connected = graph_connected(full);
    if (!report.connected) report.violations.push_back("graph disconnected before cut removal");

    report.cut_incident_to_sources = true;
    for (std::uint32_t e : inst.cut) {
        const auto [u, v] = inst.edges[e];
        const bool incident = std::any_of(
            inst.sessions.begin(), inst.sessions.end(),
            [&](const GapSession& s) { return s.source == u || s.source == v; });
        if (!incident && !inst.sessions.empty()) {
            report.cut_incident_to_sources = false;
            report.violations.push_back("cut edge " + std::to_string(e) +
                                        " is not incident to a source");
            break;
        }
    }

    const Csr res = inst.residual_csr();
    BfsWorkspace ws;
    report.disconnects = true;
    for (std::size_t i = 0; i < inst.sessions.size(); ++i) {
        const auto& s = inst.sessions[i];
        if (s.sinks.empty()) continue;
        ws.bfs(res, s.source);
        for (std::uint32_t sink : s.sinks) {
            if (ws.visited(sink)) {
                report.disconnects = false;
                report.violations.push_back("session " + std::to_string(i + 1) +
                                            " sink reachable without the cut");
                break;
            }
        }
        if (!report.disconnects) break;
    }

    bool any_pair = false;
    bool capped_unknown = false;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (const auto& s : inst.sessions) {
        if (s.sinks.size() < 2) continue;
        const std::uint32_t d = ws.min_pairwise_distance(res, s.sinks, b_depth_cap);
        if (d == kUnreached) {
            if (b_depth_cap != kUnreached) capped_unknown = true;
            continue;  // unreachable pairs impose no constraint
        }
        any_pair = true;
        best = std::min<std::uint64_t>(best, d);
    }
    if (any_pair) {
        params.b = best;
        // a capped-out session only hides pairs beyond 2*cap + 1
        params.b_is_lower_bound =
            capped_unknown && best > 2 * static_cast<std::uint64_t>(b_depth_cap) + 1;
    } else if (capped_unknown) {
        params.b = 2 * static_cast<std::uint64_t>(b_depth_cap) + 2;
        params.b_is_lower_bound = true;
    } else {
        params.b_infinite = true;
    }

    report.all_pass = report.connected && report.cut_incident_to_sources && report.disconnects;
    return {params, report};
}

Rational gap_lower_bound(const GapParams& p, std::string* warning) {
    if (p.r == 0) {
        if (warning != nullptr) *warning = "instance has no sinks; bound degenerates to 0";
        return Rational(0);
    }
    Rational denom(p.f);
    if (!p.b_infinite) {
        if (p.b == 0) throw std::invalid_argument("gap bound needs b > 0");
        denom += Rational(2 * BigInt(p.m), BigInt(p.b));
    }
    if (denom <= 0) throw std::invalid_argument("gap bound needs f + 2m/b > 0");
    return p.a * Rational(p.r) / denom;
}

DualCertificate dual_certificate(const GapInstance& inst, const GapParams& params) {
    if (!params.b_infinite && params.b < 2)
        throw std::invalid_argument("dual certificate needs b >= 2");
    DualCertificate cert;
    const Rational off_cut = params.b_infinite ? Rational(0) : Rational(2, params.b);
    cert.y.assign(inst.edges.size(), off_cut);
    for (std::uint32_t e : inst.cut) cert.y[e] = 1;
    Rational num(0);
    for (const Rational& ye : cert.y) num += ye;  // unit capacities
    Rational den(0);
    for (const auto& s : inst.sessions) {
        cert.z.push_back(Rational(s.sinks.size()));
        den += Rational(s.sinks.size());  // unit demands
    }
    if (den == 0) throw std::invalid_argument("dual certificate needs at least one sink");
    cert.objective = num / den;
    return cert;
}

DualTreeCheck check_dual_on_trees(
    const GapInstance& inst, const DualCertificate& cert,
    const std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>>& trees) {
    DualTreeCheck check;
    check.ok = true;
    for (const auto& [session, tree_edges] : trees) {
        if (session >= inst.sessions.size()) throw std::invalid_argument("bad session index");
        const auto& s = inst.sessions[session];

        // spanning check: the edges must form a tree containing S_i
        std::vector<std::uint32_t> verts;
        for (std::uint32_t e : tree_edges) {
            if (e >= inst.edges.size()) throw std::invalid_argument("bad edge index");
            verts.push_back(inst.edges[e].first);
            verts.push_back(inst.edges[e].second);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (!tree_edges.empty() && verts.size() != tree_edges.size() + 1)
            throw std::invalid_argument("edge set is not a tree");
        auto has_vertex = [&](std::uint32_t v) {
            return std::binary_search(verts.begin(), verts.end(), v) ||
                   (tree_edges.empty() && s.sinks.empty());
        };
        if (!has_vertex(s.source) && !(s.sinks.empty() && tree_edges.empty()))
            throw std::invalid_argument("tree does not span the session source");
        for (std::uint32_t sink : s.sinks) {
            if (!has_vertex(sink)) throw std::invalid_argument("tree does not span a sink");
        }

        Rational total(0);
        for (std::uint32_t e : tree_edges) total += cert.y[e];
        if (total < cert.z[session]) {
            check.ok = false;
            check.violations.push_back("session " + std::to_string(session + 1) + ": sum y = " +
                                       rational_str(total) + " < z = " +
                                       rational_str(cert.z[session]));
        }
    }
    return check;
}

std::string role_name(VertexRole r) {
    switch (r) {
        case VertexRole::source: return "source";
        case VertexRole::bvertex: return "bvertex";
        case VertexRole::tree_internal: return "tree_internal";
        case VertexRole::sink: return "sink";
        case VertexRole::leaf: return "leaf";
    }
    return "?";
}

VertexRole role_from_name(const std::string& name) {
    if (name == "source") return VertexRole::source;
    if (name == "bvertex") return VertexRole::bvertex;
    if (name == "tree_internal") return VertexRole::tree_internal;
    if (name == "sink") return VertexRole::sink;
    if (name == "leaf") return VertexRole::leaf;
    throw std::invalid_argument("unknown vertex role: " + name);
}

Json instance_to_json(const GapInstance& inst) {
    Json j;
    Json vertices = Json::array();
    for (std::size_t v = 0; v < inst.roles.size(); ++v) {
        vertices.push_back({{"id", v}, {"role", role_name(inst.roles[v])}});
    }
    j["vertices"] = std::move(vertices);
    Json edges = Json::array();
    for (const auto& [u, v] : inst.edges) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    j["cut"] = inst.cut;
    Json sessions = Json::array();
    for (const auto& s : inst.sessions) {
        sessions.push_back({{"source", s.source}, {"sinks", s.sinks}});
    }
    j["sessions"] = std::move(sessions);
    j["provenance"] = {{"code", inst.provenance.code},
                       {"seed", inst.provenance.seed},
                       {"algorithm", inst.provenance.algorithm}};
    return j;
}

GapInstance instance_from_json(const Json& j) {
    GapInstance inst;
    const auto& vertices = j.at("vertices");
    inst.roles.resize(vertices.size());
    for (const auto& v : vertices) {
        const auto id = v.at("id").get<std::size_t>();
        if (id >= inst.roles.size()) throw std::invalid_argument("vertex id out of range");
        inst.roles[id] = role_from_name(v.at("role").get<std::string>());
    }
    for (const auto& e : j.at("edges")) {
        inst.edges.emplace_back(e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>());
    }
    inst.cut = j.at("cut").get<std::vector<std::uint32_t>>();
    for (const auto& s : j.at("sessions")) {
        GapSession session;
        session.source = s.at("source").get<std::uint32_t>();
        session.sinks = s.at("sinks").get<std::vector<std::uint32_t>>();
        inst.sessions.push_back(std::move(session));
    }
    const auto& prov = j.at("provenance");
    inst.provenance.code = prov.at("code");
    inst.provenance.seed = prov.at("seed").get<std::uint64_t>();
    inst.provenance.algorithm = prov.at("algorithm").get<std::string>();
    for (const auto& [u, v] : inst.edges) {
        if (u >= inst.roles.size() || v >= inst.roles.size())
            throw std::invalid_argument("edge endpoint out of range");
    }
    for (std::uint32_t e : inst.cut) {
        if (e >= inst.edges.size()) throw std::invalid_argument("cut edge index out of range");
    }
    return inst;
}

std::string instance_to_dot(const GapInstance& inst) {
    std::ostringstream out;
    out << "graph gap {\n";
    const char* shapes[] = {"box", "circle", "point", "doublecircle", "point"};
    for (std::size_t v = 0; v < inst.roles.size(); ++v) {
        out << "  v" << v << " [shape=" << shapes[static_cast<int>(inst.roles[v])] << ",role=\""
            << role_name(inst.roles[v]) << "\"];\n";
    }
    const auto mask = inst.cut_mask();
    for (std::size_t e = 0; e < inst.edges.size(); ++e) {
        out << "  v" << inst.edges[e].first << " -- v" << inst.edges[e].second;
        if (mask[e]) out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

StructureInfo analyze_instance_structure(const GapInstance& inst) {
    StructureInfo info;
    const std::size_t nv = inst.num_vertices();
    info.coord_of_vertex.assign(nv, kUnreached);
    info.sink_of_vertex.assign(nv, kUnreached);
    info.parent.assign(nv, kUnreached);
    info.parent_edge.assign(nv, kUnreached);
    info.edge_kind.assign(inst.edges.size(), 2);
    for (std::uint32_t e : inst.cut) info.edge_kind[e] = 0;

    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj(nv);
    for (std::size_t e = 0; e < inst.edges.size(); ++e) {
        const auto [u, v] = inst.edges[e];
        adj[u].emplace_back(v, static_cast<std::uint32_t>(e));
        adj[v].emplace_back(u, static_cast<std::uint32_t>(e));
    }

    for (std::size_t v = 0; v < nv; ++v) {
        if (inst.roles[v] == VertexRole::bvertex)
            info.bvertices.push_back(static_cast<std::uint32_t>(v));
        if (inst.roles[v] == VertexRole::sink) info.sinks.push_back(static_cast<std::uint32_t>(v));
    }

    // Tree traversal from each root. Leaves never expand: their single tree
    // edge points to the parent, all other incident edges are joins.
    auto claim_tree = [&](std::uint32_t root, std::uint32_t coord, std::uint32_t sink) {
        std::vector<std::uint32_t> stack = {root};
        if (coord != kUnreached) info.coord_of_vertex[root] = coord;
        if (sink != kUnreached) info.sink_of_vertex[root] = sink;
        while (!stack.empty()) {
            const std::uint32_t u = stack.back();
            stack.pop_back();
            if (inst.roles[u] == VertexRole::leaf) continue;
            for (const auto& [v, e] : adj[u]) {
                if (info.edge_kind[e] == 0) continue;  // cut edge
                if (inst.roles[v] != VertexRole::tree_internal && inst.roles[v] != VertexRole::leaf)
                    continue;
                if (info.coord_of_vertex[v] != kUnreached || info.sink_of_vertex[v] != kUnreached)
                    continue;
                if (v == root) continue;
                info.parent[v] = u;
                info.parent_edge[v] = e;
                info.edge_kind[e] = 1;
                if (coord != kUnreached) info.coord_of_vertex[v] = coord;
                if (sink != kUnreached) info.sink_of_vertex[v] = sink;
                stack.push_back(v);
            }
        }
    };

    for (std::size_t rank = 0; rank < info.bvertices.size(); ++rank) {
        claim_tree(info.bvertices[rank], static_cast<std::uint32_t>(rank), kUnreached);
    }
    for (std::uint32_t s : info.sinks) claim_tree(s, kUnreached, s);

    // joins connect a B-side vertex to a sink-side vertex
    std::vector<std::vector<std::uint32_t>> coords_by_sink(nv);
    for (std::size_t e = 0; e < inst.edges.size(); ++e) {
        if (info.edge_kind[e] != 2) continue;
        auto [u, v] = inst.edges[e];
        if (info.coord_of_vertex[v] != kUnreached) std::swap(u, v);
        if (info.coord_of_vertex[u] == kUnreached || info.sink_of_vertex[v] == kUnreached)
            throw std::invalid_argument("edge " + std::to_string(e) +
                                        " joins neither a B-tree to a sink tree");
        coords_by_sink[info.sink_of_vertex[v]].push_back(info.coord_of_vertex[u]);
    }
    for (std::uint32_t s : info.sinks) {
        auto& coords = coords_by_sink[s];
        std::sort(coords.begin(), coords.end());
        info.sink_coords.push_back(std::move(coords));
    }
    return info;
}

}  // namespace ncgap
