#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ncgap/codes.hpp"
#include "ncgap/common.hpp"
#include "ncgap/graph.hpp"

namespace ncgap {

enum class VertexRole : std::uint8_t { source, bvertex, tree_internal, sink, leaf };

std::string role_name(VertexRole r);
VertexRole role_from_name(const std::string& name);

struct GapSession {
    std::uint32_t source = 0;
    std::vector<std::uint32_t> sinks;
};

struct Provenance {
    Json code;  // code descriptor, null for hand-built instances
    std::uint64_t seed = 0;
    std::string algorithm = "manual";
};

// Multicast instance with a designated cut. All edge capacities and demands
// are unit-valued. Pruned sinks stay in the graph; only the session sink
// lists shrink.
struct GapInstance {
    std::vector<VertexRole> roles;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::vector<std::uint32_t> cut;  // edge indices, all incident to the source
    std::vector<GapSession> sessions;
    Provenance provenance;

    std::size_t num_vertices() const { return roles.size(); }
    std::vector<char> cut_mask() const;
    Csr full_csr() const;
    Csr residual_csr() const;  // G \ F
};

struct BuildResult {
    GapInstance instance;
    // per session, decode coordinate sets of surviving sinks, aligned with
    // instance.sessions[i].sinks
    std::vector<std::vector<std::vector<std::uint32_t>>> decode_sets;
    std::size_t decode_sets_generated = 0;
    std::size_t sinks_before_prune = 0;
    std::size_t sinks_pruned = 0;
};

// Pruning thresholds, base-2 logarithms throughout. The sampling threshold
// degenerates to +infinity at k = 2 (log2 log2 2 = 0).
double sampling_prune_threshold(std::size_t k);
double tree_prune_threshold(std::size_t k);
double rd_prune_threshold(std::size_t k, std::size_t q);

// Tripartite construction: source, one vertex per codeword coordinate with
// all source edges forming the cut, and per session a stream of disjoint
// decode sets kept as sinks with probability min(1, log2(k)/k), followed by
// distance pruning.
BuildResult build_sampling_instance(const CodeSpec& code, std::uint64_t seed);
BuildResult build_sampling_instance_with_threshold(const CodeSpec& code, std::uint64_t seed,
                                                   double prune_threshold);

// Binary-tree construction: every B-vertex grows a complete binary tree with
// k leaves labeled by a random permutation; every decode set becomes a sink
// with a q-leaf tree joined leaf-to-leaf; no sampling; distance pruning at
// log2(k)/4.
BuildResult build_tree_instance(const CodeSpec& code, std::uint64_t seed);

struct GapParams {
    Rational a = 1;  // coding throughput; supplied by the coding simulation
    bool a_known = false;
    bool b_infinite = false;
    std::uint64_t b = 0;
    bool b_is_lower_bound = false;  // measured under a depth cap
    std::uint64_t f = 0;            // cut edges
    std::uint64_t m = 0;            // total edges
    std::uint64_t r = 0;            // total sinks
};

struct ConditionReport {
    bool connected = false;
    bool cut_incident_to_sources = false;
    bool disconnects = false;  // removing F separates every source from its sinks
    bool all_pass = false;
    std::vector<std::string> violations;
};

// Verifies the gap-instance conditions and measures (b, f, m, r). The
// throughput a is not computed here. With a finite b_depth_cap, pair searches
// stop at that radius; when no pair is found the reported b is a lower bound.
std::pair<GapParams, ConditionReport> measure_params(const GapInstance& inst,
                                                     std::uint32_t b_depth_cap = kUnreached);

// a*r / (f + 2m/b), exact; b = infinity degenerates to a*r/f.
Rational gap_lower_bound(const GapParams& p, std::string* warning = nullptr);

struct DualCertificate {
    std::vector<Rational> y;  // per edge
    std::vector<Rational> z;  // per session
    Rational objective;
};

// y = 1 on the cut and 2/b elsewhere (0 when b is infinite), z_i = |R_i|.
// Requires b >= 2 when finite.
DualCertificate dual_certificate(const GapInstance& inst, const GapParams& params);

struct DualTreeCheck {
    bool ok = false;
    std::vector<std::string> violations;
};

// Sound partial feasibility check of sum_{e in T} y_e >= z_i over the
// supplied trees; full feasibility quantifies over all Steiner trees.
DualTreeCheck check_dual_on_trees(
    const GapInstance& inst, const DualCertificate& cert,
    const std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>>& trees);

Json instance_to_json(const GapInstance& inst);
GapInstance instance_from_json(const Json& j);
std::string instance_to_dot(const GapInstance& inst);

// Structural decomposition of a built instance, recovered from roles and
// adjacency alone so that instances loaded from JSON can be re-analyzed.
struct StructureInfo {
    std::vector<std::uint32_t> bvertices;        // ascending; rank = codeword coordinate
    std::vector<std::uint32_t> coord_of_vertex;  // per vertex, kUnreached outside B-trees
    std::vector<std::uint32_t> sink_of_vertex;   // per vertex, kUnreached outside sink trees
    std::vector<std::uint32_t> parent;           // toward the owning root, kUnreached elsewhere
    std::vector<std::uint32_t> parent_edge;      // edge index used by parent[]
    std::vector<std::uint32_t> sinks;            // all sink-role vertices
    std::vector<std::vector<std::uint32_t>> sink_coords;  // sorted decode coordinates per sink
    std::vector<char> edge_kind;                 // 0 cut, 1 tree, 2 join
};

StructureInfo analyze_instance_structure(const GapInstance& inst);

}  // namespace ncgap
