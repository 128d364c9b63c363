#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "influ/types.hpp"

namespace influ::graph {

enum class Flavor { follow, rt };

const char* flavor_name(Flavor f);

// Directed unweighted simple graph for one month. Nodes are indexed by
// position in `nodes` (sorted user ids); adjacency lists are sorted and
// deduplicated.
struct Network {
    Flavor flavor = Flavor::follow;
    MonthId month;
    std::vector<UserId> nodes;
    std::vector<std::vector<std::int32_t>> out_edges;

    std::size_t node_count() const { return nodes.size(); }
    std::size_t edge_count() const;
    // Index of a user, or -1 when absent.
    std::int32_t index_of(const UserId& u) const;
    bool has_edge(const UserId& from, const UserId& to) const;

    static Network from_edges(Flavor flavor, MonthId month,
                              const std::vector<std::pair<UserId, UserId>>& edges,
                              const std::vector<UserId>& extra_nodes = {});
};

struct NodeMetric {
    std::string name;
    std::map<UserId, double> values;

    double of(const UserId& u) const {
        auto it = values.find(u);
        return it == values.end() ? 0.0 : it->second;
    }
};

// Edge (follower -> followee) per follow pair.
Network build_follow_network(const FollowSnapshot& snapshot,
                             const std::vector<UserId>& extra_nodes = {});

// Edge (retweeter -> author) iff the user retweeted any tweet by that author
// inside the slice window.
Network build_rt_network(const EventSlice& slice, MonthId month,
                         const std::vector<UserId>& extra_nodes = {});

NodeMetric in_degree(const Network& net);

struct PageRankResult {
    NodeMetric metric;
    bool converged = false;
    int iterations = 0;
};

// Power iteration with uniform teleport; dangling mass redistributed
// uniformly each iteration; stops when the L1 change drops below tol.
PageRankResult pagerank(const Network& net, double damping = 0.85, double tol = 1e-10,
                        int max_iter = 100);

// Community size per node from Leiden modularity optimization on the
// undirected projection (resolution 1.0, fixed seed).
NodeMetric community_sizes(const Network& net, std::uint64_t seed);

}  // namespace influ::graph
