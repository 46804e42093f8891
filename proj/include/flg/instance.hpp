#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flg/rational.hpp"

namespace flg {

/// A facility placement profile: entry j is the node index hosting
/// facility j. Several facilities may share a node.
using Placement = std::vector<int>;

/// The game instance: a vertex-weighted directed host graph plus the
/// facility count. An edge (u,v) means "client u shops at location v".
/// Immutable after construction and safe to share across threads.
class Instance {
public:
    struct Node {
        std::string id;
        Rational weight;
    };

    /// Validating constructor. Edges are given as index pairs.
    /// Throws InputError on duplicate ids, self-loops, negative weights
    /// or k < 1.
    Instance(std::vector<Node> nodes, const std::vector<std::pair<int, int>>& edges,
             int facility_count);

    int node_count() const { return static_cast<int>(nodes_.size()); }
    int facility_count() const { return k_; }

    const std::string& id(int i) const { return nodes_[i].id; }
    const Rational& weight(int i) const { return nodes_[i].weight; }

    /// Out-neighbors of i (locations i shops at, excluding i itself).
    const std::vector<int>& out(int i) const { return out_[i]; }
    /// In-neighbors of i (clients that shop at i, excluding i itself).
    const std::vector<int>& in(int i) const { return in_[i]; }

    /// Node index for an id; throws InputError for unknown ids.
    int node_index(const std::string& id) const;
    /// -1 instead of throwing.
    int find_node(const std::string& id) const;

    /// Sorted list of directed edges (u,v).
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Instance& other) const;

private:
    std::vector<Node> nodes_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    int k_;
    std::unordered_map<std::string, int> index_;
};

/// {i} ∪ out-neighbors of i: the locations client i can patronize.
std::vector<int> shopping_range(const Instance& inst, int i);

/// True iff location `node` is in client i's shopping range.
bool in_shopping_range(const Instance& inst, int i, int node);

/// Facility indices j with s_j in the shopping range of client i.
/// Co-located facilities appear as distinct indices.
std::vector<int> reachable_facilities(const Instance& inst, const Placement& s, int i);

/// {s_j} ∪ in-neighbors of s_j: the clients that can patronize facility j.
std::vector<int> attraction_range(const Instance& inst, const Placement& s, int j);

/// Clients with at least one facility of s within their shopping range.
std::vector<int> covered_clients(const Instance& inst, const Placement& s);

/// Throws InputError unless s has length k and every entry is a node.
void validate_placement(const Instance& inst, const Placement& s);

/// Parses "v2,v3" against the instance's node ids.
Placement parse_placement(const Instance& inst, const std::string& csv);

std::vector<std::string> placement_ids(const Instance& inst, const Placement& s);

}  // namespace flg
