#include "flg/instance.hpp"

#include <algorithm>
#include <sstream>

#include "flg/errors.hpp"

namespace flg {

Instance::Instance(std::vector<Node> nodes, const std::vector<std::pair<int, int>>& edges,
                   int facility_count)
    : nodes_(std::move(nodes)), k_(facility_count) {
    if (nodes_.empty()) throw InputError("no nodes");
    if (k_ < 1) throw InputError("facility count must be at least 1");
    const int n = node_count();
    for (int i = 0; i < n; ++i) {
        if (nodes_[i].weight < 0)
            throw InputError("negative weight on node '" + nodes_[i].id + "'");
        if (!index_.emplace(nodes_[i].id, i).second)
            throw InputError("duplicate node id '" + nodes_[i].id + "'");
    }
    out_.assign(n, {});
    in_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw InputError("edge endpoint index out of range");
        if (u == v) throw InputError("self-loop edge on '" + nodes_[u].id + "'");
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    for (auto& adj : out_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    for (auto& adj : in_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
}

int Instance::node_index(const std::string& id) const {
    const int i = find_node(id);
    if (i < 0) throw InputError("unknown node id '" + id + "'");
    return i;
}

int Instance::find_node(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

std::vector<std::pair<int, int>> Instance::edges() const {
    std::vector<std::pair<int, int>> result;
    for (int u = 0; u < node_count(); ++u)
        for (int v : out_[u]) result.emplace_back(u, v);
    return result;
}

bool Instance::operator==(const Instance& other) const {
    if (k_ != other.k_ || nodes_.size() != other.nodes_.size()) return false;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].id != other.nodes_[i].id || nodes_[i].weight != other.nodes_[i].weight)
            return false;
    return out_ == other.out_;
}

std::vector<int> shopping_range(const Instance& inst, int i) {
    std::vector<int> range = inst.out(i);
    range.insert(std::lower_bound(range.begin(), range.end(), i), i);
    return range;
}

bool in_shopping_range(const Instance& inst, int i, int node) {
    if (node == i) return true;
    const auto& adj = inst.out(i);
    return std::binary_search(adj.begin(), adj.end(), node);
}

std::vector<int> reachable_facilities(const Instance& inst, const Placement& s, int i) {
    std::vector<int> facs;
    for (int j = 0; j < static_cast<int>(s.size()); ++j)
        if (in_shopping_range(inst, i, s[j])) facs.push_back(j);
    return facs;
}

std::vector<int> attraction_range(const Instance& inst, const Placement& s, int j) {
    if (j < 0 || j >= static_cast<int>(s.size())) throw InputError("facility index out of range");
    std::vector<int> range = inst.in(s[j]);
    auto pos = std::lower_bound(range.begin(), range.end(), s[j]);
    if (pos == range.end() || *pos != s[j]) range.insert(pos, s[j]);
    return range;
}

std::vector<int> covered_clients(const Instance& inst, const Placement& s) {
    std::vector<char> covered(inst.node_count(), 0);
    for (int loc : s) {
        covered[loc] = 1;
        for (int i : inst.in(loc)) covered[i] = 1;
    }
    std::vector<int> clients;
    for (int i = 0; i < inst.node_count(); ++i)
        if (covered[i]) clients.push_back(i);
    return clients;
}

void validate_placement(const Instance& inst, const Placement& s) {
    if (static_cast<int>(s.size()) != inst.facility_count()) {
        std::ostringstream msg;
        msg << "placement has " << s.size() << " entries, expected " << inst.facility_count();
        throw InputError(msg.str());
    }
    for (int loc : s)
        if (loc < 0 || loc >= inst.node_count()) throw InputError("placement entry is not a node");
}

Placement parse_placement(const Instance& inst, const std::string& csv) {
    Placement s;
    std::stringstream stream(csv);
    std::string token;
    while (std::getline(stream, token, ',')) {
        const auto begin = token.find_first_not_of(" \t");
        if (begin == std::string::npos) throw InputError("empty placement entry");
        const auto end = token.find_last_not_of(" \t");
        s.push_back(inst.node_index(token.substr(begin, end - begin + 1)));
    }
    if (s.empty()) throw InputError("empty placement");
    return s;
}

std::vector<std::string> placement_ids(const Instance& inst, const Placement& s) {
    std::vector<std::string> ids;
    ids.reserve(s.size());
    for (int loc : s) ids.push_back(inst.id(loc));
    return ids;
}

}  // namespace flg
