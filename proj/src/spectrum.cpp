#include "lenfun/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

namespace lenfun {

const char* to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::Discrete: return "discrete";
        case NodeKind::Dense: return "dense";
        case NodeKind::Unbranched: return "unbranched";
    }
    return "?";
}

std::optional<NodeKind> parse_node_kind(const std::string& text) {
    std::string lower = text;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == "discrete") return NodeKind::Discrete;
    if (lower == "dense") return NodeKind::Dense;
    if (lower == "unbranched") return NodeKind::Unbranched;
    return std::nullopt;
}

SpectrumTree::SpectrumTree(std::vector<PrimeNode> nodes) {
    for (PrimeNode& n : nodes) {
        const PrimeId id = n.id;
        if (!nodes_.emplace(id, std::move(n)).second)
            throw std::invalid_argument("SpectrumTree: duplicate node id " + id);
    }
}

std::vector<std::string> SpectrumTree::validate() const {
    std::vector<std::string> violations;
    for (const auto& [id, n] : nodes_) {
        if (id == kRootId) violations.push_back("node uses the reserved root id " + kRootId);
        if (id.empty()) violations.push_back("empty node id");
        if (n.parent) {
            if (*n.parent == kRootId)
                violations.push_back("node " + id + ": write a root child with parent null");
            else if (!nodes_.count(*n.parent))
                violations.push_back("node " + id + ": unknown parent " + *n.parent);
        }
    }
    if (!violations.empty()) {
        valid_cache_ = false;
        return violations;
    }
    // Cycle check: walk each parent chain with a step bound.
    for (const auto& [id, n] : nodes_) {
        std::size_t steps = 0;
        const PrimeNode* cur = &n;
        while (cur->parent) {
            if (++steps > nodes_.size()) {
                violations.push_back("cycle through node " + id);
                break;
            }
            cur = &nodes_.at(*cur->parent);
        }
    }
    valid_cache_ = violations.empty();
    return violations;
}

void SpectrumTree::check_validated() const {
    if (!valid_cache_.has_value()) valid_cache_ = validate().empty();
    if (!*valid_cache_) throw std::logic_error("SpectrumTree: operation on an invalid tree");
}

const PrimeNode& SpectrumTree::node(const PrimeId& id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw std::out_of_range("SpectrumTree: unknown prime " + id);
    return it->second;
}

std::vector<PrimeId> SpectrumTree::nonzero_primes() const {
    check_validated();
    std::vector<PrimeId> order;
    order.reserve(nodes_.size());
    // Parents first: repeatedly emit nodes whose parent is already emitted.
    std::map<PrimeId, bool> emitted;
    while (order.size() < nodes_.size()) {
        for (const auto& [id, n] : nodes_) {
            if (emitted[id]) continue;
            if (!n.parent || emitted[*n.parent]) {
                order.push_back(id);
                emitted[id] = true;
            }
        }
    }
    return order;
}

bool SpectrumTree::idempotent(const PrimeId& id) const {
    check_validated();
    if (is_root(id)) return true;
    return kind(id) != NodeKind::Discrete;
}

bool SpectrumTree::branched(const PrimeId& id) const {
    check_validated();
    if (is_root(id)) return false;
    return kind(id) != NodeKind::Unbranched;
}

std::vector<PrimeId> SpectrumTree::below(const PrimeId& p) const {
    check_validated();
    std::vector<PrimeId> chain;
    if (!is_root(p)) {
        const PrimeNode* cur = &node(p);
        chain.push_back(cur->id);
        while (cur->parent) {
            cur = &node(*cur->parent);
            chain.push_back(cur->id);
        }
    }
    chain.push_back(kRootId);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

std::vector<PrimeId> SpectrumTree::strict_ancestors(const PrimeId& p) const {
    check_validated();
    std::vector<PrimeId> out;
    if (is_root(p)) return out;
    const PrimeNode* cur = &node(p);
    while (cur->parent) {
        cur = &node(*cur->parent);
        out.push_back(cur->id);
    }
    return out;
}

bool SpectrumTree::leq(const PrimeId& q, const PrimeId& p) const {
    check_validated();
    if (is_root(q)) return true;
    if (is_root(p)) return false;
    const PrimeNode* cur = &node(p);
    node(q);  // existence check
    while (true) {
        if (cur->id == q) return true;
        if (!cur->parent) return false;
        cur = &node(*cur->parent);
    }
}

bool SpectrumTree::comparable(const PrimeId& p, const PrimeId& q) const {
    return leq(p, q) || leq(q, p);
}

std::vector<PrimeId> SpectrumTree::children(const PrimeId& parent_or_root) const {
    check_validated();
    if (!is_root(parent_or_root)) node(parent_or_root);
    std::vector<PrimeId> out;
    for (const auto& [id, n] : nodes_) {
        const bool root_child = !n.parent && is_root(parent_or_root);
        if (root_child || (n.parent && *n.parent == parent_or_root)) out.push_back(id);
    }
    return out;
}

std::vector<SpectrumTree> SpectrumTree::branches_at_root() const {
    check_validated();
    std::vector<SpectrumTree> branches;
    for (const PrimeId& top : children(kRootId)) {
        std::vector<PrimeNode> members;
        for (const auto& [id, n] : nodes_) {
            if (below(id)[1] == top) members.push_back(n);
        }
        branches.push_back(SpectrumTree(std::move(members)));
    }
    return branches;
}

bool SpectrumTree::operator==(const SpectrumTree& o) const {
    if (nodes_.size() != o.nodes_.size()) return false;
    for (const auto& [id, n] : nodes_) {
        auto it = o.nodes_.find(id);
        if (it == o.nodes_.end()) return false;
        if (it->second.parent != n.parent || it->second.kind != n.kind) return false;
    }
    return true;
}

}  // namespace lenfun
