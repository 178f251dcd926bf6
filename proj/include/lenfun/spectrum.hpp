#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lenfun {

using PrimeId = std::string;

/// Reserved id of the zero ideal, the root of every spectrum tree.
inline const PrimeId kRootId = "(0)";

/// Kind of the rank-one piece between a prime and the prime directly below
/// it. Discrete: value group Z, non-idempotent, branched. Dense: value
/// group Q, idempotent, branched. Unbranched: idempotent, and the prime
/// itself is its only local ideal.
enum class NodeKind { Discrete, Dense, Unbranched };

const char* to_string(NodeKind kind);
std::optional<NodeKind> parse_node_kind(const std::string& text);

struct PrimeNode {
    PrimeId id;
    std::optional<PrimeId> parent;  // nullopt: directly above the zero ideal
    NodeKind kind = NodeKind::Discrete;
};

/// Finite rooted tree of nonzero primes over the implicit zero-ideal root;
/// containment of primes is the ancestor relation.
class SpectrumTree {
public:
    SpectrumTree() = default;
    explicit SpectrumTree(std::vector<PrimeNode> nodes);

    /// Shape and kind diagnostics; empty means the tree is well-formed.
    /// All other members require a validated tree.
    std::vector<std::string> validate() const;

    bool contains(const PrimeId& id) const { return nodes_.count(id) > 0; }
    const PrimeNode& node(const PrimeId& id) const;
    NodeKind kind(const PrimeId& id) const { return node(id).kind; }
    bool is_root(const PrimeId& id) const { return id == kRootId; }

    /// Nonzero primes in parent-before-child order.
    std::vector<PrimeId> nonzero_primes() const;
    std::size_t size() const { return nodes_.size(); }

    bool idempotent(const PrimeId& id) const;
    bool branched(const PrimeId& id) const;

    /// Chain of primes from the root up to and including p.
    std::vector<PrimeId> below(const PrimeId& p) const;
    /// Strictly smaller nonzero primes of p, bottom-up.
    std::vector<PrimeId> strict_ancestors(const PrimeId& p) const;
    bool comparable(const PrimeId& p, const PrimeId& q) const;
    /// Containment of primes: q <= p (q on the chain from the root to p).
    bool leq(const PrimeId& q, const PrimeId& p) const;
    std::vector<PrimeId> children(const PrimeId& parent_or_root) const;

    /// One subtree per height-one prime, partitioning the nonzero primes.
    std::vector<SpectrumTree> branches_at_root() const;

    bool operator==(const SpectrumTree& o) const;

private:
    void check_validated() const;
    std::map<PrimeId, PrimeNode> nodes_;
    mutable std::optional<bool> valid_cache_;
};

/// One-dimensional spectrum with countably many height-one maximal ideals
/// of a uniform kind; models the two end-of-paper example rings.
struct InfiniteOneDimSpectrum {
    NodeKind maximal_kind = NodeKind::Discrete;  // Discrete or Dense only
};

}  // namespace lenfun
