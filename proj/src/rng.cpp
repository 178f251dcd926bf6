#include "lenfun/rng.hpp"

#include <stdexcept>

namespace lenfun {

std::uint64_t Rng::next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Rng::uniform_int(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

bool Rng::chance(int percent) { return uniform_int(1, 100) <= percent; }

Rng Rng::fork(std::uint64_t stream) {
    Rng child(state_ ^ (0xa0761d6478bd642fULL * (stream + 1)));
    child.next();
    return child;
}

SpectrumTree random_tree(Rng& rng) {
    const int node_count = static_cast<int>(rng.uniform_int(1, 12));
    std::vector<PrimeNode> nodes;
    std::vector<int> depth;
    for (int i = 0; i < node_count; ++i) {
        PrimeNode n;
        n.id = "P" + std::to_string(i);
        // Attach below a previous node while respecting the depth bound.
        if (i > 0 && rng.chance(60)) {
            const int parent = static_cast<int>(rng.uniform_int(0, i - 1));
            if (depth[parent] < 4) {
                n.parent = nodes[parent].id;
                depth.push_back(depth[parent] + 1);
            } else {
                depth.push_back(1);
            }
        } else {
            depth.push_back(1);
        }
        if (rng.chance(15))
            n.kind = NodeKind::Unbranched;
        else
            n.kind = rng.chance(50) ? NodeKind::Discrete : NodeKind::Dense;
        nodes.push_back(std::move(n));
    }
    SpectrumTree tree(std::move(nodes));
    if (!tree.validate().empty()) throw std::logic_error("random_tree: generator bug");
    return tree;
}

Rational random_rational(Rng& rng) {
    return Rational(Int(rng.uniform_int(0, 8)), Int(rng.uniform_int(1, 4)));
}

Rational random_positive_rational(Rng& rng) {
    return Rational(Int(rng.uniform_int(1, 8)), Int(rng.uniform_int(1, 4)));
}

namespace {

CanonicalLengthFn random_fn_impl(Rng& rng, const SpectrumTree& tree, bool singular_only) {
    CanonicalLengthFn l;
    // Pure-root draws: the zero function, the torsion-vanishing function,
    // or a rank multiple.
    if (rng.chance(12)) {
        const int which = static_cast<int>(rng.uniform_int(0, 2));
        if (which == 1) l.sigma_t.insert(kRootId);
        if (which == 2 && !singular_only) l.sigma_r.emplace(kRootId, random_positive_rational(rng));
        if (validate_canonical(tree, l).empty()) return l;
        l = CanonicalLengthFn{};
    }

    // Grow sigma_t downward-closed, then classify the frontier.
    for (const PrimeId& p : tree.nonzero_primes()) {
        const auto& parent = tree.node(p).parent;
        const bool chain_in_t = !parent || l.sigma_t.count(*parent) > 0;
        if (chain_in_t && rng.chance(45)) l.sigma_t.insert(p);
    }
    for (const PrimeId& p : tree.nonzero_primes()) {
        if (l.sigma_t.count(p)) continue;
        const auto& parent = tree.node(p).parent;
        const bool frontier = !parent || l.sigma_t.count(*parent) > 0;
        if (!frontier || !rng.chance(55)) continue;
        std::vector<int> classes;  // 0 = i, 1 = r, 2 = v
        if (tree.idempotent(p)) {
            classes.push_back(0);
            if (!singular_only) classes.push_back(1);
        }
        if (tree.branched(p) && !singular_only) classes.push_back(2);
        if (classes.empty()) continue;
        switch (rng.pick(classes)) {
            case 0: l.sigma_i.insert(p); break;
            case 1: l.sigma_r.emplace(p, random_positive_rational(rng)); break;
            case 2: l.sigma_v.emplace(p, random_positive_rational(rng)); break;
        }
    }

    // Enforce the unbranched normalization: an unassigned unbranched prime
    // with a fully torsion chain below absorbs into a class of its own.
    const bool infinite_on_ring = l.sigma_t.count(kRootId) || l.has_nonzero_prime_member();
    if (infinite_on_ring) {
        for (const PrimeId& u : tree.nonzero_primes()) {
            if (tree.kind(u) != NodeKind::Unbranched) continue;
            if (l.sigma_t.count(u) || l.sigma_i.count(u) || l.sigma_r.count(u)) continue;
            bool all_below = true;
            for (const PrimeId& q : tree.strict_ancestors(u)) {
                if (!l.sigma_t.count(q)) {
                    all_below = false;
                    break;
                }
            }
            if (!all_below) continue;
            const int which = static_cast<int>(rng.uniform_int(0, singular_only ? 1 : 2));
            if (which == 0)
                l.sigma_t.insert(u);
            else if (which == 1)
                l.sigma_i.insert(u);
            else
                l.sigma_r.emplace(u, random_positive_rational(rng));
        }
    }

    if (!validate_canonical(tree, l).empty())
        throw std::logic_error("random_canonical_fn: generator bug");
    return l;
}

}  // namespace

CanonicalLengthFn random_canonical_fn(Rng& rng, const SpectrumTree& tree) {
    return random_fn_impl(rng, tree, false);
}

CanonicalLengthFn random_singular_fn(Rng& rng, const SpectrumTree& tree) {
    return random_fn_impl(rng, tree, true);
}

IdealDescriptor random_ideal(Rng& rng, const SpectrumTree& tree) {
    if (rng.chance(8)) return IdealDescriptor::unit();
    if (rng.chance(8)) return IdealDescriptor::zero_ideal();
    IdealDescriptor out;
    std::vector<PrimeId> order = tree.nonzero_primes();
    // Shuffle, then greedily keep an antichain.
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(i) - 1))]);
    for (const PrimeId& p : order) {
        if (!rng.chance(55)) continue;
        bool clashes = false;
        for (const auto& [q, cut] : out.components) {
            if (tree.comparable(p, q)) {
                clashes = true;
                break;
            }
        }
        if (clashes) continue;
        Cut cut;
        switch (tree.kind(p)) {
            case NodeKind::Discrete:
                cut = Cut{Rational(rng.uniform_int(1, 6)), true};
                break;
            case NodeKind::Dense:
                cut = Cut{random_rational(rng), rng.chance(50)};
                if (cut.gamma.is_zero()) cut.inclusive = false;
                break;
            case NodeKind::Unbranched:
                cut = Cut::prime_itself(NodeKind::Unbranched);
                break;
        }
        out.components.emplace(p, normalize_cut(tree.kind(p), cut));
    }
    return out;
}

namespace {

const std::vector<long>& small_primes() {
    static const std::vector<long> primes = {2, 3, 5, 7, 11, 13};
    return primes;
}

GammaValue random_weight(Rng& rng) {
    if (rng.chance(12)) return GammaValue::infinity();
    if (rng.chance(25)) return GammaValue::zero();
    return GammaValue(random_positive_rational(rng));
}

}  // namespace

ZLengthFn random_infinite_zlengthfn(Rng& rng) {
    std::map<Int, GammaValue> weights;
    for (long p : small_primes()) {
        if (rng.chance(60)) weights.emplace(Int(p), random_weight(rng));
    }
    GammaValue default_weight = GammaValue::zero();
    if (rng.chance(20)) default_weight = random_weight(rng);
    return ZLengthFn::infinite_type(std::move(weights), std::move(default_weight));
}

ZLengthFn random_zlengthfn(Rng& rng) {
    if (rng.chance(15)) return ZLengthFn::rank_multiple(random_positive_rational(rng));
    return random_infinite_zlengthfn(rng);
}

FgZModule random_zmodule(Rng& rng) {
    const int generators = static_cast<int>(rng.uniform_int(1, 6));
    const int relations = static_cast<int>(rng.uniform_int(0, 5));
    IntMatrix presentation(relations, std::vector<Int>(generators));
    for (auto& row : presentation)
        for (auto& x : row) x = rng.uniform_int(-50, 50);
    return smith_normal_form(presentation, generators);
}

std::set<PrimeId> random_generization_closed(Rng& rng, const SpectrumTree& tree) {
    std::set<PrimeId> delta;
    if (rng.chance(15)) return delta;  // empty set is closed
    delta.insert(kRootId);
    for (const PrimeId& p : tree.nonzero_primes()) {
        const auto& parent = tree.node(p).parent;
        const bool parent_in = !parent || delta.count(*parent) > 0;
        if (parent_in && rng.chance(50)) delta.insert(p);
    }
    return delta;
}

}  // namespace lenfun
