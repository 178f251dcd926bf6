#include "lenfun/ideals.hpp"

#include <stdexcept>

namespace lenfun {

Cut Cut::prime_itself(NodeKind kind) {
    if (kind == NodeKind::Discrete) return Cut{Rational(1), true};
    return Cut{Rational(0), false};
}

bool is_prime_itself(const Cut& cut, NodeKind kind) {
    return cut == Cut::prime_itself(kind);
}

Cut normalize_cut(NodeKind kind, Cut cut) {
    switch (kind) {
        case NodeKind::Discrete: {
            // Integer value group: {v > g} = {v >= floor(g)+1}, and a
            // non-integer inclusive bound rounds up.
            Int n = cut.inclusive ? cut.gamma.ceil() : cut.gamma.floor() + 1;
            if (n < 1)
                throw std::invalid_argument("cut describes the unit ideal on a discrete piece");
            return Cut{Rational(n), true};
        }
        case NodeKind::Dense:
            if (cut.gamma.is_zero() && cut.inclusive)
                throw std::invalid_argument("cut describes the unit ideal on a dense piece");
            return cut;
        case NodeKind::Unbranched:
            if (!is_prime_itself(cut, kind))
                throw std::invalid_argument(
                    "unbranched primes admit no local ideal other than the prime itself");
            return cut;
    }
    throw std::logic_error("normalize_cut: unreachable");
}

Rational cut_value(NodeKind kind, const Cut& cut) {
    (void)kind;
    return cut.gamma;
}

bool cut_leq(NodeKind kind, const Cut& a, const Cut& b) {
    (void)kind;
    if (a.gamma > b.gamma) return true;
    if (a.gamma < b.gamma) return false;
    // Same bound: {v > g} is contained in {v >= g}.
    return b.inclusive || !a.inclusive;
}

IdealDescriptor IdealDescriptor::zero_ideal() {
    IdealDescriptor i;
    i.zero = true;
    return i;
}

IdealDescriptor IdealDescriptor::primary(PrimeId p, Cut cut) {
    IdealDescriptor i;
    i.components.emplace(std::move(p), std::move(cut));
    return i;
}

std::vector<std::string> validate_ideal(const SpectrumTree& tree, const IdealDescriptor& i) {
    std::vector<std::string> violations;
    if (i.zero && !i.components.empty()) {
        violations.push_back("zero ideal carries components");
        return violations;
    }
    for (const auto& [p, cut] : i.components) {
        if (!tree.contains(p)) {
            violations.push_back("unknown prime " + p);
            continue;
        }
        try {
            if (normalize_cut(tree.kind(p), cut) != cut)
                violations.push_back("cut at " + p + " is not in normal form");
        } catch (const std::invalid_argument& e) {
            violations.push_back("cut at " + p + ": " + e.what());
        }
    }
    for (const auto& [p, pc] : i.components) {
        for (const auto& [q, qc] : i.components) {
            if (p < q && tree.contains(p) && tree.contains(q) && tree.comparable(p, q))
                violations.push_back("support is not an antichain: " + p + " and " + q);
        }
    }
    return violations;
}

LocalIdeal LocalIdeal::zero() {
    LocalIdeal l;
    l.tag = Tag::Zero;
    return l;
}

LocalIdeal LocalIdeal::at(PrimeId radical, Cut cut) {
    LocalIdeal l;
    l.tag = Tag::At;
    l.radical = std::move(radical);
    l.cut = std::move(cut);
    return l;
}

LocalIdeal localize(const SpectrumTree& tree, const IdealDescriptor& i, const PrimeId& p) {
    if (!tree.is_root(p)) tree.node(p);
    if (i.zero) return LocalIdeal::zero();
    for (const auto& [q, cut] : i.components) {
        if (tree.leq(q, p)) return LocalIdeal::at(q, cut);
    }
    return LocalIdeal::unit();
}

bool local_leq(const SpectrumTree& tree, const LocalIdeal& a, const LocalIdeal& b) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    if (b.is_unit()) return true;
    if (a.is_unit()) return false;
    if (a.radical == b.radical) return cut_leq(tree.kind(a.radical), a.cut, b.cut);
    // Distinct radicals in one valuation ring are comparable; the ideal
    // with the smaller radical is the smaller ideal.
    return tree.leq(a.radical, b.radical) && a.radical != b.radical;
}

namespace {

// Keep only support-minimal primes of a component map.
std::map<PrimeId, Cut> minimalize(const SpectrumTree& tree, const std::map<PrimeId, Cut>& comps) {
    std::map<PrimeId, Cut> out;
    for (const auto& [p, cut] : comps) {
        bool minimal = true;
        for (const auto& [q, qc] : comps) {
            if (q != p && tree.leq(q, p)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.emplace(p, cut);
    }
    return out;
}

}  // namespace

IdealDescriptor sum(const SpectrumTree& tree, const IdealDescriptor& i, const IdealDescriptor& j) {
    if (i.zero) return j;
    if (j.zero) return i;
    if (i.is_unit() || j.is_unit()) return IdealDescriptor::unit();
    std::map<PrimeId, Cut> comps;
    for (const auto& [qi, ci] : i.components) {
        for (const auto& [qj, cj] : j.components) {
            if (!tree.comparable(qi, qj)) continue;
            // The sum is the larger of the two local ideals; its radical is
            // the larger of the two minimal primes.
            PrimeId m;
            Cut cut;
            if (qi == qj) {
                m = qi;
                cut = cut_leq(tree.kind(m), ci, cj) ? cj : ci;
            } else if (tree.leq(qi, qj)) {
                m = qj;
                cut = cj;
            } else {
                m = qi;
                cut = ci;
            }
            auto [it, inserted] = comps.emplace(m, cut);
            if (!inserted && cut_leq(tree.kind(m), it->second, cut)) it->second = cut;
        }
    }
    IdealDescriptor out;
    out.components = minimalize(tree, comps);
    return out;
}

IdealDescriptor intersect(const SpectrumTree& tree, const IdealDescriptor& i,
                          const IdealDescriptor& j) {
    if (i.zero || j.zero) return IdealDescriptor::zero_ideal();
    if (i.is_unit()) return j;
    if (j.is_unit()) return i;
    std::map<PrimeId, Cut> comps = i.components;
    for (const auto& [q, cut] : j.components) {
        auto [it, inserted] = comps.emplace(q, cut);
        if (!inserted && cut_leq(tree.kind(q), cut, it->second)) it->second = cut;
    }
    IdealDescriptor out;
    out.components = minimalize(tree, comps);
    return out;
}

std::set<PrimeId> radical(const SpectrumTree& tree, const IdealDescriptor& i) {
    std::set<PrimeId> out;
    if (i.zero) {
        out.insert(kRootId);
        return out;
    }
    for (const auto& [p, cut] : i.components) {
        tree.node(p);
        out.insert(p);
    }
    return out;
}

bool is_primary_at(const SpectrumTree& tree, const IdealDescriptor& i, const PrimeId& p) {
    tree.node(p);
    return !i.zero && i.components.size() == 1 && i.components.count(p) == 1;
}

bool leq(const SpectrumTree& tree, const IdealDescriptor& i, const IdealDescriptor& j) {
    if (!local_leq(tree, i.zero ? LocalIdeal::zero() : LocalIdeal::unit(),
                   j.zero ? LocalIdeal::zero() : LocalIdeal::unit()))
        return false;
    for (const PrimeId& p : tree.nonzero_primes()) {
        if (!local_leq(tree, localize(tree, i, p), localize(tree, j, p))) return false;
    }
    return true;
}

IdealDescriptor probe_primary(const SpectrumTree& tree, const PrimeId& p) {
    if (tree.is_root(p)) throw std::invalid_argument("probe_primary: nonzero prime required");
    switch (tree.kind(p)) {
        case NodeKind::Discrete:
            return IdealDescriptor::primary(p, Cut{Rational(2), true});
        case NodeKind::Dense:
            return IdealDescriptor::primary(p, Cut{Rational(1), true});
        case NodeKind::Unbranched:
            throw std::invalid_argument(
                "probe_primary: unbranched primes have no primary ideal below the prime");
    }
    throw std::logic_error("probe_primary: unreachable");
}

IdealDescriptor prime_descriptor(const SpectrumTree& tree, const PrimeId& p) {
    if (tree.is_root(p))
        throw std::invalid_argument("prime_descriptor: the zero ideal has its own marker");
    return IdealDescriptor::primary(p, Cut::prime_itself(tree.kind(p)));
}

}  // namespace lenfun
