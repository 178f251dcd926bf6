#include "lenfun/lengths.hpp"

#include <algorithm>

namespace lenfun {

bool CanonicalLengthFn::is_zero_function() const {
    return sigma_t.empty() && sigma_i.empty() && sigma_r.empty() && sigma_v.empty();
}

bool CanonicalLengthFn::has_nonzero_prime_member() const {
    auto nonroot = [](const PrimeId& p) { return p != kRootId; };
    return std::any_of(sigma_t.begin(), sigma_t.end(), nonroot) ||
           std::any_of(sigma_i.begin(), sigma_i.end(), nonroot) ||
           std::any_of(sigma_r.begin(), sigma_r.end(),
                       [&](const auto& kv) { return nonroot(kv.first); }) ||
           std::any_of(sigma_v.begin(), sigma_v.end(),
                       [&](const auto& kv) { return nonroot(kv.first); });
}

std::set<PrimeId> CanonicalLengthFn::total_spectrum() const {
    std::set<PrimeId> out(sigma_t.begin(), sigma_t.end());
    out.insert(sigma_i.begin(), sigma_i.end());
    for (const auto& [p, a] : sigma_r) out.insert(p);
    for (const auto& [p, v] : sigma_v) out.insert(p);
    return out;
}

std::vector<std::string> validate_canonical(const SpectrumTree& tree, const CanonicalLengthFn& l) {
    std::vector<std::string> violations;
    auto check_exists = [&](const PrimeId& p, const char* where, bool root_ok) {
        if (p == kRootId) {
            if (!root_ok) violations.push_back(std::string(where) + ": the zero ideal is not allowed here");
            return false;
        }
        if (!tree.contains(p)) {
            violations.push_back(std::string(where) + ": unknown prime " + p);
            return false;
        }
        return true;
    };

    std::vector<PrimeId> members;
    for (const PrimeId& p : l.sigma_t) {
        if (check_exists(p, "sigma_t", true)) members.push_back(p);
    }
    for (const PrimeId& p : l.sigma_i) {
        if (check_exists(p, "sigma_i", false)) {
            members.push_back(p);
            if (!tree.idempotent(p))
                violations.push_back("sigma_i: " + p + " is not idempotent");
        }
    }
    for (const auto& [p, alpha] : l.sigma_r) {
        if (alpha.is_zero()) violations.push_back("sigma_r: zero coefficient at " + p);
        if (check_exists(p, "sigma_r", true)) {
            members.push_back(p);
            if (!tree.idempotent(p))
                violations.push_back("sigma_r: " + p + " is not idempotent");
        }
    }
    for (const auto& [p, lambda] : l.sigma_v) {
        if (lambda.is_zero()) violations.push_back("sigma_v: zero scale at " + p);
        if (check_exists(p, "sigma_v", false)) {
            members.push_back(p);
            if (!tree.branched(p)) violations.push_back("sigma_v: " + p + " is not branched");
        }
    }

    // Pairwise disjointness of the four sets.
    std::map<PrimeId, int> seen;
    for (const PrimeId& p : l.sigma_t) ++seen[p];
    for (const PrimeId& p : l.sigma_i) ++seen[p];
    for (const auto& [p, a] : l.sigma_r) ++seen[p];
    for (const auto& [p, v] : l.sigma_v) ++seen[p];
    for (const auto& [p, count] : seen) {
        if (count > 1) violations.push_back("prime " + p + " appears in more than one class");
    }

    // Layered family with core sigma_t: everything strictly below a member
    // is a torsion-class member.
    for (const PrimeId& p : members) {
        if (p == kRootId || !tree.contains(p)) continue;
        for (const PrimeId& q : tree.strict_ancestors(p)) {
            if (!l.sigma_t.count(q))
                violations.push_back("layering: " + q + " below member " + p +
                                     " must be in sigma_t");
        }
    }

    // Root data is redundant next to any nonzero member: infinity absorbs
    // it on every cyclic evaluation, so the canonical form drops it.
    if (l.has_nonzero_prime_member()) {
        if (l.sigma_t.count(kRootId))
            violations.push_back("root in sigma_t is redundant next to nonzero members");
        if (l.sigma_r.count(kRootId))
            violations.push_back("root in sigma_r is redundant next to nonzero members");
    }

    // Unbranched normalization: when the function is infinite on the ring
    // and every nonzero prime strictly below an unbranched prime is
    // torsion-class, the sum of those torsion classes already equals an
    // idempotent class at the prime, and the canonical form must say so.
    const bool infinite_on_ring = l.sigma_t.count(kRootId) || l.has_nonzero_prime_member();
    if (violations.empty()) {
        for (const PrimeId& u : tree.nonzero_primes()) {
            if (tree.kind(u) != NodeKind::Unbranched) continue;
            if (!infinite_on_ring) continue;
            bool all_below_torsion = true;
            for (const PrimeId& q : tree.strict_ancestors(u)) {
                if (!l.sigma_t.count(q)) {
                    all_below_torsion = false;
                    break;
                }
            }
            if (all_below_torsion && !l.sigma_t.count(u) && !l.sigma_i.count(u) &&
                !l.sigma_r.count(u))
                violations.push_back("unbranched " + u +
                                     " must absorb the torsion classes below it");
        }
    }
    return violations;
}

namespace {

GammaValue torsion_class_contribution(const LocalIdeal& local) {
    return local.is_unit() ? GammaValue::zero() : GammaValue::infinity();
}

GammaValue idempotent_class_contribution(const SpectrumTree& tree, const PrimeId& p,
                                         const LocalIdeal& local) {
    if (local.is_unit()) return GammaValue::zero();
    if (!local.is_zero() && local.radical == p && is_prime_itself(local.cut, tree.kind(p)))
        return GammaValue::zero();
    return GammaValue::infinity();
}

GammaValue rank_class_contribution(const SpectrumTree& tree, const PrimeId& p,
                                   const Rational& alpha, const LocalIdeal& local) {
    if (local.is_unit()) return GammaValue::zero();
    if (!local.is_zero() && local.radical == p && is_prime_itself(local.cut, tree.kind(p)))
        return GammaValue(alpha);
    return GammaValue::infinity();
}

GammaValue valuative_class_contribution(const SpectrumTree& tree, const PrimeId& p,
                                        const Rational& lambda, const LocalIdeal& local) {
    if (local.is_unit()) return GammaValue::zero();
    if (local.is_zero() || local.radical != p) return GammaValue::infinity();
    return GammaValue(lambda * cut_value(tree.kind(p), local.cut));
}

}  // namespace

GammaValue eval(const SpectrumTree& tree, const CanonicalLengthFn& l, const IdealDescriptor& i) {
    if (i.is_unit()) return GammaValue::zero();
    if (i.is_zero()) {
        if (l.has_nonzero_prime_member() || l.sigma_t.count(kRootId))
            return GammaValue::infinity();
        auto it = l.sigma_r.find(kRootId);
        if (it != l.sigma_r.end()) return GammaValue(it->second);
        return GammaValue::zero();
    }
    GammaValue total = GammaValue::zero();
    for (const PrimeId& p : l.sigma_t) {
        if (p == kRootId) continue;  // proper quotients are torsion
        total += torsion_class_contribution(localize(tree, i, p));
    }
    for (const PrimeId& p : l.sigma_i)
        total += idempotent_class_contribution(tree, p, localize(tree, i, p));
    for (const auto& [p, alpha] : l.sigma_r) {
        if (p == kRootId) continue;  // rank vanishes on torsion
        total += rank_class_contribution(tree, p, alpha, localize(tree, i, p));
    }
    for (const auto& [p, lambda] : l.sigma_v)
        total += valuative_class_contribution(tree, p, lambda, localize(tree, i, p));
    return total;
}

GammaValue eval_sum(const SpectrumTree& tree, const CanonicalLengthFn& l,
                    const std::vector<IdealDescriptor>& summands) {
    GammaValue total = GammaValue::zero();
    for (const IdealDescriptor& i : summands) total += eval(tree, l, i);
    return total;
}

LengthOracle oracle_of(const SpectrumTree& tree, const CanonicalLengthFn& l) {
    return [tree, l](const IdealDescriptor& i) { return eval(tree, l, i); };
}

LengthOracle add_lengths(LengthOracle a, LengthOracle b) {
    return [a = std::move(a), b = std::move(b)](const IdealDescriptor& i) { return a(i) + b(i); };
}

LengthOracle family_add(std::vector<LengthOracle> parts) {
    return [parts = std::move(parts)](const IdealDescriptor& i) {
        GammaValue total = GammaValue::zero();
        for (const LengthOracle& part : parts) total += part(i);
        return total;
    };
}

CanonicalLengthFn localize_length(const SpectrumTree& tree, const CanonicalLengthFn& l,
                                  const PrimeId& p) {
    if (!tree.is_root(p)) tree.node(p);
    auto keep = [&](const PrimeId& q) { return q == kRootId || tree.leq(q, p); };
    CanonicalLengthFn out;
    for (const PrimeId& q : l.sigma_t)
        if (keep(q)) out.sigma_t.insert(q);
    for (const PrimeId& q : l.sigma_i)
        if (keep(q)) out.sigma_i.insert(q);
    for (const auto& [q, alpha] : l.sigma_r)
        if (keep(q)) out.sigma_r.emplace(q, alpha);
    for (const auto& [q, lambda] : l.sigma_v)
        if (keep(q)) out.sigma_v.emplace(q, lambda);
    return out;
}

LengthOracle sharp(const SpectrumTree& tree, const CanonicalLengthFn& l) {
    std::vector<LengthOracle> parts;
    for (const PrimeId& p : l.total_spectrum())
        parts.push_back(oracle_of(tree, localize_length(tree, l, p)));
    return family_add(std::move(parts));
}

CanonicalizeError::CanonicalizeError(std::string probe_description, std::string detail)
    : std::runtime_error("canonicalize: " + detail + " (probe: " + probe_description + ")"),
      probe(std::move(probe_description)) {}

CanonicalLengthFn canonicalize(const SpectrumTree& tree, const LengthOracle& oracle) {
    CanonicalLengthFn out;
    const GammaValue at_ring = oracle(IdealDescriptor::zero_ideal());

    for (const PrimeId& p : tree.nonzero_primes()) {
        const NodeKind kind = tree.kind(p);
        const GammaValue v0 = oracle(prime_descriptor(tree, p));
        if (v0.is_infinite()) {
            out.sigma_t.insert(p);
            continue;
        }
        if (v0.is_finite_positive()) {
            if (tree.idempotent(p)) {
                out.sigma_r.emplace(p, v0.finite());
            } else {
                // Discrete piece: the prime's own cut has value 1, so a
                // finite positive value is a valuative scale; the strictly
                // smaller probe must scale with its cut value.
                const IdealDescriptor probe = probe_primary(tree, p);
                const Rational probe_value = cut_value(kind, probe.components.at(p));
                const Rational scale = v0.finite() / cut_value(kind, Cut::prime_itself(kind));
                if (oracle(probe) != GammaValue(scale * probe_value))
                    throw CanonicalizeError("D/" + p + "^2",
                                            "valuative scale at " + p + " is not linear");
                out.sigma_v.emplace(p, scale);
            }
            continue;
        }
        // v0 == 0
        if (tree.branched(p)) {
            const IdealDescriptor probe = probe_primary(tree, p);
            const GammaValue v1 = oracle(probe);
            if (v1.is_zero()) continue;  // not in the total spectrum
            if (v1.is_infinite()) {
                if (!tree.idempotent(p))
                    throw CanonicalizeError(
                        "D/" + p + "-primary probe",
                        "infinite below a vanishing non-idempotent prime " + p);
                out.sigma_i.insert(p);
                continue;
            }
            if (kind != NodeKind::Dense)
                throw CanonicalizeError("D/" + p + "-primary probe",
                                        "finite positive probe under a vanishing prime " + p);
            out.sigma_v.emplace(p, v1.finite() / cut_value(kind, probe.components.at(p)));
            continue;
        }
        // Unbranched with v0 == 0: in the idempotent class exactly when
        // every prime strictly below (the ring included) evaluates infinite.
        bool all_below_infinite = at_ring.is_infinite();
        for (const PrimeId& q : tree.strict_ancestors(p)) {
            if (!all_below_infinite) break;
            all_below_infinite = oracle(prime_descriptor(tree, q)).is_infinite();
        }
        if (all_below_infinite) out.sigma_i.insert(p);
    }

    if (at_ring.is_infinite()) {
        if (!out.has_nonzero_prime_member()) out.sigma_t.insert(kRootId);
    } else if (at_ring.is_finite_positive()) {
        if (out.has_nonzero_prime_member())
            throw CanonicalizeError("D", "finite value on the ring next to nonzero classes");
        out.sigma_r.emplace(kRootId, at_ring.finite());
    } else if (out.has_nonzero_prime_member()) {
        throw CanonicalizeError("D", "zero on the ring next to nonzero classes");
    }

    const std::vector<std::string> violations = validate_canonical(tree, out);
    if (!violations.empty()) throw CanonicalizeError("assembled form", violations.front());
    return out;
}

bool is_singular(const CanonicalLengthFn& l) { return l.sigma_r.empty() && l.sigma_v.empty(); }

bool is_discrete(const SpectrumTree& tree, const CanonicalLengthFn& l) {
    for (const auto& [p, lambda] : l.sigma_v) {
        if (tree.kind(p) == NodeKind::Dense) return false;
    }
    return true;
}

std::map<PrimeId, CanonicalLengthFn> branch_split(const SpectrumTree& tree,
                                                  const CanonicalLengthFn& l) {
    std::map<PrimeId, CanonicalLengthFn> parts;
    CanonicalLengthFn& root_part = parts[kRootId];
    if (l.sigma_t.count(kRootId)) root_part.sigma_t.insert(kRootId);
    if (auto it = l.sigma_r.find(kRootId); it != l.sigma_r.end())
        root_part.sigma_r.emplace(kRootId, it->second);

    for (const PrimeId& top : tree.children(kRootId)) {
        CanonicalLengthFn& part = parts[top];
        auto in_branch = [&](const PrimeId& q) {
            return q != kRootId && tree.below(q)[1] == top;
        };
        for (const PrimeId& q : l.sigma_t)
            if (in_branch(q)) part.sigma_t.insert(q);
        for (const PrimeId& q : l.sigma_i)
            if (in_branch(q)) part.sigma_i.insert(q);
        for (const auto& [q, alpha] : l.sigma_r)
            if (in_branch(q)) part.sigma_r.emplace(q, alpha);
        for (const auto& [q, lambda] : l.sigma_v)
            if (in_branch(q)) part.sigma_v.emplace(q, lambda);
    }
    return parts;
}

CanonicalLengthFn branch_merge(const SpectrumTree& tree,
                               const std::map<PrimeId, CanonicalLengthFn>& parts) {
    const std::vector<PrimeId> tops = tree.children(kRootId);
    CanonicalLengthFn merged;
    auto merge_set = [](std::set<PrimeId>& dst, const std::set<PrimeId>& src,
                        const char* what) {
        for (const PrimeId& q : src) {
            if (!dst.insert(q).second)
                throw std::invalid_argument(std::string("branch_merge: overlapping ") + what +
                                            " support at " + q);
        }
    };
    auto merge_map = [](std::map<PrimeId, Rational>& dst, const std::map<PrimeId, Rational>& src,
                        const char* what) {
        for (const auto& [q, c] : src) {
            if (!dst.emplace(q, c).second)
                throw std::invalid_argument(std::string("branch_merge: overlapping ") + what +
                                            " support at " + q);
        }
    };
    for (const auto& [key, part] : parts) {
        const bool is_root_part = key == kRootId;
        if (!is_root_part && std::find(tops.begin(), tops.end(), key) == tops.end())
            throw std::invalid_argument("branch_merge: " + key + " is not a branch of the root");
        for (const PrimeId& q : part.total_spectrum()) {
            if (is_root_part) {
                if (q != kRootId)
                    throw std::invalid_argument("branch_merge: root part holds nonzero prime " + q);
            } else if (q == kRootId || tree.below(q)[1] != key) {
                throw std::invalid_argument("branch_merge: part " + key +
                                            " holds out-of-branch prime " + q);
            }
        }
        merge_set(merged.sigma_t, part.sigma_t, "sigma_t");
        merge_set(merged.sigma_i, part.sigma_i, "sigma_i");
        merge_map(merged.sigma_r, part.sigma_r, "sigma_r");
        merge_map(merged.sigma_v, part.sigma_v, "sigma_v");
    }
    const std::vector<std::string> violations = validate_canonical(tree, merged);
    if (!violations.empty())
        throw std::invalid_argument("branch_merge: merged form invalid: " + violations.front());
    return merged;
}

std::vector<std::string> validate_iso(const SpectrumTree& a, const SpectrumTree& b,
                                      const TreeIso& phi) {
    std::vector<std::string> violations;
    if (phi.size() != a.size() || a.size() != b.size()) {
        violations.push_back("isomorphism must match all nonzero primes");
        return violations;
    }
    std::set<PrimeId> image;
    for (const auto& [p, q] : phi) {
        if (!a.contains(p)) violations.push_back("unknown source prime " + p);
        if (!b.contains(q)) violations.push_back("unknown target prime " + q);
        if (!image.insert(q).second) violations.push_back("target hit twice: " + q);
    }
    if (!violations.empty()) return violations;
    for (const auto& [p, q] : phi) {
        if (a.kind(p) != b.kind(q))
            violations.push_back("kind not preserved at " + p + " -> " + q);
        const auto& parent_a = a.node(p).parent;
        const auto& parent_b = b.node(q).parent;
        const bool both_root = !parent_a && !parent_b;
        if (!both_root && (!parent_a || !parent_b || phi.at(*parent_a) != *parent_b))
            violations.push_back("parent not preserved at " + p + " -> " + q);
    }
    return violations;
}

CanonicalLengthFn transport(const SpectrumTree& a, const SpectrumTree& b, const TreeIso& phi,
                            const CanonicalLengthFn& l) {
    const std::vector<std::string> violations = validate_iso(a, b, phi);
    if (!violations.empty())
        throw std::invalid_argument("transport: " + violations.front());
    auto map_id = [&](const PrimeId& p) { return p == kRootId ? kRootId : phi.at(p); };
    CanonicalLengthFn out;
    for (const PrimeId& p : l.sigma_t) out.sigma_t.insert(map_id(p));
    for (const PrimeId& p : l.sigma_i) out.sigma_i.insert(map_id(p));
    for (const auto& [p, alpha] : l.sigma_r) out.sigma_r.emplace(map_id(p), alpha);
    for (const auto& [p, lambda] : l.sigma_v) out.sigma_v.emplace(map_id(p), lambda);
    return out;
}

IdealDescriptor transport_ideal(const TreeIso& phi, const IdealDescriptor& i) {
    if (i.is_zero()) return i;
    IdealDescriptor out;
    for (const auto& [p, cut] : i.components) out.components.emplace(phi.at(p), cut);
    return out;
}

TreeIso invert_iso(const TreeIso& phi) {
    TreeIso inv;
    for (const auto& [p, q] : phi) inv.emplace(q, p);
    return inv;
}

}  // namespace lenfun
