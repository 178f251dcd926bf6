#pragma once

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lenfun/gamma.hpp"
#include "lenfun/ideals.hpp"
#include "lenfun/spectrum.hpp"

namespace lenfun {

/// Canonical length-function data on a spectrum tree: the four class sets
/// of the standard decomposition. sigma_t members contribute the
/// torsion-vanishing class of their localization, sigma_i the idempotent
/// singular class, sigma_r a positive multiple of the local rank, and
/// sigma_v a scaled rank-one valuation.
///
/// The root id may appear in sigma_t (torsion-vanishing function) or as a
/// sigma_r key (rational multiple of the rank function), and only in an
/// otherwise empty form: root data is redundant as soon as a nonzero prime
/// carries a class, because infinity absorbs it on every cyclic module.
struct CanonicalLengthFn {
    std::set<PrimeId> sigma_t;
    std::set<PrimeId> sigma_i;
    std::map<PrimeId, Rational> sigma_r;  // alpha > 0
    std::map<PrimeId, Rational> sigma_v;  // lambda > 0, scale of the
                                          // reference valuation of the piece

    static CanonicalLengthFn zero_function() { return {}; }

    bool is_zero_function() const;
    bool has_nonzero_prime_member() const;
    std::set<PrimeId> total_spectrum() const;  // union of the four sets

    bool operator==(const CanonicalLengthFn&) const = default;
};

/// Evaluation capability promised to come from a length function.
using LengthOracle = std::function<GammaValue(const IdealDescriptor&)>;

/// All structural invariants of the canonical form: disjointness, the
/// layered-family property with core sigma_t, idempotency and branching
/// constraints, root minimality, and the unbranched normalization rule.
std::vector<std::string> validate_canonical(const SpectrumTree& tree, const CanonicalLengthFn& l);

/// Exact evaluation on a cyclic module D/i via the per-class local tables.
GammaValue eval(const SpectrumTree& tree, const CanonicalLengthFn& l, const IdealDescriptor& i);

/// Evaluation on a finite direct sum of cyclic modules.
GammaValue eval_sum(const SpectrumTree& tree, const CanonicalLengthFn& l,
                    const std::vector<IdealDescriptor>& summands);

LengthOracle oracle_of(const SpectrumTree& tree, const CanonicalLengthFn& l);

/// Pointwise sums of evaluations.
LengthOracle add_lengths(LengthOracle a, LengthOracle b);
LengthOracle family_add(std::vector<LengthOracle> parts);

/// Restriction to the primes below-or-equal p: the length function of the
/// localization at p, pulled back to the tree.
CanonicalLengthFn localize_length(const SpectrumTree& tree, const CanonicalLengthFn& l,
                                  const PrimeId& p);

/// Sum of the localizations over the total spectrum of l.
LengthOracle sharp(const SpectrumTree& tree, const CanonicalLengthFn& l);

/// Structured canonicalization failure: the probe that no canonical form
/// can explain.
struct CanonicalizeError : std::runtime_error {
    CanonicalizeError(std::string probe_description, std::string detail);
    std::string probe;
};

/// Recovers the unique canonical form from an evaluation oracle by probing
/// each prime with the prime itself and, where needed, a strictly smaller
/// primary ideal. Throws CanonicalizeError when the responses are
/// inconsistent with every canonical form.
CanonicalLengthFn canonicalize(const SpectrumTree& tree, const LengthOracle& oracle);

/// Singular: no finite positive values (both coefficient maps empty).
bool is_singular(const CanonicalLengthFn& l);

/// Discrete image: no dense prime carries a valuative class (finite trees
/// otherwise only generate finitely many values).
bool is_discrete(const SpectrumTree& tree, const CanonicalLengthFn& l);

/// Partition of the class data by height-one branch; the root's own data
/// is keyed by the root id.
std::map<PrimeId, CanonicalLengthFn> branch_split(const SpectrumTree& tree,
                                                  const CanonicalLengthFn& l);

/// Inverse of branch_split; rejects parts whose support leaves their
/// branch or overlaps another part.
CanonicalLengthFn branch_merge(const SpectrumTree& tree,
                               const std::map<PrimeId, CanonicalLengthFn>& parts);

/// Kind-preserving isomorphism of spectra: a bijection of nonzero primes
/// respecting parent and kind.
using TreeIso = std::map<PrimeId, PrimeId>;

std::vector<std::string> validate_iso(const SpectrumTree& a, const SpectrumTree& b,
                                      const TreeIso& phi);

/// Image of the class data under a kind-preserving isomorphism; throws
/// std::invalid_argument if phi is not one.
CanonicalLengthFn transport(const SpectrumTree& a, const SpectrumTree& b, const TreeIso& phi,
                            const CanonicalLengthFn& l);

/// Image of an ideal descriptor under the same relabeling.
IdealDescriptor transport_ideal(const TreeIso& phi, const IdealDescriptor& i);

TreeIso invert_iso(const TreeIso& phi);

}  // namespace lenfun
