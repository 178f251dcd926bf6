#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "lenfun/gamma.hpp"
#include "lenfun/spectrum.hpp"

namespace lenfun {

/// Cut in the value group of a rank-one piece; the pair (gamma, inclusive)
/// describes the local ideal {v >= gamma} or {v > gamma}.
///
/// Per-kind normal form:
///   Discrete   inclusive with a positive integer gamma
///   Dense      gamma >= 0, both cut types, except (0, inclusive) = unit
///   Unbranched only the prime itself, encoded as (0, exclusive)
struct Cut {
    Rational gamma;
    bool inclusive = true;

    bool operator==(const Cut&) const = default;

    /// The cut carving out the prime ideal itself in a piece of this kind.
    static Cut prime_itself(NodeKind kind);
};

bool is_prime_itself(const Cut& cut, NodeKind kind);

/// Normal form of a cut on a piece of the given kind; throws
/// std::invalid_argument for cuts that are illegal there (unit-ideal cuts,
/// proper cuts at unbranched primes).
Cut normalize_cut(NodeKind kind, Cut cut);

/// Value of the cut under the reference valuation of the piece: the
/// infimum of the value set of the local ideal.
Rational cut_value(NodeKind kind, const Cut& cut);

/// Containment of the local ideals described by two cuts at one prime.
bool cut_leq(NodeKind kind, const Cut& a, const Cut& b);

/// Ideal of the abstract backend: per minimal prime, the cut describing
/// the localization there. The key set is an antichain; an empty map is
/// the unit ideal and `zero` marks the zero ideal.
struct IdealDescriptor {
    std::map<PrimeId, Cut> components;
    bool zero = false;

    static IdealDescriptor unit() { return {}; }
    static IdealDescriptor zero_ideal();
    static IdealDescriptor primary(PrimeId p, Cut cut);

    bool is_unit() const { return !zero && components.empty(); }
    bool is_zero() const { return zero; }

    bool operator==(const IdealDescriptor&) const = default;
};

/// Checks antichain structure and per-kind cut normal forms.
std::vector<std::string> validate_ideal(const SpectrumTree& tree, const IdealDescriptor& i);

/// Localization of an ideal at a prime of the tree.
struct LocalIdeal {
    enum class Tag { Unit, At, Zero } tag = Tag::Unit;
    PrimeId radical;  // set when tag == At
    Cut cut;          // set when tag == At

    static LocalIdeal unit() { return {}; }
    static LocalIdeal zero();
    static LocalIdeal at(PrimeId radical, Cut cut);

    bool is_unit() const { return tag == Tag::Unit; }
    bool is_zero() const { return tag == Tag::Zero; }

    bool operator==(const LocalIdeal&) const = default;
};

/// ID_p: Unit when p contains no minimal prime of i, otherwise the cut of
/// the unique minimal prime of i below p. The zero ideal localizes to the
/// distinguished zero local ideal.
LocalIdeal localize(const SpectrumTree& tree, const IdealDescriptor& i, const PrimeId& p);

/// Containment of local ideals in the (totally ordered) local lattice.
bool local_leq(const SpectrumTree& tree, const LocalIdeal& a, const LocalIdeal& b);

IdealDescriptor sum(const SpectrumTree& tree, const IdealDescriptor& i, const IdealDescriptor& j);
IdealDescriptor intersect(const SpectrumTree& tree, const IdealDescriptor& i,
                          const IdealDescriptor& j);

/// Minimal primes of the ideal; the root alone for the zero ideal.
std::set<PrimeId> radical(const SpectrumTree& tree, const IdealDescriptor& i);

bool is_primary_at(const SpectrumTree& tree, const IdealDescriptor& i, const PrimeId& p);

/// Containment i ⊆ j, decided by localization at every prime.
bool leq(const SpectrumTree& tree, const IdealDescriptor& i, const IdealDescriptor& j);

/// Canonical primary ideal strictly inside a branched prime: the square of
/// the maximal ideal on a Discrete piece, the cut at 1 on a Dense piece.
/// Unbranched primes admit no such ideal and are rejected.
IdealDescriptor probe_primary(const SpectrumTree& tree, const PrimeId& p);

/// Descriptor of the prime ideal p itself (unit ideal for the root's zero
/// ideal is not representable this way; p must be a nonzero prime).
IdealDescriptor prime_descriptor(const SpectrumTree& tree, const PrimeId& p);

}  // namespace lenfun
