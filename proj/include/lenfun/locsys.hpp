#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "lenfun/gamma.hpp"
#include "lenfun/ideals.hpp"
#include "lenfun/lengths.hpp"
#include "lenfun/spectrum.hpp"

namespace lenfun {

/// Localizing system, represented by its membership predicate. Upward
/// closure is promised by the construction (and property-tested); it is
/// not re-checked per query.
struct LocalizingSystem {
    enum class Provenance { ZeroLocusOf, SpectralOf, OracleDefined };

    std::function<bool(const IdealDescriptor&)> membership;
    Provenance provenance = Provenance::OracleDefined;
};

/// Stable semistar operation, carried entirely by its localizing system:
/// an ideal is a member exactly when 1 lies in its closure.
struct SemistarStable {
    LocalizingSystem system;
    bool member(const IdealDescriptor& i) const { return system.membership(i); }
};

/// Ideals of zero length of a singular canonical function.
LocalizingSystem zero_locus(const SpectrumTree& tree, const CanonicalLengthFn& l);

/// The singular length function of a localizing system: zero exactly on
/// the members.
LengthOracle length_of_system(const LocalizingSystem& f);

/// System of the spectral operation attached to a generization-closed
/// prime set: members are the ideals contained in no prime of the set.
LocalizingSystem spectral_system(const SpectrumTree& tree, const std::set<PrimeId>& delta);

/// Primes whose own ideal is not a member (the root stands for the zero
/// ideal).
std::set<PrimeId> quasi_spectrum(const SemistarStable& s, const SpectrumTree& tree);

/// Primes that are members while some strictly smaller primary ideal is
/// not; unbranched primes are decided by probes strictly below them.
std::set<PrimeId> pseudo_spectrum(const SemistarStable& s, const SpectrumTree& tree);

/// Stable operation rebuilt from the quasi- and pseudo-spectrum: the zero
/// locus of the sum of the matching torsion and idempotent classes.
SemistarStable normalized_stable(const SemistarStable& s, const SpectrumTree& tree);

/// Intersection of localizing systems, i.e. the infimum of the stable
/// operations; rejects an empty list.
SemistarStable infimum_of_systems(const std::vector<LocalizingSystem>& systems);

/// Ideal of the one-dimensional infinite models: either supported on
/// finitely many maximal ideals (index -> local cut exponent) or a
/// principal ideal generated by a nonunit.
struct InfIdeal {
    bool principal_nonunit = false;
    std::map<int, int> support;  // maximal-ideal index -> positive exponent

    static InfIdeal unit() { return {}; }
    static InfIdeal principal();
    static InfIdeal finite(std::map<int, int> support);

    bool is_unit() const { return !principal_nonunit && support.empty(); }
};

/// Singular length function on the almost Dedekind model, determined by
/// which maximal ideals carry the infinite local class.
struct AdSingularFn {
    std::function<bool(int)> infinite_at;
};

GammaValue eval_ad(const AdSingularFn& l, const InfIdeal& i);

struct AdReport {
    int cases = 0;
    int failures = 0;
    std::vector<std::string> failure_notes;
};

class Rng;

/// Checks the local decomposition of a singular length function over the
/// maximal ideals of the almost Dedekind model on sampled finite-support
/// ideals.
AdReport example_ad(const InfiniteOneDimSpectrum& model, const AdSingularFn& l, Rng& rng,
                    int cases);

struct GlobalReport {
    GammaValue witness_value;        // length at the principal nonunit
    GammaValue witness_sharp_value;  // its value under the localized sum
    bool total_spectrum_root_only = false;
    int agreeing_finite_support = 0;
};

/// Builds the length function that vanishes on finite-support ideals but
/// not on principal ones, verifies that every sampled localization is the
/// torsion-vanishing class, and exhibits the witness where the function
/// differs from the sum of its localizations.
GlobalReport example_global(const InfiniteOneDimSpectrum& model, Rng& rng, int samples);

}  // namespace lenfun
