#pragma once

#include <cstdint>
#include <vector>

#include "lenfun/gamma.hpp"
#include "lenfun/ideals.hpp"
#include "lenfun/lengths.hpp"
#include "lenfun/spectrum.hpp"
#include "lenfun/zmod.hpp"

namespace lenfun {

/// Deterministic splitmix64 generator. The standard-library distributions
/// are implementation-defined, so every draw goes through this class to
/// keep reports byte-identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [lo, hi], inclusive.
    long uniform_int(long lo, long hi);
    /// True with probability percent/100.
    bool chance(int percent);
    /// Uniform pick from a nonempty vector.
    template <typename T>
    const T& pick(const std::vector<T>& items) {
        return items[static_cast<std::size_t>(uniform_int(0, static_cast<long>(items.size()) - 1))];
    }

    /// Derived generator for an indexed subtask.
    Rng fork(std::uint64_t stream);

private:
    std::uint64_t state_;
};

/// Random tree with depth <= 4, at most 12 nodes, unbranched kind with
/// probability 0.15; always validates.
SpectrumTree random_tree(Rng& rng);

/// Random valid canonical length function on the tree.
CanonicalLengthFn random_canonical_fn(Rng& rng, const SpectrumTree& tree);

/// Random singular valid canonical length function.
CanonicalLengthFn random_singular_fn(Rng& rng, const SpectrumTree& tree);

/// Random ideal descriptor (occasionally unit or zero).
IdealDescriptor random_ideal(Rng& rng, const SpectrumTree& tree);

/// Random small nonnegative rational.
Rational random_rational(Rng& rng);
/// Random small positive rational.
Rational random_positive_rational(Rng& rng);

/// Random length-function descriptor on the integers (mostly
/// infinite-type, occasionally a rank multiple).
ZLengthFn random_zlengthfn(Rng& rng);
/// Random infinite-type descriptor.
ZLengthFn random_infinite_zlengthfn(Rng& rng);

/// Random finitely generated module via a random presentation.
FgZModule random_zmodule(Rng& rng);

/// Random generization-closed subset of the tree (with the root).
std::set<PrimeId> random_generization_closed(Rng& rng, const SpectrumTree& tree);

}  // namespace lenfun
