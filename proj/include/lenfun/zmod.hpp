#pragma once

#include <map>
#include <variant>
#include <vector>

#include "lenfun/gamma.hpp"

namespace lenfun {

using IntMatrix = std::vector<std::vector<Int>>;

/// Finitely generated module over the integers in invariant-factor normal
/// form: Z^rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... | d_k, d_i >= 2.
struct FgZModule {
    int rank = 0;
    std::vector<Int> invariant_factors;

    bool operator==(const FgZModule& o) const = default;
    bool is_torsion() const { return rank == 0; }
    bool is_zero() const { return rank == 0 && invariant_factors.empty(); }

    static FgZModule free_module(int rank);
    static FgZModule cyclic(const Int& n);  // Z/n; n = 0 gives Z, n = 1 gives 0

    /// Rebuilds the invariant-factor chain from elementary divisors
    /// (prime powers), independent of the Smith normal form path.
    static FgZModule from_elementary_divisors(const std::vector<std::pair<Int, int>>& prime_powers,
                                              int rank = 0);

    std::string to_string() const;
};

/// Direct sum, implemented by merging elementary-divisor multisets.
FgZModule direct_sum(const FgZModule& a, const FgZModule& b);

/// Cokernel of an integer presentation matrix (rows are relations, columns
/// are generators), in normal form. An empty matrix presents a free module;
/// `generators` disambiguates the column count in that case.
FgZModule smith_normal_form(const IntMatrix& presentation, int generators);

/// Diagonal of the Smith normal form of an arbitrary integer matrix
/// (nonzero entries only, with the divisibility chain d_1 | d_2 | ...).
std::vector<Int> smith_diagonal(const IntMatrix& matrix);

/// Length-function descriptor on the integers: either a positive rational
/// multiple of the rank function, or an infinite-type function given by a
/// weight c_p per prime (explicit map plus a default for unlisted primes).
struct RankMultiple {
    Rational alpha;  // > 0
    bool operator==(const RankMultiple&) const = default;
};

struct InfiniteWeights {
    std::map<Int, GammaValue> weights;  // keys are primes; entries equal to
                                        // the default are normalized away
    GammaValue default_weight = GammaValue::zero();

    void normalize();
    GammaValue weight_at(const Int& p) const;
    bool operator==(const InfiniteWeights&) const = default;
};

struct ZLengthFn {
    std::variant<RankMultiple, InfiniteWeights> data;

    static ZLengthFn rank_multiple(Rational alpha);
    static ZLengthFn infinite_type(std::map<Int, GammaValue> weights,
                                   GammaValue default_weight = GammaValue::zero());

    bool is_rank_multiple() const { return std::holds_alternative<RankMultiple>(data); }
    const RankMultiple& as_rank() const { return std::get<RankMultiple>(data); }
    const InfiniteWeights& as_weights() const { return std::get<InfiniteWeights>(data); }

    bool operator==(const ZLengthFn&) const = default;
};

/// Weight family of the non-discreteness construction: the i-th prime
/// carries weight scale/2^i, so the weight values have no common unit.
struct HalvingWeights {
    Rational scale;  // > 0
};

/// Principal ideal of the integers; 0 encodes the zero ideal.
struct ZIdeal {
    Int generator;  // >= 0
    FgZModule quotient() const { return FgZModule::cyclic(generator); }
};

GammaValue eval_z(const ZLengthFn& l, const FgZModule& m);
GammaValue eval_z(const HalvingWeights& l, const FgZModule& m);

/// The length function of the localization at p (infinite-type input only):
/// weight c_p at p and zero elsewhere.
ZLengthFn localize_fn(const ZLengthFn& l, const Int& p);

/// Componentwise decomposition over the prime support; requires an
/// infinite-type descriptor with default weight zero.
std::map<Int, ZLengthFn> jaffard_split(const ZLengthFn& l);

/// Inverse of jaffard_split; each part must be a one-prime infinite-type
/// descriptor keyed by its own prime.
ZLengthFn jaffard_merge(const std::map<Int, ZLengthFn>& parts);

/// Prime-power factorization (p, k) of n >= 1, in increasing prime order.
std::vector<std::pair<Int, int>> crt_decompose(const Int& n);

/// l(R/I) + l(R/J) == l(R/(I+J)) + l(R/(I ∩ J)), with I+J the gcd ideal
/// and the intersection the lcm ideal.
bool grassmann_check(const ZLengthFn& l, const ZIdeal& i, const ZIdeal& j);

/// l(Z/n) equals the sum of l(Z/p^k) over the prime-power components.
bool primary_decomp_check(const ZLengthFn& l, const ZIdeal& i);

/// Whether the set of finite values generated by finite sums of the weights
/// is discrete (no accumulation point).
bool is_discrete_z(const ZLengthFn& l);
bool is_discrete_z(const HalvingWeights& l);

struct ExactTriple {
    FgZModule sub;       // M1
    FgZModule total;     // M2
    FgZModule quotient;  // M3
};

/// Builds a short exact sequence 0 -> M1 -> M2 -> M3 -> 0 from a
/// presentation of M2 and a generating set of a submodule, both in normal
/// form via Smith reduction.
ExactTriple exact_sequence_from(const IntMatrix& presentation, int generators,
                                const IntMatrix& submodule_generators);

class Rng;
/// Random short exact sequence with bounded presentations (dimensions
/// <= 6, entries in [-50, 50]).
ExactTriple random_exact_sequence(Rng& rng);

}  // namespace lenfun
