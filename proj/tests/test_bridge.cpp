#include <doctest.h>

#include <algorithm>

#include "lenfun/lengths.hpp"
#include "lenfun/primes.hpp"
#include "lenfun/rng.hpp"
#include "lenfun/zmod.hpp"

using namespace lenfun;

// The integer backend is the one-dimensional model case: each prime p gives
// a height-one node with a discrete piece, a weight descriptor becomes
// canonical class data (infinite weight -> torsion class, finite positive
// weight c -> valuative class with scale c), and the ideal nZ becomes the
// descriptor carrying the p-adic valuation of n at each supported prime.
// Both backends must produce the same value along entirely different code
// paths: factorization on one side, tree localization on the other.

namespace {

const std::vector<long> kPrimes = {2, 3, 5, 7, 11, 13};

SpectrumTree integer_model() {
    std::vector<PrimeNode> nodes;
    for (long p : kPrimes)
        nodes.push_back(PrimeNode{std::to_string(p), std::nullopt, NodeKind::Discrete});
    return SpectrumTree(std::move(nodes));
}

CanonicalLengthFn as_canonical(const ZLengthFn& l) {
    CanonicalLengthFn out;
    for (const auto& [p, c] : l.as_weights().weights) {
        if (c.is_infinite())
            out.sigma_t.insert(p.get_str());
        else if (c.is_finite_positive())
            out.sigma_v.emplace(p.get_str(), c.finite());
    }
    return out;
}

IdealDescriptor as_descriptor(const Int& n) {
    IdealDescriptor out;
    for (const auto& [p, e] : factorize(n)) {
        if (std::find(kPrimes.begin(), kPrimes.end(), p.get_si()) == kPrimes.end())
            continue;  // outside the modeled window; weight zero there anyway
        out.components.emplace(p.get_str(), Cut{Rational(e), true});
    }
    return out;
}

}  // namespace

TEST_CASE("integer and tree backends agree on cyclic evaluations") {
    const SpectrumTree model = integer_model();
    Rng rng(127);
    for (int k = 0; k < 120; ++k) {
        std::map<Int, GammaValue> weights;
        for (long p : kPrimes) {
            const int kind = static_cast<int>(rng.uniform_int(0, 3));
            if (kind == 0) weights.emplace(Int(p), GammaValue::infinity());
            if (kind == 1) weights.emplace(Int(p), GammaValue(random_positive_rational(rng)));
        }
        const ZLengthFn zl = ZLengthFn::infinite_type(weights);
        const CanonicalLengthFn form = as_canonical(zl);
        REQUIRE(validate_canonical(model, form).empty());

        for (int s = 0; s < 20; ++s) {
            // Smooth numbers over the modeled primes.
            Int n = 1;
            for (long p : kPrimes) {
                const int e = static_cast<int>(rng.uniform_int(0, 3));
                for (int j = 0; j < e; ++j) n *= p;
            }
            CHECK(eval_z(zl, FgZModule::cyclic(n)) == eval(model, form, as_descriptor(n)));
        }
        // The ring itself: both backends report an infinite value once any
        // class is present, and zero for the zero function.
        const GammaValue at_ring_z = eval_z(zl, FgZModule::free_module(1));
        const GammaValue at_ring_tree = eval(model, form, IdealDescriptor::zero_ideal());
        if (form.is_zero_function())
            CHECK(at_ring_tree == GammaValue::zero());
        else
            CHECK(at_ring_z == at_ring_tree);
    }
}

TEST_CASE("localization commutes with the bridge") {
    const SpectrumTree model = integer_model();
    Rng rng(131);
    for (int k = 0; k < 60; ++k) {
        std::map<Int, GammaValue> weights;
        for (long p : kPrimes)
            if (rng.chance(60)) weights.emplace(Int(p), GammaValue(random_positive_rational(rng)));
        const ZLengthFn zl = ZLengthFn::infinite_type(weights);
        for (long p : kPrimes) {
            const CanonicalLengthFn local_form = as_canonical(localize_fn(zl, Int(p)));
            const CanonicalLengthFn restricted =
                localize_length(model, as_canonical(zl), std::to_string(p));
            CHECK(local_form == restricted);
        }
    }
}
