#include <doctest.h>

#include "lenfun/gamma.hpp"
#include "lenfun/rng.hpp"

using namespace lenfun;

namespace {

GammaValue random_gamma(Rng& rng) {
    if (rng.chance(20)) return GammaValue::infinity();
    return GammaValue(Rational(Int(rng.uniform_int(0, 12)), Int(rng.uniform_int(1, 6))));
}

// Independent brute-force supremum of finite subsums: enumerate every
// finite sub-multiset of a family with finite multiplicities.
GammaValue brute_force_family_sum(const GammaFamily& family) {
    for (const GammaTerm& term : family) {
        if (term.value.is_infinite()) return GammaValue::infinity();
        // A positive value with infinite multiplicity has unbounded finite
        // subsums n * value.
        if (term.value.is_finite_positive() && term.multiplicity.is_infinite())
            return GammaValue::infinity();
    }
    // All values finite with finite multiplicities: enumerate counts.
    std::vector<long> mults;
    for (const GammaTerm& term : family)
        mults.push_back(term.multiplicity.is_infinite()
                            ? 0  // zero value, contributes nothing
                            : term.multiplicity.count().get_si());
    GammaValue best = GammaValue::zero();
    std::vector<long> counts(family.size(), 0);
    while (true) {
        GammaValue total = GammaValue::zero();
        for (std::size_t k = 0; k < family.size(); ++k)
            total += family[k].value.scaled(Int(counts[k]));
        if (total > best) best = total;
        std::size_t bump = 0;
        while (bump < counts.size() && counts[bump] == mults[bump]) counts[bump++] = 0;
        if (bump == counts.size()) break;
        ++counts[bump];
    }
    return best;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and reduced") {
    const Rational a(Int(3), Int(4));
    const Rational b(Int(5), Int(6));
    CHECK((a + b) == Rational(Int(19), Int(12)));
    CHECK(Rational(Int(6), Int(4)) == Rational(Int(3), Int(2)));
    CHECK(Rational(Int(0), Int(7)).is_zero());
    CHECK_THROWS_AS(Rational(Int(-1), Int(2)), std::domain_error);
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::domain_error);
    CHECK(Rational(Int(7), Int(2)).floor() == 3);
    CHECK(Rational(Int(7), Int(2)).ceil() == 4);
    CHECK((Rational(Int(2), Int(3)) / Rational(Int(4), Int(9))) == Rational(Int(3), Int(2)));
}

TEST_CASE("gamma addition absorbs infinity") {
    CHECK(GammaValue::zero() + GammaValue::zero() == GammaValue::zero());
    CHECK(GammaValue(Rational(Int(1), Int(2))) + GammaValue::infinity() ==
          GammaValue::infinity());
    CHECK(GammaValue::infinity() + GammaValue(Rational(Int(1), Int(2))) ==
          GammaValue::infinity());
    CHECK(GammaValue(Rational(Int(3), Int(4))) + GammaValue(Rational(Int(5), Int(6))) ==
          GammaValue(Rational(Int(19), Int(12))));
}

TEST_CASE("gamma order is total with infinity on top") {
    CHECK(GammaValue::infinity() == GammaValue::infinity());
    CHECK(GammaValue(Rational(Int(2), Int(3))) < GammaValue(Rational(Int(3), Int(4))));
    CHECK(GammaValue(Rational(1)) < GammaValue::infinity());
}

TEST_CASE("semigroup laws on random values") {
    Rng rng(7);
    for (int k = 0; k < 500; ++k) {
        const GammaValue a = random_gamma(rng);
        const GammaValue b = random_gamma(rng);
        const GammaValue c = random_gamma(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a + GammaValue::zero() == a);
        if (a <= b) CHECK(a + c <= b + c);
    }
}

TEST_CASE("family sums: frozen examples") {
    CHECK(family_sum({}) == GammaValue::zero());
    CHECK(family_sum({{GammaValue(Rational(Int(1), Int(2))), Multiplicity::of(3)}}) ==
          GammaValue(Rational(Int(3), Int(2))));
    CHECK(family_sum({{GammaValue(Rational(Int(1), Int(4))), Multiplicity::infinite()}}) ==
          GammaValue::infinity());
    CHECK(family_sum({{GammaValue::zero(), Multiplicity::infinite()}}) == GammaValue::zero());
    CHECK(family_sum({{GammaValue::infinity(), Multiplicity::of(1)}}) == GammaValue::infinity());
}

TEST_CASE("family sums match the brute-force supremum of finite subsums") {
    Rng rng(11);
    for (int k = 0; k < 300; ++k) {
        GammaFamily family;
        const int terms = static_cast<int>(rng.uniform_int(0, 4));
        for (int t = 0; t < terms; ++t) {
            GammaValue value = random_gamma(rng);
            Multiplicity mult = rng.chance(25) ? Multiplicity::infinite()
                                               : Multiplicity::of(Int(rng.uniform_int(1, 5)));
            // Infinite multiplicity of a positive value makes the brute
            // force unbounded; that case short-circuits in the oracle.
            family.push_back(GammaTerm{value, mult});
        }
        CHECK(family_sum(family) == brute_force_family_sum(family));
    }
}

TEST_CASE("rendering and parsing round trip") {
    CHECK(GammaValue::zero().to_string() == "0/1");
    CHECK(GammaValue(Rational(3)).to_string() == "3/1");
    CHECK(GammaValue::infinity().to_string() == "inf");
    CHECK(GammaValue::parse("inf") == GammaValue::infinity());
    CHECK(GammaValue::parse("19/12") == GammaValue(Rational(Int(19), Int(12))));
    CHECK(GammaValue::parse("7") == GammaValue(Rational(7)));
    CHECK(!GammaValue::parse("-1/2").has_value());
    CHECK(!GammaValue::parse("1/0").has_value());
    CHECK(!GammaValue::parse("").has_value());
    CHECK(!GammaValue::parse("x").has_value());
    Rng rng(3);
    for (int k = 0; k < 200; ++k) {
        const GammaValue v = random_gamma(rng);
        CHECK(GammaValue::parse(v.to_string()) == v);
    }
}
