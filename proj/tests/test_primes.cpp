#include <doctest.h>

#include "lenfun/primes.hpp"
#include "lenfun/rng.hpp"

using namespace lenfun;

TEST_CASE("primality by deterministic witnesses") {
    CHECK(!is_prime(Int(0)));
    CHECK(!is_prime(Int(1)));
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(3)));
    CHECK(!is_prime(Int(1000003L * 2)));
    CHECK(is_prime(Int(1000003)));
    CHECK(is_prime(Int("1000000000039")));
    CHECK(!is_prime(Int("1000000000041")));
    // Strong pseudoprime to base 2; the witness set rejects it.
    CHECK(!is_prime(Int(2047)));
}

TEST_CASE("factorization reassembles and uses prime bases") {
    Rng rng(5);
    for (int k = 0; k < 400; ++k) {
        const Int n(rng.uniform_int(1, 2000000));
        Int product = 1;
        for (const auto& [p, e] : factorize(n)) {
            CHECK(is_prime(p));
            for (int j = 0; j < e; ++j) product *= p;
        }
        CHECK(product == n);
    }
    const auto big = factorize(Int("2449489742783178") * 4);
    Int check = 1;
    for (const auto& [p, e] : big) {
        CHECK(is_prime(p));
        for (int j = 0; j < e; ++j) check *= p;
    }
    CHECK(check == Int("2449489742783178") * 4);
}

TEST_CASE("valuations and prime enumeration") {
    CHECK(p_adic_valuation(Int(12), Int(2)) == 2);
    CHECK(p_adic_valuation(Int(12), Int(3)) == 1);
    CHECK(p_adic_valuation(Int(12), Int(5)) == 0);
    CHECK(nth_prime(1) == 2);
    CHECK(nth_prime(5) == 11);
    CHECK(nth_prime(20) == 71);
    CHECK(prime_index(Int(2)) == 1);
    CHECK(prime_index(Int(71)) == 20);
}
