#include "lenfun/primes.hpp"

#include <stdexcept>

namespace lenfun {

namespace {

// Witness set deterministic for n < 3317044064679887385961981
// (Sorenson-Webster).
const long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin_witness(const Int& n, const Int& witness, const Int& odd_part, int two_exp) {
    Int x;
    mpz_powm(x.get_mpz_t(), witness.get_mpz_t(), odd_part.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < two_exp; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witnessed
}

Int pollard_brent(const Int& n) {
    // n odd composite, not a prime power of interest; returns a nontrivial factor.
    for (long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        Int saved_x = x;
        long power = 1, lam = 0;
        while (d == 1) {
            if (lam == power) {
                saved_x = x;
                power *= 2;
                lam = 0;
            }
            x = (x * x + c) % n;
            ++lam;
            Int diff = x > saved_x ? x - saved_x : saved_x - x;
            if (diff == 0) break;  // cycle without factor, retry with next c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(const Int& n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

namespace {

const std::vector<long>& trial_primes() {
    static const std::vector<long> primes = [] {
        std::vector<long> out;
        std::vector<bool> sieve(1000, true);
        for (long k = 2; k < 1000; ++k) {
            if (!sieve[k]) continue;
            out.push_back(k);
            for (long m = k * k; m < 1000; m += k) sieve[m] = false;
        }
        return out;
    }();
    return primes;
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (long p : trial_primes()) {
        if (n == p) return true;
        if (mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(p)) == 0) return false;
    }
    if (n < 1000L * 1000L) return true;  // fully trial-divided
    static const Int kDeterministicLimit("3317044064679887385961981");
    if (n >= kDeterministicLimit)
        throw std::domain_error("is_prime: input beyond deterministic witness range");
    Int odd_part = n - 1;
    int two_exp = 0;
    while (mpz_even_p(odd_part.get_mpz_t())) {
        odd_part /= 2;
        ++two_exp;
    }
    for (long w : kWitnesses) {
        if (miller_rabin_witness(n, Int(w), odd_part, two_exp)) return false;
    }
    return true;
}

std::map<Int, int> factorize(const Int& n) {
    if (n < 1) throw std::domain_error("factorize: input must be positive");
    std::map<Int, int> out;
    Int rest = n;
    for (long p : trial_primes()) {
        if (rest == 1) break;
        while (mpz_fdiv_ui(rest.get_mpz_t(), static_cast<unsigned long>(p)) == 0) {
            ++out[Int(p)];
            rest /= p;
        }
    }
    if (rest > 1) {
        if (rest < 1000L * 1000L)
            ++out[rest];  // below the trial bound squared, hence prime
        else
            factor_into(rest, out);
    }
    return out;
}

int p_adic_valuation(const Int& n, const Int& p) {
    if (n == 0) throw std::domain_error("p_adic_valuation: zero input");
    Int rest = n < 0 ? Int(-n) : n;
    int v = 0;
    while (rest % p == 0) {
        rest /= p;
        ++v;
    }
    return v;
}

Int nth_prime(int index) {
    if (index < 1) throw std::domain_error("nth_prime: 1-based index");
    Int candidate = 1;
    for (int seen = 0; seen < index;) {
        ++candidate;
        if (is_prime(candidate)) ++seen;
    }
    return candidate;
}

int prime_index(const Int& p) {
    if (!is_prime(p)) throw std::domain_error("prime_index: not a prime");
    int index = 0;
    for (Int candidate = 2; candidate <= p; ++candidate) {
        if (is_prime(candidate)) ++index;
    }
    return index;
}

}  // namespace lenfun
