#include "lenfun/zmod.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lenfun/primes.hpp"
#include "lenfun/rng.hpp"

namespace lenfun {

FgZModule FgZModule::free_module(int rank) {
    if (rank < 0) throw std::domain_error("FgZModule: negative rank");
    FgZModule m;
    m.rank = rank;
    return m;
}

FgZModule FgZModule::cyclic(const Int& n) {
    if (n < 0) throw std::domain_error("FgZModule: negative order");
    if (n == 0) return free_module(1);
    FgZModule m;
    if (n >= 2) m.invariant_factors.push_back(n);
    return m;
}

FgZModule FgZModule::from_elementary_divisors(const std::vector<std::pair<Int, int>>& prime_powers,
                                              int rank) {
    // Group exponents per prime, sort each descending; the j-th largest
    // exponents across primes multiply into the j-th invariant factor from
    // the top of the chain.
    std::map<Int, std::vector<int>> exponents;
    std::size_t chain_length = 0;
    for (const auto& [p, e] : prime_powers) {
        if (e <= 0) throw std::domain_error("from_elementary_divisors: exponent must be positive");
        if (!is_prime(p)) throw std::domain_error("from_elementary_divisors: base must be prime");
        exponents[p].push_back(e);
    }
    for (auto& [p, es] : exponents) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        chain_length = std::max(chain_length, es.size());
    }
    std::vector<Int> factors(chain_length, Int(1));
    for (const auto& [p, es] : exponents) {
        for (std::size_t j = 0; j < es.size(); ++j) {
            Int pk;
            mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(es[j]));
            // j-th largest exponent goes into the j-th factor from the top
            factors[chain_length - 1 - j] *= pk;
        }
    }
    FgZModule m;
    m.rank = rank;
    m.invariant_factors = std::move(factors);
    return m;
}

std::string FgZModule::to_string() const {
    std::ostringstream os;
    os << "Z^" << rank;
    for (const Int& d : invariant_factors) os << " + Z/" << d.get_str();
    return os.str();
}

FgZModule direct_sum(const FgZModule& a, const FgZModule& b) {
    std::vector<std::pair<Int, int>> prime_powers;
    for (const FgZModule* m : {&a, &b}) {
        for (const Int& d : m->invariant_factors) {
            for (const auto& [p, e] : factorize(d)) prime_powers.emplace_back(p, e);
        }
    }
    return FgZModule::from_elementary_divisors(prime_powers, a.rank + b.rank);
}

namespace {

// Smith reduction with optional column-transform tracking: maintains
// current = original * v and v * vinv = identity.
class SmithReducer {
public:
    SmithReducer(IntMatrix matrix, bool track_columns)
        : a_(std::move(matrix)),
          rows_(static_cast<int>(a_.size())),
          cols_(rows_ == 0 ? 0 : static_cast<int>(a_[0].size())) {
        if (track_columns) {
            v_.assign(cols_, std::vector<Int>(cols_, 0));
            vinv_.assign(cols_, std::vector<Int>(cols_, 0));
            for (int i = 0; i < cols_; ++i) v_[i][i] = vinv_[i][i] = 1;
        }
    }

    void run() {
        const int steps = std::min(rows_, cols_);
        for (int s = 0; s < steps; ++s) {
            if (!has_nonzero(s)) break;
            isolate_pivot(s);
            if (a_[s][s] < 0) negate_row(s);
        }
    }

    std::vector<Int> nonzero_diagonal() const {
        std::vector<Int> diag;
        for (int i = 0; i < std::min(rows_, cols_); ++i) {
            if (a_[i][i] != 0) diag.push_back(a_[i][i]);
        }
        return diag;
    }

    const IntMatrix& v() const { return v_; }
    const IntMatrix& vinv() const { return vinv_; }

private:
    bool has_nonzero(int s) const {
        for (int i = s; i < rows_; ++i)
            for (int j = s; j < cols_; ++j)
                if (a_[i][j] != 0) return true;
        return false;
    }

    void isolate_pivot(int s) {
        while (true) {
            move_min_to_pivot(s);
            bool clean = true;
            for (int i = s + 1; i < rows_; ++i) {
                if (a_[i][s] == 0) continue;
                Int q = a_[i][s] / a_[s][s];  // truncated; remainder shrinks
                if (q != 0) add_row(i, s, -q);
                if (a_[i][s] != 0) clean = false;
            }
            for (int j = s + 1; j < cols_; ++j) {
                if (a_[s][j] == 0) continue;
                Int q = a_[s][j] / a_[s][s];
                if (q != 0) add_col(j, s, -q);
                if (a_[s][j] != 0) clean = false;
            }
            if (!clean) continue;
            // Pivot is lone; enforce that it divides the rest of the block.
            bool divides_all = true;
            for (int i = s + 1; i < rows_ && divides_all; ++i) {
                for (int j = s + 1; j < cols_; ++j) {
                    if (a_[i][j] % a_[s][s] != 0) {
                        add_row(s, i, 1);
                        divides_all = false;
                        break;
                    }
                }
            }
            if (divides_all) return;
        }
    }

    void move_min_to_pivot(int s) {
        int br = s, bc = s;
        Int best = 0;
        for (int i = s; i < rows_; ++i) {
            for (int j = s; j < cols_; ++j) {
                if (a_[i][j] == 0) continue;
                Int mag = abs(a_[i][j]);
                if (best == 0 || mag < best) {
                    best = mag;
                    br = i;
                    bc = j;
                }
            }
        }
        if (br != s) std::swap(a_[br], a_[s]);
        if (bc != s) swap_cols(bc, s);
    }

    void add_row(int dst, int src, const Int& c) {
        for (int j = 0; j < cols_; ++j) a_[dst][j] += c * a_[src][j];
    }

    void negate_row(int r) {
        for (int j = 0; j < cols_; ++j) a_[r][j] = -a_[r][j];
    }

    void swap_cols(int x, int y) {
        for (int i = 0; i < rows_; ++i) std::swap(a_[i][x], a_[i][y]);
        if (!v_.empty()) {
            for (int i = 0; i < cols_; ++i) std::swap(v_[i][x], v_[i][y]);
            std::swap(vinv_[x], vinv_[y]);
        }
    }

    // column dst += c * column src
    void add_col(int dst, int src, const Int& c) {
        for (int i = 0; i < rows_; ++i) a_[i][dst] += c * a_[i][src];
        if (!v_.empty()) {
            for (int i = 0; i < cols_; ++i) v_[i][dst] += c * v_[i][src];
            for (int j = 0; j < cols_; ++j) vinv_[src][j] -= c * vinv_[dst][j];
        }
    }

    IntMatrix a_;
    int rows_, cols_;
    IntMatrix v_, vinv_;
};

void check_rectangular(const IntMatrix& m, int cols) {
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("presentation matrix is ragged");
    }
}

FgZModule cokernel_from_diagonal(const std::vector<Int>& diag, int generators) {
    FgZModule m;
    m.rank = generators - static_cast<int>(diag.size());
    for (const Int& d : diag) {
        if (d >= 2) m.invariant_factors.push_back(d);
    }
    return m;
}

}  // namespace

FgZModule smith_normal_form(const IntMatrix& presentation, int generators) {
    if (generators < 0) throw std::invalid_argument("negative generator count");
    check_rectangular(presentation, generators);
    SmithReducer reducer(presentation, false);
    reducer.run();
    return cokernel_from_diagonal(reducer.nonzero_diagonal(), generators);
}

std::vector<Int> smith_diagonal(const IntMatrix& matrix) {
    if (!matrix.empty()) check_rectangular(matrix, static_cast<int>(matrix[0].size()));
    SmithReducer reducer(matrix, false);
    reducer.run();
    return reducer.nonzero_diagonal();
}

void InfiniteWeights::normalize() {
    for (auto it = weights.begin(); it != weights.end();) {
        if (it->second == default_weight)
            it = weights.erase(it);
        else
            ++it;
    }
}

GammaValue InfiniteWeights::weight_at(const Int& p) const {
    auto it = weights.find(p);
    return it == weights.end() ? default_weight : it->second;
}

ZLengthFn ZLengthFn::rank_multiple(Rational alpha) {
    if (alpha.is_zero()) throw std::domain_error("rank multiple requires a positive coefficient");
    return ZLengthFn{RankMultiple{std::move(alpha)}};
}

ZLengthFn ZLengthFn::infinite_type(std::map<Int, GammaValue> weights, GammaValue default_weight) {
    for (const auto& [p, w] : weights) {
        if (!is_prime(p)) throw std::invalid_argument("weight key is not prime: " + p.get_str());
    }
    InfiniteWeights iw{std::move(weights), std::move(default_weight)};
    iw.normalize();
    return ZLengthFn{std::move(iw)};
}

GammaValue eval_z(const ZLengthFn& l, const FgZModule& m) {
    if (l.is_rank_multiple()) {
        return GammaValue(l.as_rank().alpha).scaled(Int(m.rank));
    }
    if (m.rank > 0) return GammaValue::infinity();
    const InfiniteWeights& w = l.as_weights();
    std::map<Int, int> exponents;
    for (const Int& d : m.invariant_factors) {
        for (const auto& [p, e] : factorize(d)) exponents[p] += e;
    }
    GammaValue total = GammaValue::zero();
    for (const auto& [p, e] : exponents) {
        total += w.weight_at(p).scaled(Int(e));
        if (total.is_infinite()) return total;
    }
    return total;
}

GammaValue eval_z(const HalvingWeights& l, const FgZModule& m) {
    if (m.rank > 0) return GammaValue::infinity();
    std::map<Int, int> exponents;
    for (const Int& d : m.invariant_factors) {
        for (const auto& [p, e] : factorize(d)) exponents[p] += e;
    }
    GammaValue total = GammaValue::zero();
    for (const auto& [p, e] : exponents) {
        Int pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(prime_index(p)));
        const Rational weight = l.scale * Rational(Int(1), pow2);
        total += GammaValue(weight).scaled(Int(e));
    }
    return total;
}

ZLengthFn localize_fn(const ZLengthFn& l, const Int& p) {
    if (l.is_rank_multiple())
        throw std::invalid_argument("localize_fn: rank multiples are not in the infinite class");
    if (!is_prime(p)) throw std::invalid_argument("localize_fn: not a prime");
    return ZLengthFn::infinite_type({{p, l.as_weights().weight_at(p)}});
}

std::map<Int, ZLengthFn> jaffard_split(const ZLengthFn& l) {
    if (l.is_rank_multiple())
        throw std::invalid_argument("jaffard_split: rank multiples are not in the infinite class");
    const InfiniteWeights& w = l.as_weights();
    if (!w.default_weight.is_zero())
        throw std::invalid_argument(
            "jaffard_split: nonzero default weight has no finite componentwise form");
    std::map<Int, ZLengthFn> parts;
    for (const auto& [p, c] : w.weights) parts.emplace(p, ZLengthFn::infinite_type({{p, c}}));
    return parts;
}

ZLengthFn jaffard_merge(const std::map<Int, ZLengthFn>& parts) {
    std::map<Int, GammaValue> weights;
    for (const auto& [p, part] : parts) {
        if (part.is_rank_multiple())
            throw std::invalid_argument("jaffard_merge: parts must be infinite-type");
        const InfiniteWeights& w = part.as_weights();
        if (!w.default_weight.is_zero())
            throw std::invalid_argument("jaffard_merge: parts must have default weight zero");
        for (const auto& [q, c] : w.weights) {
            if (q != p)
                throw std::invalid_argument("jaffard_merge: part supported off its own prime");
            weights.emplace(q, c);
        }
    }
    return ZLengthFn::infinite_type(std::move(weights));
}

std::vector<std::pair<Int, int>> crt_decompose(const Int& n) {
    if (n < 1) throw std::domain_error("crt_decompose: input must be positive");
    std::vector<std::pair<Int, int>> out;
    for (const auto& [p, e] : factorize(n)) out.emplace_back(p, e);
    return out;
}

bool grassmann_check(const ZLengthFn& l, const ZIdeal& i, const ZIdeal& j) {
    Int g, m;
    mpz_gcd(g.get_mpz_t(), i.generator.get_mpz_t(), j.generator.get_mpz_t());
    mpz_lcm(m.get_mpz_t(), i.generator.get_mpz_t(), j.generator.get_mpz_t());
    const GammaValue lhs = eval_z(l, i.quotient()) + eval_z(l, j.quotient());
    const GammaValue rhs =
        eval_z(l, FgZModule::cyclic(g)) + eval_z(l, FgZModule::cyclic(m));
    return lhs == rhs;
}

bool primary_decomp_check(const ZLengthFn& l, const ZIdeal& i) {
    if (i.generator < 1) throw std::domain_error("primary_decomp_check: nonzero ideal required");
    GammaValue sum = GammaValue::zero();
    for (const auto& [p, e] : crt_decompose(i.generator)) {
        Int pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
        sum += eval_z(l, FgZModule::cyclic(pk));
    }
    return eval_z(l, i.quotient()) == sum;
}

bool is_discrete_z(const ZLengthFn& l) {
    if (l.is_rank_multiple()) return true;
    const InfiniteWeights& w = l.as_weights();
    // The weight multiset has finitely many distinct finite nonzero values,
    // so 1/lcm of their denominators is a common unit and the generated
    // value set sits inside a discrete subgroup of the rationals.
    Int denominator_lcm = 1;
    for (const auto& [p, c] : w.weights) {
        if (c.is_finite_positive())
            mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(),
                    c.finite().den().get_mpz_t());
    }
    if (w.default_weight.is_finite_positive())
        mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(),
                w.default_weight.finite().den().get_mpz_t());
    return denominator_lcm > 0;
}

bool is_discrete_z(const HalvingWeights&) {
    // Weight values scale/2^i for every i: no common unit, and the partial
    // sums accumulate below their supremum.
    return false;
}

ExactTriple exact_sequence_from(const IntMatrix& presentation, int generators,
                                const IntMatrix& submodule_generators) {
    check_rectangular(presentation, generators);
    check_rectangular(submodule_generators, generators);

    const FgZModule total = smith_normal_form(presentation, generators);

    IntMatrix stacked = presentation;
    stacked.insert(stacked.end(), submodule_generators.begin(), submodule_generators.end());

    SmithReducer reducer(stacked, true);
    reducer.run();
    const std::vector<Int> diag = reducer.nonzero_diagonal();
    const int lattice_rank = static_cast<int>(diag.size());
    const FgZModule quotient = cokernel_from_diagonal(diag, generators);

    // Rows of the relation matrix expressed in a basis of the stacked
    // lattice: a = (a*V) * V^{-1} and row i of the basis is d_i * V^{-1}[i].
    IntMatrix coefficients;
    coefficients.reserve(presentation.size());
    const IntMatrix& v = reducer.v();
    for (const auto& row : presentation) {
        std::vector<Int> in_lattice(lattice_rank, 0);
        for (int i = 0; i < generators; ++i) {
            Int y = 0;
            for (int k = 0; k < generators; ++k) y += row[k] * v[k][i];
            if (i < lattice_rank) {
                if (y % diag[i] != 0)
                    throw std::logic_error("exact_sequence_from: relation outside lattice");
                in_lattice[i] = y / diag[i];
            } else if (y != 0) {
                throw std::logic_error("exact_sequence_from: relation outside lattice");
            }
        }
        coefficients.push_back(std::move(in_lattice));
    }
    const FgZModule sub = smith_normal_form(coefficients, lattice_rank);
    return ExactTriple{sub, total, quotient};
}

ExactTriple random_exact_sequence(Rng& rng) {
    const int generators = rng.uniform_int(1, 6);
    const int relations = rng.uniform_int(0, 4);
    const int submodule_rows = rng.uniform_int(0, 3);
    auto random_matrix = [&](int rows) {
        IntMatrix m(rows, std::vector<Int>(generators));
        for (auto& row : m)
            for (auto& x : row) x = rng.uniform_int(-50, 50);
        return m;
    };
    return exact_sequence_from(random_matrix(relations), generators,
                               random_matrix(submodule_rows));
}

}  // namespace lenfun
