#include "lenfun/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lenfun/ideals.hpp"
#include "lenfun/io.hpp"
#include "lenfun/lengths.hpp"
#include "lenfun/locsys.hpp"
#include "lenfun/primes.hpp"
#include "lenfun/rng.hpp"
#include "lenfun/spectrum.hpp"
#include "lenfun/zmod.hpp"

namespace lenfun {

namespace {

struct ScenarioContext {
    Rng rng;
    long cases;
    Report* report;

    void fail(long index, std::string detail) {
        report->failures.push_back(Failure{index, std::move(detail)});
    }
    void note(std::string text) { report->notes.push_back(std::move(text)); }
};

using ScenarioFn = std::function<void(ScenarioContext&)>;

// ---------------------------------------------------------------------
// Integer backend suites
// ---------------------------------------------------------------------

void scenario_additivity_z(ScenarioContext& ctx) {
    std::vector<ZLengthFn> fns;
    Rng fn_rng = ctx.rng.fork(0);
    for (int k = 0; k < 20; ++k) fns.push_back(random_zlengthfn(fn_rng));
    for (long c = 0; c < ctx.cases; ++c) {
        Rng case_rng = ctx.rng.fork(static_cast<std::uint64_t>(c) + 1);
        const ExactTriple triple = random_exact_sequence(case_rng);
        for (std::size_t k = 0; k < fns.size(); ++k) {
            const GammaValue lhs = eval_z(fns[k], triple.total);
            const GammaValue rhs = eval_z(fns[k], triple.sub) + eval_z(fns[k], triple.quotient);
            if (lhs != rhs) {
                ctx.fail(c, "descriptor " + std::to_string(k) + ": " + triple.sub.to_string() +
                                " -> " + triple.total.to_string() + " -> " +
                                triple.quotient.to_string() + ": " + lhs.to_string() +
                                " != " + rhs.to_string());
            }
        }
    }
}

void scenario_jaffard_z(ScenarioContext& ctx) {
    for (long c = 0; c < ctx.cases; ++c) {
        Rng case_rng = ctx.rng.fork(static_cast<std::uint64_t>(c));
        const ZLengthFn l = random_infinite_zlengthfn(case_rng);
        const FgZModule m = random_zmodule(case_rng);

        // Global value against the family sum of the localizations; primes
        // outside the probe set contribute 0 (no torsion part there and a
        // zero localized weight), so the finite family is the full sum.
        std::set<Int> probe_primes{Int(2)};
        for (const Int& d : m.invariant_factors)
            for (const auto& [p, e] : factorize(d)) probe_primes.insert(p);
        for (const auto& [p, w] : l.as_weights().weights) probe_primes.insert(p);

        GammaFamily parts;
        for (const Int& p : probe_primes)
            parts.push_back(GammaTerm{eval_z(localize_fn(l, p), m), Multiplicity::of(1)});
        const GammaValue localized = family_sum(parts);
        const GammaValue global = eval_z(l, m);
        if (global != localized)
            ctx.fail(c, m.to_string() + ": global " + global.to_string() + " != localized sum " +
                            localized.to_string());

        if (l.as_weights().default_weight.is_zero()) {
            const auto parts_map = jaffard_split(l);
            if (jaffard_merge(parts_map) != l) ctx.fail(c, "merge(split(l)) != l");
            for (const auto& [p, part] : parts_map) {
                if (jaffard_split(part) != std::map<Int, ZLengthFn>{{p, part}})
                    ctx.fail(c, "split(merge) mismatch at prime " + p.get_str());
            }
        }
    }
}

void scenario_crt(ScenarioContext& ctx) {
    for (long n = 1; n <= ctx.cases; ++n) {
        const auto parts = crt_decompose(Int(n));
        const FgZModule reassembled = FgZModule::from_elementary_divisors(parts);
        if (reassembled != FgZModule::cyclic(Int(n))) {
            ctx.fail(n, "elementary divisors of " + std::to_string(n) + " reassemble to " +
                            reassembled.to_string());
            continue;
        }
        // Independent route: Smith form of the diagonal prime-power
        // presentation must produce the single invariant factor n.
        IntMatrix diag(parts.size(), std::vector<Int>(parts.size(), 0));
        for (std::size_t k = 0; k < parts.size(); ++k) {
            Int pk;
            mpz_pow_ui(pk.get_mpz_t(), parts[k].first.get_mpz_t(),
                       static_cast<unsigned long>(parts[k].second));
            diag[k][k] = pk;
        }
        const FgZModule via_snf = smith_normal_form(diag, static_cast<int>(parts.size()));
        if (via_snf != FgZModule::cyclic(Int(n)))
            ctx.fail(n, "Smith form of the prime-power presentation gives " + via_snf.to_string());
    }
}

void scenario_grassmann(ScenarioContext& ctx) {
    for (long c = 0; c < ctx.cases; ++c) {
        Rng case_rng = ctx.rng.fork(static_cast<std::uint64_t>(c));
        const ZLengthFn l = random_zlengthfn(case_rng);
        const ZIdeal i{Int(case_rng.uniform_int(0, 400))};
        const ZIdeal j{Int(case_rng.uniform_int(0, 400))};
        if (!grassmann_check(l, i, j))
            ctx.fail(c, "integer backend: I = " + i.generator.get_str() +
                            "Z, J = " + j.generator.get_str() + "Z");
    }
    for (long c = 0; c < ctx.cases; ++c) {
        Rng case_rng = ctx.rng.fork(0x10000 + static_cast<std::uint64_t>(c));
        const SpectrumTree tree = random_tree(case_rng);
        const CanonicalLengthFn l = random_canonical_fn(case_rng, tree);
        const IdealDescriptor i = random_ideal(case_rng, tree);
        const IdealDescriptor j = random_ideal(case_rng, tree);
        const GammaValue lhs = eval(tree, l, i) + eval(tree, l, j);
        const GammaValue rhs =
            eval(tree, l, sum(tree, i, j)) + eval(tree, l, intersect(tree, i, j));
        if (lhs != rhs)
            ctx.fail(c, "tree backend: " + lhs.to_string() + " != " + rhs.to_string() +
                            " for lengthfn " + lengthfn_to_json(l).dump() + " on " +
                            ideal_to_json(i).dump() + " and " + ideal_to_json(j).dump() +
                            " over " + spectrum_to_json(tree).dump());
    }
}

void scenario_primary_decomp(ScenarioContext& ctx) {
    std::vector<ZLengthFn> fns;
    Rng fn_rng = ctx.rng.fork(0);
    for (int k = 0; k < 20; ++k) fns.push_back(random_zlengthfn(fn_rng));
    for (long n = 1; n <= ctx.cases; ++n) {
        for (std::size_t k = 0; k < fns.size(); ++k) {
            if (!primary_decomp_check(fns[k], ZIdeal{Int(n)}))
                ctx.fail(n, "descriptor " + std::to_string(k) + " at n = " + std::to_string(n));
        }
    }
}

// ---------------------------------------------------------------------
// Tree backend suites
// ---------------------------------------------------------------------

void scenario_prufer_decomp(ScenarioContext& ctx) {
    for (long c = 0; c < ctx.cases; ++c) {
        Rng case_rng = ctx.rng.fork(static_cast<std::uint64_t>(c));
        const SpectrumTree tree = random_tree(case_rng);
        for (int k = 0; k < 10; ++k) {
            const CanonicalLengthFn l = random_canonical_fn(case_rng, tree);
            const LengthOracle localized = sharp(tree, l);
            for (int s = 0; s < 10; ++s) {
                const IdealDescriptor i = random_ideal(case_rng, tree);
                const GammaValue direct = eval(tree, l, i);
                const GammaValue summed = localized(i);
                if (direct != summed)
                    ctx.fail(c, direct.to_string() + " != " + summed.to_string() +
                                    " for lengthfn " + lengthfn_to_json(l).dump() + " on " +
                                    ideal_to_json(i).dump() + " over " +
                                    spectrum_to_json(tree).dump());
            }
        }
    }
}

void scenario_uniqueness(ScenarioContext& ctx) {
    for (long c = 0; c < ctx.cases; ++c) {
        Rng case_rng = ctx.rng.fork(static_cast<std::uint64_t>(c));
        const SpectrumTree tree = random_tree(case_rng);
        const CanonicalLengthFn l = random_canonical_fn(case_rng, tree);
        try {
            const CanonicalLengthFn recovered = canonicalize(tree, oracle_of(tree, l));
            if (recovered != l)
                ctx.fail(c, "recovered " + lengthfn_to_json(recovered).dump() + " from " +
                                lengthfn_to_json(l).dump() + " over " +
                                spectrum_to_json(tree).dump());
        } catch (const CanonicalizeError& e) {
            ctx.fail(c, std::string("canonicalize failed: ") + e.what() + " for " +
                            lengthfn_to_json(l).dump() + " over " +
                            spectrum_to_json(tree).dump());
        }
    }

    // The unbranched collapse: the sum of the torsion classes strictly
    // below an unbranched prime and the idempotent class at the prime are
    // the same function on representable ideals; the canonical form is the
    // latter.
    const SpectrumTree chain(std::vector<PrimeNode>{
        {"Q", std::nullopt, NodeKind::Discrete},
        {"U", PrimeId("Q"), NodeKind::Unbranched},
    });
    CanonicalLengthFn torsion_only;
    torsion_only.sigma_t = {"Q"};
    CanonicalLengthFn absorbed = torsion_only;
    absorbed.sigma_i = {"U"};
    Rng pair_rng = ctx.rng.fork(0xC011A);
    for (int s = 0; s < 100; ++s) {
        const IdealDescriptor i = random_ideal(pair_rng, chain);
        if (eval(chain, torsion_only, i) != eval(chain, absorbed, i))
            ctx.fail(-1, "collapse pair differs on a representable ideal");
    }
    if (validate_canonical(chain, torsion_only).empty())
        ctx.fail(-1, "the non-normalized collapse data should fail validation");
    if (!validate_canonical(chain, absorbed).empty())
        ctx.fail(-1, "the absorbed collapse form should validate");
    const CanonicalLengthFn collapsed = canonicalize(chain, oracle_of(chain, torsion_only));
    if (collapsed != absorbed) ctx.fail(-1, "collapse does not canonicalize to the sigma_i form");
    ctx.note("unbranched collapse pair agrees on 100 ideals and canonicalizes to the sigma_i form");
}

void scenario_singular_bijection(ScenarioContext& ctx) {
    const int trees = 8;
    for (int t = 0; t < trees; ++t) {
        Rng tree_rng = ctx.rng.fork(static_cast<std::uint64_t>(t));
        const SpectrumTree tree = random_tree(tree_rng);
        const CanonicalLengthFn l = random_singular_fn(tree_rng, tree);
        const LocalizingSystem f = zero_locus(tree, l);
        CanonicalLengthFn recovered;
        try {
            recovered = canonicalize(tree, length_of_system(f));
        } catch (const CanonicalizeError& e) {
            ctx.fail(t, std::string("round trip failed: ") + e.what());
            continue;
        }
        if (recovered != l)
            ctx.fail(t, "length-of-zero-locus round trip: got " +
                            lengthfn_to_json(recovered).dump() + " from " +
                            lengthfn_to_json(l).dump());
        const LocalizingSystem f2 = zero_locus(tree, recovered);

        const CanonicalLengthFn other = random_singular_fn(tree_rng, tree);
        const LocalizingSystem g = zero_locus(tree, other);
        bool pointwise_leq = true, reverse_contained = true;
        for (long s = 0; s < ctx.cases; ++s) {
            const IdealDescriptor i = random_ideal(tree_rng, tree);
            if (f.membership(i) != f2.membership(i)) {
                ctx.fail(t, "zero-locus membership changed across the round trip");
                break;
            }
            if (eval(tree, l, i) > eval(tree, other, i)) pointwise_leq = false;
            if (g.membership(i) && !f.membership(i)) reverse_contained = false;
        }
        // l <= other pointwise exactly when Z(l) contains Z(other).
        if (pointwise_leq != reverse_contained)
            ctx.fail(t, "order reversal between length functions and their zero loci");
    }
}

void scenario_spectral(ScenarioContext& ctx) {
    const int trees = 8;
    for (int t = 0; t < trees; ++t) {
        Rng tree_rng = ctx.rng.fork(static_cast<std::uint64_t>(t));
        const SpectrumTree tree = random_tree(tree_rng);
        const std::set<PrimeId> delta = random_generization_closed(tree_rng, tree);
        const LocalizingSystem f = spectral_system(tree, delta);

        CanonicalLengthFn l;
        try {
            l = canonicalize(tree, length_of_system(f));
        } catch (const CanonicalizeError& e) {
            ctx.fail(t, std::string("spectral length did not canonicalize: ") + e.what());
            continue;
        }

        // The total spectrum read back through membership is the defining
        // prime set.
        std::set<PrimeId> sigma;
        if (!f.membership(IdealDescriptor::zero_ideal())) sigma.insert(kRootId);
        for (const PrimeId& p : tree.nonzero_primes()) {
            if (!f.membership(prime_descriptor(tree, p))) sigma.insert(p);
        }
        if (sigma != delta) ctx.fail(t, "membership spectrum differs from the defining set");

        const LengthOracle sharp_oracle = sharp(tree, l);
        for (long s = 0; s < ctx.cases; ++s) {
            const IdealDescriptor i = random_ideal(tree_rng, tree);
            if (eval(tree, l, i) != sharp_oracle(i)) {
                ctx.fail(t, "spectral length function differs from its localized sum");
                break;
            }
        }
    }
}

void scenario_widehat_sharp(ScenarioContext& ctx) {
    const int trees = 8;
    for (int t = 0; t < trees; ++t) {
        Rng tree_rng = ctx.rng.fork(static_cast<std::uint64_t>(t));
        const SpectrumTree tree = random_tree(tree_rng);
        const CanonicalLengthFn l = random_singular_fn(tree_rng, tree);
        const SemistarStable star{zero_locus(tree, l)};
        const SemistarStable normalized = normalized_stable(star, tree);
        const LengthOracle sharp_oracle = sharp(tree, l);

        const CanonicalLengthFn l2 = random_singular_fn(tree_rng, tree);
        const CanonicalLengthFn l3 = random_singular_fn(tree_rng, tree);
        const SemistarStable inf = infimum_of_systems(
            {zero_locus(tree, l), zero_locus(tree, l2), zero_locus(tree, l3)});

        for (long s = 0; s < ctx.cases; ++s) {
            const IdealDescriptor i = random_ideal(tree_rng, tree);
            if (normalized.member(i) != sharp_oracle(i).is_zero()) {
                ctx.fail(t, "normalized stable membership differs from the sharp zero locus");
                break;
            }
            const bool conj = inf.member(i);
            const GammaValue total = eval(tree, l, i) + eval(tree, l2, i) + eval(tree, l3, i);
            if (conj != total.is_zero()) {
                ctx.fail(t, "infimum membership differs from the zero locus of the sum");
                break;
            }
        }
    }
}

// ---------------------------------------------------------------------
// Demonstrations and counterexamples
// ---------------------------------------------------------------------

void scenario_vicev_jaff(ScenarioContext& ctx) {
    // The rank function against the two-localization family: each flat
    // overring preserves rank, so the would-be decomposition doubles it.
    const FgZModule ring = FgZModule::free_module(1);
    const ZLengthFn rank = ZLengthFn::rank_multiple(Rational(1));
    const GammaValue direct = eval_z(rank, ring);
    const GammaValue doubled = direct + direct;  // rank(M (x) Z_(2)) + rank(M (x) Z_(3))
    if (direct == doubled) {
        ctx.fail(0, "rank decomposition over {Z_(2), Z_(3)} unexpectedly holds");
    } else {
        ctx.note("rank: l(Z) = " + direct.to_string() + " but the family sum gives " +
                 doubled.to_string() + "; decomposition fails as the converse demands");
    }

    // An infinite-type function supported away from the family: both
    // localizations kill Z/5, so the family sum vanishes where l does not.
    const ZLengthFn at_five = ZLengthFn::infinite_type({{Int(5), GammaValue(Rational(1))}});
    const GammaValue value = eval_z(at_five, FgZModule::cyclic(Int(5)));
    const GammaValue family_value =
        eval_z(localize_fn(at_five, Int(2)), FgZModule::cyclic(Int(5))) +
        eval_z(localize_fn(at_five, Int(3)), FgZModule::cyclic(Int(5)));
    if (value == family_value) {
        ctx.fail(1, "partial family unexpectedly decomposes a function supported at 5");
    } else {
        ctx.note("weights at 5: l(Z/5) = " + value.to_string() + " but {Z_(2), Z_(3)} sums to " +
                 family_value.to_string());
    }

    bool rejected = false;
    try {
        localize_fn(rank, Int(2));
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    if (!rejected) ctx.fail(2, "localize_fn accepted a rank multiple");
}

void scenario_non_discrete(ScenarioContext& ctx) {
    const HalvingWeights halving{Rational(1)};
    if (is_discrete_z(halving)) ctx.fail(0, "the halving family was classified discrete");

    // Finite truncations stay discrete and their values approach 1.
    std::map<Int, GammaValue> truncated;
    std::vector<std::pair<Int, int>> summands;
    Rational partial(0);
    for (int i = 1; i <= 20; ++i) {
        const Int p = nth_prime(i);
        Int pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(i));
        truncated.emplace(p, GammaValue(Rational(Int(1), pow2)));
        summands.emplace_back(p, 1);
        const FgZModule partial_sum_module = FgZModule::from_elementary_divisors(summands);
        const GammaValue value = eval_z(halving, partial_sum_module);
        partial = partial + Rational(Int(1), pow2);
        if (value != GammaValue(partial))
            ctx.fail(i, "partial sum at " + std::to_string(i) + " is " + value.to_string());
    }
    if (!is_discrete_z(ZLengthFn::infinite_type(truncated)))
        ctx.fail(21, "a finite-support family was classified non-discrete");
    Rng rng = ctx.rng.fork(0);
    for (long c = 0; c < ctx.cases; ++c) {
        if (!is_discrete_z(random_zlengthfn(rng)))
            ctx.fail(22 + c, "a random finite descriptor was classified non-discrete");
    }
    ctx.note("halving weights non-discrete; partial sums reach 1048575/1048576 below the "
             "supremum 1/1");
}

void scenario_ex_ad(ScenarioContext& ctx) {
    const InfiniteOneDimSpectrum model{NodeKind::Discrete};
    Rng rng = ctx.rng.fork(0);
    const int residue = static_cast<int>(rng.uniform_int(2, 5));
    const AdSingularFn l{[residue](int index) { return index % residue == 0; }};
    Rng case_rng = ctx.rng.fork(1);
    const AdReport report = example_ad(model, l, case_rng, static_cast<int>(ctx.cases));
    for (const std::string& note : report.failure_notes) ctx.fail(0, note);
    ctx.note("decomposition over the maximal ideals verified on " +
             std::to_string(report.cases - report.failures) + " finite-support ideals");
}

void scenario_ex_global(ScenarioContext& ctx) {
    const InfiniteOneDimSpectrum model{NodeKind::Dense};
    Rng rng = ctx.rng.fork(0);
    const GlobalReport report = example_global(model, rng, static_cast<int>(ctx.cases));
    if (!report.witness_value.is_infinite())
        ctx.fail(0, "witness value " + report.witness_value.to_string());
    if (!report.witness_sharp_value.is_zero())
        ctx.fail(0, "witness sharp value " + report.witness_sharp_value.to_string());
    if (!report.total_spectrum_root_only) ctx.fail(0, "a maximal ideal entered the total spectrum");
    if (report.agreeing_finite_support != static_cast<int>(ctx.cases))
        ctx.fail(0, "a finite-support ideal separated the function from its localized sum");
    ctx.note("witness principal nonunit: length " + report.witness_value.to_string() +
             ", localized sum " + report.witness_sharp_value.to_string());
}

void scenario_transport(ScenarioContext& ctx) {
    for (long c = 0; c < ctx.cases; ++c) {
        Rng case_rng = ctx.rng.fork(static_cast<std::uint64_t>(c));
        const SpectrumTree tree = random_tree(case_rng);

        TreeIso phi;
        std::vector<PrimeNode> renamed;
        int counter = 0;
        for (const PrimeId& p : tree.nonzero_primes())
            phi.emplace(p, "T" + std::to_string(counter++));
        for (const PrimeId& p : tree.nonzero_primes()) {
            const PrimeNode& n = tree.node(p);
            PrimeNode copy;
            copy.id = phi.at(p);
            if (n.parent) copy.parent = phi.at(*n.parent);
            copy.kind = n.kind;
            renamed.push_back(std::move(copy));
        }
        const SpectrumTree image(std::move(renamed));

        const CanonicalLengthFn l = random_canonical_fn(case_rng, tree);
        const CanonicalLengthFn moved = transport(tree, image, phi, l);
        if (transport(image, tree, invert_iso(phi), moved) != l)
            ctx.fail(c, "transport round trip is not the identity");

        const CanonicalLengthFn other = random_canonical_fn(case_rng, tree);
        const CanonicalLengthFn other_moved = transport(tree, image, phi, other);
        bool leq_before = true, leq_after = true;
        for (int s = 0; s < 20; ++s) {
            const IdealDescriptor i = random_ideal(case_rng, tree);
            const IdealDescriptor j = transport_ideal(phi, i);
            if (eval(tree, l, i) != eval(image, moved, j))
                ctx.fail(c, "evaluation changed under relabeling");
            if (eval(tree, l, i) > eval(tree, other, i)) leq_before = false;
            if (eval(image, moved, j) > eval(image, other_moved, j)) leq_after = false;
        }
        if (leq_before != leq_after) ctx.fail(c, "sampled order not preserved by transport");
    }

    // A kind violation must be rejected.
    const SpectrumTree a(std::vector<PrimeNode>{{"P", std::nullopt, NodeKind::Discrete}});
    const SpectrumTree b(std::vector<PrimeNode>{{"Q", std::nullopt, NodeKind::Dense}});
    bool rejected = false;
    try {
        transport(a, b, TreeIso{{"P", "Q"}}, CanonicalLengthFn{});
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    if (!rejected) ctx.fail(-1, "a kind-breaking map was accepted");
}

const std::map<std::string, std::pair<ScenarioFn, long>>& registry() {
    static const std::map<std::string, std::pair<ScenarioFn, long>> table = {
        {"additivity-z", {scenario_additivity_z, 1000}},
        {"jaffard-z", {scenario_jaffard_z, 500}},
        {"crt", {scenario_crt, 5000}},
        {"grassmann", {scenario_grassmann, 1000}},
        {"primary-decomp", {scenario_primary_decomp, 5000}},
        {"prufer-decomp", {scenario_prufer_decomp, 100}},
        {"uniqueness", {scenario_uniqueness, 500}},
        {"singular-bijection", {scenario_singular_bijection, 500}},
        {"spectral", {scenario_spectral, 500}},
        {"widehat-sharp", {scenario_widehat_sharp, 500}},
        {"vicev-jaff", {scenario_vicev_jaff, 1}},
        {"non-discrete", {scenario_non_discrete, 20}},
        {"ex-ad", {scenario_ex_ad, 200}},
        {"ex-global", {scenario_ex_global, 200}},
        {"transport", {scenario_transport, 50}},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, entry] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

bool is_scenario(const std::string& name) { return registry().count(name) > 0; }

long default_cases(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown scenario " + name);
    return it->second.second;
}

Report run_scenario(const std::string& name, std::uint64_t seed, long cases) {
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown scenario " + name);
    if (cases < 1) throw std::invalid_argument("cases must be positive");
    Report report;
    report.scenario = name;
    report.seed = seed;
    report.cases = cases;

    const auto start = std::chrono::steady_clock::now();
    ScenarioContext ctx{Rng(seed), cases, &report};
    it->second.first(ctx);
    report.wall_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                           std::chrono::steady_clock::now() - start)
                                           .count());
    std::sort(report.failures.begin(), report.failures.end(),
              [](const Failure& a, const Failure& b) { return a.case_index < b.case_index; });
    return report;
}

nlohmann::json report_to_json(const Report& report) {
    nlohmann::json failures = nlohmann::json::array();
    for (const Failure& f : report.failures)
        failures.push_back({{"case", f.case_index}, {"detail", f.detail}});
    return nlohmann::json{{"scenario", report.scenario}, {"seed", report.seed},
                          {"cases", report.cases},       {"failures", std::move(failures)},
                          {"notes", report.notes},       {"wall_ms", report.wall_ms}};
}

std::string report_to_text(const Report& report) {
    std::ostringstream os;
    os << "scenario: " << report.scenario << "\n";
    os << "seed: " << report.seed << "\n";
    os << "cases: " << report.cases << "\n";
    os << "failures: " << report.failures.size() << "\n";
    for (const Failure& f : report.failures)
        os << "  case " << f.case_index << ": " << f.detail << "\n";
    for (const std::string& note : report.notes) os << "note: " << note << "\n";
    os << "wall_ms: " << report.wall_ms << "\n";
    os << "status: " << (report.ok() ? "ok" : "failed") << "\n";
    return os.str();
}

}  // namespace lenfun
