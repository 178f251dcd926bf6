#include <doctest.h>

#include "lenfun/lengths.hpp"
#include "lenfun/rng.hpp"

using namespace lenfun;

namespace {

const Rational kAlpha(Int(7), Int(2));
const Rational kLambda(Int(2), Int(1));

SpectrumTree chain_qm(NodeKind q, NodeKind m) {
    return SpectrumTree({
        {"Q", std::nullopt, q},
        {"M", PrimeId("Q"), m},
    });
}

SpectrumTree one_node(NodeKind kind) { return SpectrumTree({{"M", std::nullopt, kind}}); }

enum class ClassAt { None, Torsion, Idempotent, Rank, Valuative };

CanonicalLengthFn with_class(ClassAt cls, const PrimeId& p, bool torsion_below,
                             const PrimeId& below = "Q") {
    CanonicalLengthFn l;
    if (torsion_below) l.sigma_t.insert(below);
    switch (cls) {
        case ClassAt::None: break;
        case ClassAt::Torsion: l.sigma_t.insert(p); break;
        case ClassAt::Idempotent: l.sigma_i.insert(p); break;
        case ClassAt::Rank: l.sigma_r.emplace(p, kAlpha); break;
        case ClassAt::Valuative: l.sigma_v.emplace(p, kLambda); break;
    }
    return l;
}

}  // namespace

TEST_CASE("canonical validation: frozen examples") {
    const SpectrumTree tree = chain_qm(NodeKind::Dense, NodeKind::Discrete);
    CHECK(validate_canonical(tree, CanonicalLengthFn{}).empty());

    CanonicalLengthFn v_unbranched;
    v_unbranched.sigma_v.emplace("M", Rational(1));
    CHECK(!validate_canonical(one_node(NodeKind::Unbranched), v_unbranched).empty());

    CanonicalLengthFn r_discrete;
    r_discrete.sigma_r.emplace("M", Rational(1));
    CHECK(!validate_canonical(one_node(NodeKind::Discrete), r_discrete).empty());
    CHECK(validate_canonical(one_node(NodeKind::Dense), r_discrete).empty());

    // Members need a torsion chain below them.
    CanonicalLengthFn no_chain;
    no_chain.sigma_i.insert("M");
    CHECK(!validate_canonical(tree, no_chain).empty());

    // Root data next to a nonzero member is redundant, hence rejected.
    CanonicalLengthFn rooty;
    rooty.sigma_t = {kRootId, "Q"};
    CHECK(!validate_canonical(tree, rooty).empty());
    CanonicalLengthFn pure_root;
    pure_root.sigma_t = {kRootId};
    CHECK(validate_canonical(tree, pure_root).empty());

    // One prime cannot carry two classes.
    CanonicalLengthFn doubled;
    doubled.sigma_t = {"Q"};
    doubled.sigma_i = {"Q"};
    CHECK(!validate_canonical(chain_qm(NodeKind::Dense, NodeKind::Dense), doubled).empty());

    // The zero ideal never carries the idempotent or valuative class.
    CanonicalLengthFn root_i;
    root_i.sigma_i.insert(kRootId);
    CHECK(!validate_canonical(tree, root_i).empty());
}

TEST_CASE("evaluation: frozen examples") {
    const SpectrumTree m_disc = one_node(NodeKind::Discrete);
    CanonicalLengthFn torsion;
    torsion.sigma_t = {"M"};
    CHECK(eval(m_disc, torsion, IdealDescriptor::unit()) == GammaValue::zero());
    CHECK(eval(m_disc, torsion, IdealDescriptor::zero_ideal()) == GammaValue::infinity());

    CanonicalLengthFn valuative;
    valuative.sigma_v.emplace("M", Rational(1));
    CHECK(eval(m_disc, valuative, IdealDescriptor::primary("M", Cut{Rational(3), true})) ==
          GammaValue(Rational(3)));

    const SpectrumTree p_dense = SpectrumTree({{"P", std::nullopt, NodeKind::Dense}});
    CanonicalLengthFn idem;
    idem.sigma_i = {"P"};
    CHECK(eval(p_dense, idem, prime_descriptor(p_dense, "P")) == GammaValue::zero());
    CHECK(eval(p_dense, idem, probe_primary(p_dense, "P")) == GammaValue::infinity());

    // Root classes: the torsion-vanishing function and rank multiples.
    CanonicalLengthFn t0;
    t0.sigma_t = {kRootId};
    CHECK(eval(p_dense, t0, IdealDescriptor::zero_ideal()) == GammaValue::infinity());
    CHECK(eval(p_dense, t0, prime_descriptor(p_dense, "P")) == GammaValue::zero());
    CanonicalLengthFn rank;
    rank.sigma_r.emplace(kRootId, Rational(Int(5), Int(3)));
    CHECK(eval(p_dense, rank, IdealDescriptor::zero_ideal()) ==
          GammaValue(Rational(Int(5), Int(3))));
    CHECK(eval(p_dense, rank, prime_descriptor(p_dense, "P")) == GammaValue::zero());
}

// The full decision table on two-element chains: every kind pair, every
// class at the top prime, probed with the prime itself, the canonical
// strictly smaller primary ideal, the prime below, and the zero ideal.
// Expected values follow the four local evaluation formulas directly.
TEST_CASE("decision table on two-chains drives canonicalize") {
    const std::vector<NodeKind> kinds = {NodeKind::Discrete, NodeKind::Dense,
                                         NodeKind::Unbranched};
    for (NodeKind qk : kinds) {
        for (NodeKind mk : kinds) {
            const SpectrumTree tree = chain_qm(qk, mk);
            const IdealDescriptor m_prime = prime_descriptor(tree, "M");
            const IdealDescriptor q_prime = prime_descriptor(tree, "Q");

            std::vector<ClassAt> classes = {ClassAt::Torsion};
            if (mk != NodeKind::Unbranched) classes.push_back(ClassAt::None);
            if (mk != NodeKind::Discrete) {
                classes.push_back(ClassAt::Idempotent);
                classes.push_back(ClassAt::Rank);
            }
            if (mk != NodeKind::Unbranched) classes.push_back(ClassAt::Valuative);

            for (ClassAt cls : classes) {
                const CanonicalLengthFn l = with_class(cls, "M", true);
                REQUIRE(validate_canonical(tree, l).empty());

                // Expected value at D/M.
                GammaValue at_m = GammaValue::zero();
                switch (cls) {
                    case ClassAt::None: at_m = GammaValue::zero(); break;
                    case ClassAt::Torsion: at_m = GammaValue::infinity(); break;
                    case ClassAt::Idempotent: at_m = GammaValue::zero(); break;
                    case ClassAt::Rank: at_m = GammaValue(kAlpha); break;
                    case ClassAt::Valuative:
                        at_m = mk == NodeKind::Discrete ? GammaValue(kLambda)
                                                        : GammaValue::zero();
                        break;
                }
                CHECK(eval(tree, l, m_prime) == at_m);

                // Expected value at the strictly smaller primary probe.
                if (mk != NodeKind::Unbranched) {
                    GammaValue at_probe = GammaValue::infinity();
                    if (cls == ClassAt::None) at_probe = GammaValue::zero();
                    if (cls == ClassAt::Valuative)
                        at_probe = mk == NodeKind::Discrete
                                       ? GammaValue(kLambda * Rational(2))
                                       : GammaValue(kLambda);
                    CHECK(eval(tree, l, probe_primary(tree, "M")) == at_probe);
                }

                // The torsion member below dominates the lower probes.
                CHECK(eval(tree, l, q_prime) == GammaValue::infinity());
                CHECK(eval(tree, l, IdealDescriptor::zero_ideal()) == GammaValue::infinity());
                CHECK(eval(tree, l, IdealDescriptor::unit()) == GammaValue::zero());

                CHECK(canonicalize(tree, oracle_of(tree, l)) == l);
            }
        }
    }
}

TEST_CASE("single-node classes and pure-root forms recover themselves") {
    const std::vector<NodeKind> kinds = {NodeKind::Discrete, NodeKind::Dense,
                                         NodeKind::Unbranched};
    for (NodeKind mk : kinds) {
        const SpectrumTree tree = one_node(mk);
        std::vector<ClassAt> classes = {ClassAt::Torsion};
        if (mk != NodeKind::Unbranched) classes.push_back(ClassAt::None);
        if (mk != NodeKind::Discrete) {
            classes.push_back(ClassAt::Idempotent);
            classes.push_back(ClassAt::Rank);
        }
        if (mk != NodeKind::Unbranched) classes.push_back(ClassAt::Valuative);
        for (ClassAt cls : classes) {
            const CanonicalLengthFn l = with_class(cls, "M", false);
            REQUIRE(validate_canonical(tree, l).empty());
            CHECK(canonicalize(tree, oracle_of(tree, l)) == l);
        }
        // Rank multiples live at the zero ideal.
        CanonicalLengthFn rank;
        rank.sigma_r.emplace(kRootId, kAlpha);
        REQUIRE(validate_canonical(tree, rank).empty());
        CHECK(canonicalize(tree, oracle_of(tree, rank)) == rank);
        CHECK(canonicalize(tree, oracle_of(tree, CanonicalLengthFn{})) == CanonicalLengthFn{});
        // The torsion-vanishing function collapses into the idempotent
        // class at an unbranched prime directly over the root.
        CanonicalLengthFn t0;
        t0.sigma_t = {kRootId};
        if (mk == NodeKind::Unbranched) {
            CHECK(!validate_canonical(tree, t0).empty());
            CanonicalLengthFn absorbed;
            absorbed.sigma_i = {"M"};
            CHECK(canonicalize(tree, oracle_of(tree, t0)) == absorbed);
        } else {
            REQUIRE(validate_canonical(tree, t0).empty());
            CHECK(canonicalize(tree, oracle_of(tree, t0)) == t0);
        }
    }
}

TEST_CASE("a discrete valuative scale probes linearly") {
    const SpectrumTree tree = one_node(NodeKind::Discrete);
    CanonicalLengthFn l;
    l.sigma_v.emplace("M", Rational(2));
    const LengthOracle o = oracle_of(tree, l);
    CHECK(o(prime_descriptor(tree, "M")) == GammaValue(Rational(2)));
    CHECK(o(probe_primary(tree, "M")) == GammaValue(Rational(4)));
    CHECK(canonicalize(tree, o) == l);
}

TEST_CASE("an everywhere-infinite oracle fills sigma_t") {
    const SpectrumTree tree = SpectrumTree({
        {"A", std::nullopt, NodeKind::Dense},
        {"B", PrimeId("A"), NodeKind::Discrete},
        {"C", std::nullopt, NodeKind::Unbranched},
    });
    const LengthOracle all_infinite = [](const IdealDescriptor& i) {
        return i.is_unit() ? GammaValue::zero() : GammaValue::infinity();
    };
    const CanonicalLengthFn l = canonicalize(tree, all_infinite);
    CHECK(l.sigma_t == std::set<PrimeId>{"A", "B", "C"});
    CHECK(l.sigma_i.empty());
    CHECK(l.sigma_r.empty());
    CHECK(l.sigma_v.empty());
}

TEST_CASE("inconsistent oracles fail with the offending probe") {
    const SpectrumTree tree = one_node(NodeKind::Discrete);
    // Finite positive at the prime, but the smaller probe does not scale.
    const LengthOracle broken = [&](const IdealDescriptor& i) {
        if (i.is_unit()) return GammaValue::zero();
        if (i.is_zero()) return GammaValue::infinity();
        if (i == probe_primary(tree, "M")) return GammaValue(Rational(5));
        return GammaValue(Rational(2));
    };
    CHECK_THROWS_AS(canonicalize(tree, broken), CanonicalizeError);

    // Zero at the prime but infinite strictly below it is impossible on a
    // non-idempotent prime.
    const LengthOracle broken2 = [&](const IdealDescriptor& i) {
        if (i.is_unit()) return GammaValue::zero();
        if (i == prime_descriptor(tree, "M")) return GammaValue::zero();
        return GammaValue::infinity();
    };
    CHECK_THROWS_AS(canonicalize(tree, broken2), CanonicalizeError);
}

TEST_CASE("localized restrictions: frozen examples") {
    const SpectrumTree tree = SpectrumTree({
        {"P", std::nullopt, NodeKind::Dense},
        {"M", PrimeId("P"), NodeKind::Discrete},
    });
    CanonicalLengthFn l;
    l.sigma_t = {"P"};
    l.sigma_v.emplace("M", Rational(3));
    CHECK(localize_length(tree, l, kRootId) == CanonicalLengthFn{});
    CanonicalLengthFn at_p;
    at_p.sigma_t = {"P"};
    CHECK(localize_length(tree, l, "P") == at_p);
    CHECK(localize_length(tree, l, "M") == l);
}

TEST_CASE("sharp equals the function on valid forms") {
    Rng rng(53);
    for (int k = 0; k < 60; ++k) {
        const SpectrumTree tree = random_tree(rng);
        const CanonicalLengthFn l = random_canonical_fn(rng, tree);
        const LengthOracle localized = sharp(tree, l);
        for (int s = 0; s < 15; ++s) {
            const IdealDescriptor i = random_ideal(rng, tree);
            CHECK(eval(tree, l, i) == localized(i));
        }
    }
    const SpectrumTree tree = one_node(NodeKind::Dense);
    CHECK(sharp(tree, CanonicalLengthFn{})(prime_descriptor(tree, "M")) == GammaValue::zero());
}

TEST_CASE("finite direct sums of cyclic modules") {
    // The value of a finite direct sum is the sum of the values.
    Rng rng(113);
    for (int k = 0; k < 60; ++k) {
        const SpectrumTree tree = random_tree(rng);
        const CanonicalLengthFn l = random_canonical_fn(rng, tree);
        std::vector<IdealDescriptor> summands;
        GammaValue expected = GammaValue::zero();
        const int parts = static_cast<int>(rng.uniform_int(0, 4));
        for (int s = 0; s < parts; ++s) {
            summands.push_back(random_ideal(rng, tree));
            expected += eval(tree, l, summands.back());
        }
        CHECK(eval_sum(tree, l, summands) == expected);
    }
}

TEST_CASE("pointwise sums of evaluations") {
    const SpectrumTree tree = one_node(NodeKind::Dense);
    CanonicalLengthFn t_m;
    t_m.sigma_t = {"M"};
    CanonicalLengthFn r_a, r_b, r_ab;
    r_a.sigma_r.emplace("M", Rational(Int(3), Int(4)));
    r_b.sigma_r.emplace("M", Rational(Int(1), Int(4)));
    r_ab.sigma_r.emplace("M", Rational(1));
    const LengthOracle zero_fn = oracle_of(tree, CanonicalLengthFn{});
    const LengthOracle doubled = add_lengths(oracle_of(tree, t_m), oracle_of(tree, t_m));
    const LengthOracle padded = add_lengths(oracle_of(tree, t_m), zero_fn);
    const LengthOracle summed = add_lengths(oracle_of(tree, r_a), oracle_of(tree, r_b));
    Rng rng(59);
    for (int s = 0; s < 100; ++s) {
        const IdealDescriptor i = random_ideal(rng, tree);
        CHECK(doubled(i) == eval(tree, t_m, i));
        CHECK(padded(i) == eval(tree, t_m, i));
        CHECK(summed(i) == eval(tree, r_ab, i));
    }
}

TEST_CASE("radical-prime reduction and primary locality") {
    Rng rng(61);
    for (int k = 0; k < 100; ++k) {
        const SpectrumTree tree = random_tree(rng);
        const CanonicalLengthFn l = random_canonical_fn(rng, tree);
        for (const PrimeId& p : tree.nonzero_primes()) {
            IdealDescriptor primary;
            if (tree.branched(p) && rng.chance(60))
                primary = probe_primary(tree, p);
            else
                primary = prime_descriptor(tree, p);
            // rad(i) = {p}: evaluation factors through the localization.
            CHECK(eval(tree, l, primary) == eval(tree, localize_length(tree, l, p), primary));
            // Localizing higher leaves the value unchanged.
            for (const PrimeId& q : tree.nonzero_primes()) {
                if (tree.leq(p, q))
                    CHECK(eval(tree, localize_length(tree, l, q), primary) ==
                          eval(tree, l, primary));
            }
        }
    }
}

TEST_CASE("downward closure of the total spectrum") {
    Rng rng(67);
    for (int k = 0; k < 150; ++k) {
        const SpectrumTree tree = random_tree(rng);
        const CanonicalLengthFn l = random_canonical_fn(rng, tree);
        for (const PrimeId& p : l.total_spectrum()) {
            if (p == kRootId) continue;
            for (const PrimeId& q : tree.strict_ancestors(p)) {
                CHECK(l.sigma_t.count(q) == 1);
                CHECK(eval(tree, l, prime_descriptor(tree, q)) == GammaValue::infinity());
            }
        }
    }
}

TEST_CASE("branch split and merge") {
    const SpectrumTree tree = SpectrumTree({
        {"A", std::nullopt, NodeKind::Dense},
        {"A1", PrimeId("A"), NodeKind::Discrete},
        {"B", std::nullopt, NodeKind::Discrete},
    });
    CanonicalLengthFn l;
    l.sigma_t = {"A"};
    l.sigma_v.emplace("A1", Rational(2));
    const auto parts = branch_split(tree, l);
    CHECK(parts.size() == 3);
    CHECK(parts.at("A") == l);
    CHECK(parts.at("B") == CanonicalLengthFn{});
    CHECK(parts.at(kRootId) == CanonicalLengthFn{});
    CHECK(branch_merge(tree, parts) == l);

    CHECK(branch_merge(tree, branch_split(tree, CanonicalLengthFn{})) == CanonicalLengthFn{});

    // Split of a merge is the original partition, and evaluation is the
    // family sum of the parts: 200 sampled pairs per tree.
    Rng rng(71);
    for (int k = 0; k < 20; ++k) {
        const SpectrumTree t = random_tree(rng);
        for (int f = 0; f < 10; ++f) {
            const CanonicalLengthFn fn = random_canonical_fn(rng, t);
            const auto split_parts = branch_split(t, fn);
            CHECK(branch_merge(t, split_parts) == fn);
            for (int s = 0; s < 20; ++s) {
                const IdealDescriptor i = random_ideal(rng, t);
                GammaValue total = GammaValue::zero();
                for (const auto& [top, part] : split_parts) total += eval(t, part, i);
                CHECK(total == eval(t, fn, i));
            }
        }
    }

    // Out-of-branch support is rejected.
    std::map<PrimeId, CanonicalLengthFn> bad;
    CanonicalLengthFn misplaced;
    misplaced.sigma_t = {"B"};
    bad.emplace("A", misplaced);
    CHECK_THROWS_AS(branch_merge(tree, bad), std::invalid_argument);
}

TEST_CASE("transport carries classes along kind-preserving maps") {
    const SpectrumTree a = chain_qm(NodeKind::Dense, NodeKind::Discrete);
    const SpectrumTree b = SpectrumTree({
        {"X", std::nullopt, NodeKind::Dense},
        {"Y", PrimeId("X"), NodeKind::Discrete},
    });
    const TreeIso phi{{"Q", "X"}, {"M", "Y"}};
    CanonicalLengthFn l;
    l.sigma_t = {"Q"};
    l.sigma_v.emplace("M", Rational(Int(1), Int(2)));
    const CanonicalLengthFn moved = transport(a, b, phi, l);
    CHECK(moved.sigma_t == std::set<PrimeId>{"X"});
    CHECK(moved.sigma_v.at("Y") == Rational(Int(1), Int(2)));
    CHECK(transport(b, a, invert_iso(phi), moved) == l);
    CHECK(transport(a, a, TreeIso{{"Q", "Q"}, {"M", "M"}}, l) == l);

    const SpectrumTree kind_clash = SpectrumTree({
        {"X", std::nullopt, NodeKind::Dense},
        {"Y", PrimeId("X"), NodeKind::Dense},
    });
    CHECK_THROWS_AS(transport(a, kind_clash, phi, l), std::invalid_argument);
}

TEST_CASE("an unbranched prime over the root absorbs into every infinite form") {
    // With classes elsewhere, the idempotent class at an unbranched prime
    // directly over the root only fires on the zero ideal, where the other
    // classes are already infinite; the canonical form carries it, the
    // reduced data does not, and both evaluate identically.
    const SpectrumTree tree = SpectrumTree({
        {"P", std::nullopt, NodeKind::Dense},
        {"M", PrimeId("P"), NodeKind::Discrete},
        {"N", std::nullopt, NodeKind::Unbranched},
    });
    CanonicalLengthFn reduced;
    reduced.sigma_t = {"P"};
    reduced.sigma_v.emplace("M", Rational(2));
    CHECK(!validate_canonical(tree, reduced).empty());

    CanonicalLengthFn canonical = reduced;
    canonical.sigma_i.insert("N");
    REQUIRE(validate_canonical(tree, canonical).empty());

    Rng rng(137);
    for (int s = 0; s < 120; ++s) {
        const IdealDescriptor i = random_ideal(rng, tree);
        CHECK(eval(tree, reduced, i) == eval(tree, canonical, i));
    }
    CHECK(canonicalize(tree, oracle_of(tree, reduced)) == canonical);
}

TEST_CASE("singular and discrete classification") {
    const SpectrumTree tree = one_node(NodeKind::Dense);
    CanonicalLengthFn t_only;
    t_only.sigma_t = {"M"};
    CHECK(is_singular(t_only));
    CHECK(is_discrete(tree, t_only));

    CanonicalLengthFn dense_v;
    dense_v.sigma_v.emplace("M", Rational(1));
    CHECK(!is_singular(dense_v));
    CHECK(!is_discrete(tree, dense_v));

    CanonicalLengthFn r_form;
    r_form.sigma_r.emplace("M", Rational(Int(3), Int(2)));
    CHECK(!is_singular(r_form));
    CHECK(is_discrete(tree, r_form));

    const SpectrumTree disc = one_node(NodeKind::Discrete);
    CanonicalLengthFn disc_v;
    disc_v.sigma_v.emplace("M", Rational(1));
    CHECK(is_discrete(disc, disc_v));
}
