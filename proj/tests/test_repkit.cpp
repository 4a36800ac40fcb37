#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "greenwalk/repkit_stability.hpp"
#include "greenwalk/repkit_tautilting.hpp"
#include "test_helpers.hpp"

#include <random>
#include <set>

using namespace repkit;
using charge::CentralCharge;
using ratlin::Rational;
using ratlin::RatVec;

namespace {

RatVec rv(std::initializer_list<long> xs)
{
    RatVec v;
    for (long x : xs) v.emplace_back(Rational(x));
    return v;
}

const TypeAQuiver kA2 = TypeAQuiver::parse("1>2");
const TypeAQuiver kA2rev = TypeAQuiver::parse("1<2");

std::vector<TypeAQuiver> all_a3_orientations()
{
    return {TypeAQuiver::parse("1>2,2>3"), TypeAQuiver::parse("1>2,2<3"),
            TypeAQuiver::parse("1<2,2>3"), TypeAQuiver::parse("1<2,2<3")};
}

} // namespace

TEST_CASE("type-A parsing and conversion")
{
    CHECK(TypeAQuiver::parse("a4") == TypeAQuiver(4, {1, 1, 1}));
    CHECK(TypeAQuiver::parse("1>2,2>3,3>4") == TypeAQuiver::parse("a4"));
    CHECK(TypeAQuiver::parse("2<3,1>2") == TypeAQuiver(3, {1, -1}));
    CHECK(TypeAQuiver::parse("a1").n() == 1);
    CHECK_THROWS_AS(TypeAQuiver::parse("1>3"), std::invalid_argument);
    CHECK_THROWS_AS(TypeAQuiver::parse("1>2,1>2"), std::invalid_argument);
    CHECK_THROWS_AS(TypeAQuiver::parse("1>2,3>4"), std::invalid_argument);

    cluster::Quiver q = kA2.as_quiver();
    CHECK(q.arrows() == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(TypeAQuiver::from_quiver(q) == kA2);
    CHECK_FALSE(TypeAQuiver::from_quiver(cluster::Quiver(3, {{1, 3}})).has_value());
    // the 3-cycle from mutating linear A3 in the middle is not type A
    CHECK_FALSE(
        TypeAQuiver::from_quiver(cluster::Quiver(3, {{1, 3}, {2, 1}, {3, 2}})).has_value());
}

TEST_CASE("indecomposables are the intervals")
{
    CHECK(indecomposables(TypeAQuiver::parse("a1"))
          == std::vector<ThinModule>{ThinModule{1, 1}});
    CHECK(indecomposables(kA2)
          == std::vector<ThinModule>{ThinModule{1, 1}, ThinModule{1, 2}, ThinModule{2, 2}});
    CHECK(indecomposables(TypeAQuiver::parse("a4")).size() == 10);
    auto inds = indecomposables(TypeAQuiver::parse("a4"));
    for (size_t i = 0; i < inds.size(); ++i)
        CHECK(interval_index(TypeAQuiver::parse("a4"), inds[i]) == static_cast<int>(i));
}

TEST_CASE("hom dimensions on A2, both orientations")
{
    // 1>2: [1,2] has top S1 and socle S2
    CHECK(hom_dim(kA2, {1, 2}, {2, 2}) == 0);
    CHECK(hom_dim(kA2, {2, 2}, {1, 2}) == 1);
    CHECK(hom_dim(kA2, {1, 2}, {1, 1}) == 1);
    CHECK(hom_dim(kA2, {1, 1}, {1, 2}) == 0);
    CHECK(hom_dim(kA2, {1, 1}, {2, 2}) == 0);
    CHECK(hom_dim(kA2, {2, 2}, {1, 1}) == 0);
    // mirrored orientation swaps the two
    CHECK(hom_dim(kA2rev, {1, 2}, {2, 2}) == 1);
    CHECK(hom_dim(kA2rev, {2, 2}, {1, 2}) == 0);
    // identity is always one-dimensional (intervals are bricks)
    for (const auto& q : all_a3_orientations())
        for (const auto& m : indecomposables(q)) CHECK(hom_dim(q, m, m) == 1);
    // disjoint supports with no arrows between them
    CHECK(hom_dim(TypeAQuiver::parse("a4"), {1, 1}, {3, 4}) == 0);
    CHECK(hom_dim(TypeAQuiver::parse("a4"), {3, 4}, {1, 1}) == 0);
}

TEST_CASE("projectives, injectives, submodules")
{
    CHECK(projective(kA2, 1) == ThinModule{1, 2});
    CHECK(projective(kA2, 2) == ThinModule{2, 2});
    CHECK(injective(kA2, 1) == ThinModule{1, 1});
    CHECK(injective(kA2, 2) == ThinModule{1, 2});

    TypeAQuiver zig = TypeAQuiver::parse("1>2,2<3"); // 1 -> 2 <- 3
    CHECK(projective(zig, 1) == ThinModule{1, 2});
    CHECK(projective(zig, 2) == ThinModule{2, 2});
    CHECK(projective(zig, 3) == ThinModule{2, 3});
    CHECK(injective(zig, 2) == ThinModule{1, 3});

    // simple module: only the two trivial submodules
    CHECK(submodule_masks(kA2, {1, 1}).size() == 2);
    // [1,2] over 1>2: exactly one proper nonzero submodule (the socle {2})
    auto subs = submodule_masks(kA2, {1, 2});
    CHECK(subs == std::vector<VertexMask>{0b00, 0b10, 0b11});
    // [1,n] over linear A_n has n+1 submodules (the suffixes)
    for (int n = 1; n <= 5; ++n) {
        TypeAQuiver lin = TypeAQuiver::parse("a" + std::to_string(n));
        CHECK(submodule_masks(lin, {1, n}).size() == static_cast<size_t>(n) + 1);
    }
    // zigzag middle interval: {1,2} and {2,3} are both submodules of [1,3]
    TypeAQuiver vee = TypeAQuiver::parse("1>2,2<3");
    auto vsubs = submodule_masks(vee, {1, 3});
    CHECK(std::find(vsubs.begin(), vsubs.end(), VertexMask(0b011)) != vsubs.end());
    CHECK(std::find(vsubs.begin(), vsubs.end(), VertexMask(0b110)) != vsubs.end());
}

TEST_CASE("left perpendiculars")
{
    auto hom = build_hom_table(kA2);
    const size_t count = 3;
    const ModSet all = 0b111;
    CHECK(left_perp(hom, count, 0) == all);
    // perp of everything is empty once all simples are present
    CHECK(left_perp(hom, count, all) == 0);
    // ^perp(S2): X with Hom(X, S2) = 0: S1 and [1,2]... Hom([1,2],S2)=0,
    // Hom(S1,S2)=0, Hom(S2,S2)=1 -> {S1, [1,2]}
    ModSet s2 = ModSet(1) << interval_index(kA2, {2, 2});
    ModSet expect = (ModSet(1) << interval_index(kA2, {1, 1}))
                    | (ModSet(1) << interval_index(kA2, {1, 2}));
    CHECK(left_perp(hom, count, s2) == expect);
}

TEST_CASE("torsion lattices at small rank")
{
    TorsionLattice a1 = torsion_lattice(TypeAQuiver::parse("a1"));
    CHECK(a1.classes.size() == 2);
    CHECK(a1.labels.size() == 1);
    CHECK(a1.label(0, 1) == ThinModule{1, 1});
    CHECK(maximal_chains(a1).size() == 1);

    TorsionLattice a2 = torsion_lattice(kA2);
    CHECK(a2.classes.size() == 5);
    auto chains = maximal_chains(a2);
    REQUIRE(chains.size() == 2);
    std::multiset<size_t> lengths;
    for (const auto& c : chains) lengths.insert(c.size() - 1);
    CHECK(lengths == std::multiset<size_t>{2, 3});

    // bound guard
    CHECK_THROWS_AS(torsion_lattice(TypeAQuiver::parse("a4"), 3), BoundExceededError);
}

TEST_CASE("lattice classes agree with both naive enumerators")
{
    std::vector<TypeAQuiver> corpus{TypeAQuiver::parse("a1"), kA2, kA2rev};
    for (const auto& q : all_a3_orientations()) corpus.push_back(q);
    for (const auto& q : corpus) {
        TorsionLattice lat = torsion_lattice(q);
        auto hom_route = testhelp::naive_torsion_classes_hom(q);
        auto structural_route = testhelp::naive_torsion_classes_structural(q);
        std::set<ModSet> a(lat.classes.begin(), lat.classes.end());
        std::set<ModSet> b(hom_route.begin(), hom_route.end());
        std::set<ModSet> c(structural_route.begin(), structural_route.end());
        CHECK(a == b);
        CHECK(a == c);
    }
    // the Hom-table route is cheap enough for A4 as well
    TorsionLattice a4 = torsion_lattice(TypeAQuiver::parse("a4"));
    auto hom_route = testhelp::naive_torsion_classes_hom(TypeAQuiver::parse("a4"));
    CHECK(a4.classes.size() == hom_route.size());
    CHECK(a4.classes.size() == 42); // Catalan(5)
    CHECK(std::set<ModSet>(a4.classes.begin(), a4.classes.end())
          == std::set<ModSet>(hom_route.begin(), hom_route.end()));
}

TEST_CASE("A2 chains and their brick sequences")
{
    TorsionLattice lat = torsion_lattice(kA2);
    auto chains = maximal_chains(lat);
    REQUIRE(chains.size() == 2);
    std::vector<std::vector<ThinModule>> cfhos;
    for (const auto& c : chains) cfhos.push_back(cfho_from_chain(lat, c));
    std::set<std::vector<ThinModule>> got(cfhos.begin(), cfhos.end());
    std::set<std::vector<ThinModule>> want{
        {ThinModule{1, 1}, ThinModule{1, 2}, ThinModule{2, 2}},
        {ThinModule{2, 2}, ThinModule{1, 1}},
    };
    CHECK(got == want);
}

TEST_CASE("verify_cfho hand cases")
{
    TorsionLattice lat = torsion_lattice(kA2);
    // (S2, S1) is complete forward hom-orthogonal over 1>2
    CHECK(verify_cfho(lat, {ThinModule{2, 2}, ThinModule{1, 1}}).ok());
    // its reverse is forward orthogonal but not maximal: [1,2] inserts
    CfhoReport rev = verify_cfho(lat, {ThinModule{1, 1}, ThinModule{2, 2}});
    CHECK_FALSE(rev.ok());
    CHECK(rev.forward_ok);
    CHECK_FALSE(rev.maximal_ok);
    CHECK_FALSE(rev.intermediate_ok);
    // a single non-simple brick is never complete (all simples must occur)
    CHECK_FALSE(verify_cfho(lat, {ThinModule{1, 2}}).ok());
    // the wrong order has a Hom and fails forward orthogonality
    CfhoReport bad = verify_cfho(lat, {ThinModule{1, 2}, ThinModule{1, 1}, ThinModule{2, 2}});
    CHECK_FALSE(bad.forward_ok);
}

TEST_CASE("chain -> CFHO -> chain round trip on every A2/A3 lattice")
{
    std::vector<TypeAQuiver> corpus{kA2, kA2rev};
    for (const auto& q : all_a3_orientations()) corpus.push_back(q);
    for (const auto& q : corpus) {
        TorsionLattice lat = torsion_lattice(q);
        for (const auto& chain : maximal_chains(lat)) {
            auto mods = cfho_from_chain(lat, chain);
            CfhoReport rep = verify_cfho(lat, mods);
            CHECK_MESSAGE(rep.ok(), "CFHO check failed: ", rep.detail);
            // the insertion-maximality route and the intermediate-perp
            // route must agree
            CHECK(rep.maximal_ok == rep.intermediate_ok);
            CHECK(mgs_from_cfho(lat, mods) == chain);
            // all simples occur, first and last entries are simple
            std::set<ThinModule> entries(mods.begin(), mods.end());
            for (int v = 1; v <= q.n(); ++v) CHECK(entries.contains(ThinModule{v, v}));
            CHECK(mods.front().length() == 1);
            CHECK(mods.back().length() == 1);
        }
    }
}

TEST_CASE("the two maximality tests agree on random forward-orthogonal sequences")
{
    // For a forward hom-orthogonal sequence, the vanishing of the
    // intermediate perpendiculars is equivalent to maximality *within
    // G(N)*: no brick of G(N) can be inserted.  (Bricks outside G(N)
    // can sometimes be inserted into a partial sequence, so the
    // all-bricks insertion test is strictly stronger on non-generating
    // inputs; once G(N) is everything the two coincide.)
    std::mt19937 rng(60613);
    std::vector<TypeAQuiver> corpus{kA2};
    for (const auto& q : all_a3_orientations()) corpus.push_back(q);
    corpus.push_back(TypeAQuiver::parse("a4"));
    int forward_cases = 0;
    for (const auto& q : corpus) {
        TorsionLattice lat = torsion_lattice(q);
        auto inds = indecomposables(q);
        const size_t count = inds.size();
        std::uniform_int_distribution<size_t> len(1, count);
        for (int trial = 0; trial < 120; ++trial) {
            std::vector<ThinModule> mods = inds;
            std::shuffle(mods.begin(), mods.end(), rng);
            mods.resize(len(rng));
            CfhoReport rep = verify_cfho(lat, mods);
            if (!rep.forward_ok) continue;
            ++forward_cases;

            ModSet all_mods = 0;
            std::vector<int> idx;
            for (const auto& m : mods) {
                idx.push_back(interval_index(q, m));
                all_mods |= ModSet(1) << idx.back();
            }
            ModSet g = left_perp(lat.hom, count, right_perp(lat.hom, count, all_mods));
            bool maximal_in_g = true;
            for (size_t b = 0; b < count && maximal_in_g; ++b) {
                if (!((g >> b) & 1)) continue;
                for (size_t pos = 0; pos <= mods.size() && maximal_in_g; ++pos) {
                    bool fits = true;
                    for (size_t i = 0; i < pos && fits; ++i)
                        if (lat.hom(idx[i], static_cast<int>(b)) != 0) fits = false;
                    for (size_t j = pos; j < mods.size() && fits; ++j)
                        if (lat.hom(static_cast<int>(b), idx[j]) != 0) fits = false;
                    if (fits) maximal_in_g = false;
                }
            }
            CHECK(maximal_in_g == rep.intermediate_ok);
            // insertable-in-G(N) implies insertable at all
            if (!maximal_in_g) CHECK_FALSE(rep.maximal_ok);
            // once the sequence generates, the two routes coincide
            if (rep.generates_ok) CHECK(rep.maximal_ok == rep.intermediate_ok);
        }
    }
    CHECK(forward_cases > 50);
}

TEST_CASE("mgs_from_cfho rejects non-CFHO input")
{
    TorsionLattice lat = torsion_lattice(kA2);
    CHECK_THROWS_AS(mgs_from_cfho(lat, {ThinModule{1, 1}, ThinModule{2, 2}}), NotCfhoError);
}

TEST_CASE("rank one: the whole story in the smallest case")
{
    TypeAQuiver a1 = TypeAQuiver::parse("a1");
    TorsionLattice lat = torsion_lattice(a1);
    std::vector<int> chain{lat.bottom, lat.top};
    CHECK(cfho_from_chain(lat, chain) == std::vector<ThinModule>{ThinModule{1, 1}});
    CHECK(mgs_from_cfho(lat, {ThinModule{1, 1}}) == chain);
    CentralCharge z(rv({3}), rv({2}));
    auto [stables, semis] = stable_and_semistable(a1, z);
    CHECK(stables == std::vector<ThinModule>{ThinModule{1, 1}});
    CHECK(semis == stables);
}

TEST_CASE("Harder-Narasimhan filtrations on A2")
{
    // charge with cot S1 = 1 > cot S2 = 0: y [1,2] is destabilised by its
    // socle S2 and the filtration has two steps
    CentralCharge z(rv({1, 0}), rv({1, 1}));
    HNFiltration f = hn_filtration(kA2, {ThinModule{1, 2}}, z);
    REQUIRE(f.phases.size() == 2);
    CHECK(f.step_masks[0][0] == 0b10);
    CHECK(f.step_masks[1][0] == 0b11);
    CHECK(f.factors[0] == std::vector<ThinModule>{ThinModule{2, 2}});
    CHECK(f.factors[1] == std::vector<ThinModule>{ThinModule{1, 1}});
    CHECK(f.phases[0] > f.phases[1]);

    // the opposite charge makes [1,2] semistable: single step
    CentralCharge z2(rv({0, 1}), rv({1, 1}));
    HNFiltration g = hn_filtration(kA2, {ThinModule{1, 2}}, z2);
    CHECK(g.phases.size() == 1);
    CHECK(g.factors[0] == std::vector<ThinModule>{ThinModule{1, 2}});

    // simples are always one-step
    CHECK(hn_filtration(kA2, {ThinModule{1, 1}}, z).phases.size() == 1);
}

TEST_CASE("HN is independent of the search order")
{
    std::vector<TypeAQuiver> corpus{kA2};
    for (const auto& q : all_a3_orientations()) corpus.push_back(q);
    std::vector<RatVec> alphas{rv({1, 0}), rv({0, 1}), rv({3, -2}), rv({-1, 5})};
    for (const auto& q : corpus) {
        RatVec ones(static_cast<size_t>(q.n()), Rational(1));
        for (const auto& a2 : alphas) {
            RatVec alpha = a2;
            alpha.resize(static_cast<size_t>(q.n()), Rational(2));
            CentralCharge z(alpha, ones);
            for (const auto& m : indecomposables(q)) {
                HNFiltration base = hn_filtration(q, {m}, z, 0);
                for (unsigned seed = 1; seed <= 5; ++seed) {
                    HNFiltration other = hn_filtration(q, {m}, z, seed);
                    CHECK(base.step_masks == other.step_masks);
                    CHECK(base.factors == other.factors);
                }
            }
        }
    }
}

TEST_CASE("HN of direct sums: merge equals direct extraction (length <= 6)")
{
    std::vector<TypeAQuiver> corpus{kA2, TypeAQuiver::parse("1>2,2>3"),
                                    TypeAQuiver::parse("1>2,2<3")};
    std::vector<RatVec> alphas{rv({2, -1, 3}), rv({0, 1, 0}), rv({5, 4, -2})};
    for (const auto& q : corpus) {
        RatVec ones(static_cast<size_t>(q.n()), Rational(1));
        auto inds = indecomposables(q);
        for (const auto& a3 : alphas) {
            RatVec alpha(a3.begin(), a3.begin() + q.n());
            CentralCharge z(alpha, ones);
            for (size_t i = 0; i < inds.size(); ++i)
                for (size_t j = i; j < inds.size(); ++j) {
                    if (inds[i].length() + inds[j].length() > 6) continue;
                    std::vector<ThinModule> sum{inds[i], inds[j]};
                    HNFiltration merged = hn_filtration(q, sum, z);
                    auto direct = testhelp::direct_sum_hn(q, sum, z);
                    REQUIRE(merged.phases.size() == direct.size());
                    std::vector<VertexMask> acc(2, 0);
                    for (size_t s = 0; s < direct.size(); ++s) {
                        CHECK(merged.phases[s] == direct[s].first);
                        for (size_t t = 0; t < 2; ++t) acc[t] |= direct[s].second[t];
                        CHECK(merged.step_masks[s] == acc);
                    }
                }
        }
    }
}

TEST_CASE("induced torsion classes at extreme thresholds")
{
    TorsionLattice lat = torsion_lattice(kA2);
    CentralCharge z(rv({1, 0}), rv({1, 1}));
    // below every phase: everything; above every phase: nothing
    charge::Phase low{Rational(100), Rational(1)};  // cot 100: minimal phase
    charge::Phase high{Rational(-100), Rational(1)};
    CHECK(induced_torsion_class(lat, z, low) == 0b111);
    CHECK(induced_torsion_class(lat, z, high) == 0);
}

TEST_CASE("verify_induction on A1 and a deliberately broken charge")
{
    TorsionLattice a1 = torsion_lattice(TypeAQuiver::parse("a1"));
    CentralCharge z1(rv({7}), rv({2}));
    CHECK(verify_induction(a1, maximal_chains(a1)[0], z1).ok);

    TorsionLattice a2 = torsion_lattice(kA2);
    for (const auto& chain : maximal_chains(a2)) {
        auto mods = cfho_from_chain(a2, chain);
        cluster::BrickSeq seq{2, {}};
        for (const auto& m : mods) seq.dims.push_back(dim_vector(kA2, m));
        auto report = charge::solve_crossing(seq, rv({1, 1}));
        REQUIRE(report.feasible());
        CentralCharge z(*report.alpha, rv({1, 1}));
        CHECK(verify_induction(a2, chain, z).ok);
        // swapping two brick phases breaks the ordering precondition
        RatVec swapped{(*report.alpha)[1], (*report.alpha)[0]};
        if (!charge::verify_charge_order(swapped, rv({1, 1}), seq))
            CHECK_FALSE(verify_induction(a2, chain, CentralCharge(swapped, rv({1, 1}))).ok);
    }
}

TEST_CASE("stable and semistable objects on A2")
{
    // cot S1 = 1, cot [1,2] = 1/2, cot S2 = 0: phases increase along
    // S1, [1,2], S2; chain (S1, [1,2], S2) has strictly decreasing phases
    // when read with the charge alpha = (1, 0)... check the solver's pick
    TorsionLattice lat = torsion_lattice(kA2);
    for (const auto& chain : maximal_chains(lat)) {
        auto mods = cfho_from_chain(lat, chain);
        cluster::BrickSeq seq{2, {}};
        for (const auto& m : mods) seq.dims.push_back(dim_vector(kA2, m));
        auto rep = charge::solve_crossing(seq, rv({1, 1}));
        REQUIRE(rep.feasible());
        CentralCharge z(*rep.alpha, rv({1, 1}));
        auto [stables, semis] = stable_and_semistable(kA2, z);
        std::set<ThinModule> stable_set(stables.begin(), stables.end());
        CHECK(stable_set == std::set<ThinModule>(mods.begin(), mods.end()));
        // at thin scale the semistable indecomposables are the stables
        CHECK(semis == stables);
    }
}

TEST_CASE("chain filtration equals HN filtration for feasible charges (A2)")
{
    TorsionLattice lat = torsion_lattice(kA2);
    for (const auto& chain : maximal_chains(lat)) {
        auto mods = cfho_from_chain(lat, chain);
        cluster::BrickSeq seq{2, {}};
        for (const auto& m : mods) seq.dims.push_back(dim_vector(kA2, m));
        auto rep = charge::solve_crossing(seq, rv({1, 1}));
        REQUIRE(rep.feasible());
        CentralCharge z(*rep.alpha, rv({1, 1}));
        for (const auto& m : indecomposables(kA2)) {
            auto chain_steps = chain_filtration(lat, chain, m);
            HNFiltration hn = hn_filtration(kA2, {m}, z);
            std::vector<VertexMask> hn_steps;
            for (const auto& masks : hn.step_masks) hn_steps.push_back(masks[0]);
            CHECK(chain_steps == hn_steps);
        }
    }
}

TEST_CASE("AR translate via the Coxeter transform")
{
    CHECK_FALSE(tau(kA2, ThinModule{1, 2}).has_value()); // P(1)
    CHECK_FALSE(tau(kA2, ThinModule{2, 2}).has_value()); // P(2)
    CHECK(tau(kA2, ThinModule{1, 1}) == ThinModule{2, 2});

    // Hom(X, tau X) = 0 for every indecomposable over a representation-
    // finite hereditary algebra; exhaustive on A2/A3/A4
    std::vector<TypeAQuiver> corpus{kA2, kA2rev, TypeAQuiver::parse("a4")};
    for (const auto& q : all_a3_orientations()) corpus.push_back(q);
    for (const auto& q : corpus)
        for (const auto& m : indecomposables(q)) {
            auto t = tau(q, m);
            if (t) {
                CHECK(hom_dim(q, m, *t) == 0);
                // tau is injective off projectives: tau m determines m
                // via the inverse Coxeter transform
                ratlin::IntVec back = mat_apply(
                    ratlin::rat_inverse(coxeter_matrix(q)).to_int(), dim_vector(q, *t));
                CHECK(back == dim_vector(q, m));
            }
        }
}

TEST_CASE("g-vectors")
{
    auto gv = [](const TypeAQuiver& q, ThinModule m) { return g_vector(q, m); };
    CHECK(gv(kA2, {1, 2}) == ratlin::IntVec{1, 0});  // projective P(1)
    CHECK(gv(kA2, {2, 2}) == ratlin::IntVec{0, 1});  // projective P(2)
    CHECK(gv(kA2, {1, 1}) == ratlin::IntVec{1, -1}); // 0 -> P2 -> P1 -> S1 -> 0

    // the Cartan matrix transports every g-vector back to the dimension
    // vector (checked inside g_vector, re-checked here across A3)
    for (const auto& q : all_a3_orientations())
        for (const auto& m : indecomposables(q))
            CHECK(mat_apply(cartan_matrix(q), g_vector(q, m)) == dim_vector(q, m));

    // projectives have unit g-vectors
    for (const auto& q : all_a3_orientations())
        for (int v = 1; v <= 3; ++v) {
            ratlin::IntVec unit(3, ratlin::Int(0));
            unit[static_cast<size_t>(v - 1)] = 1;
            CHECK(g_vector(q, projective(q, v)) == unit);
        }
}

TEST_CASE("tau-tilting pairs and c-matrices on A2")
{
    TorsionLattice lat = torsion_lattice(kA2);
    auto pairs = tau_tilting_pairs(lat);
    REQUIRE(pairs.size() == 5);

    int bottom = lat.bottom, top = lat.top;
    CHECK(pairs[static_cast<size_t>(bottom)].m_part.empty());
    CHECK(pairs[static_cast<size_t>(bottom)].p_vertices == std::vector<int>{1, 2});
    CHECK(pairs[static_cast<size_t>(bottom)].g == -ratlin::IntMatrix::identity(2));
    CHECK(pairs[static_cast<size_t>(bottom)].c == -ratlin::IntMatrix::identity(2));

    CHECK(pairs[static_cast<size_t>(top)].m_part
          == std::vector<ThinModule>{ThinModule{1, 2}, ThinModule{2, 2}});
    CHECK(pairs[static_cast<size_t>(top)].g == ratlin::IntMatrix::identity(2));
    CHECK(pairs[static_cast<size_t>(top)].c == ratlin::IntMatrix::identity(2));

    // Fac(S1) = {S1}: m-part {S1}, p-part {P(2)}, c-matrix [[1,-1],[0,-1]]
    int s1_class = lat.class_index(ModSet(1) << interval_index(kA2, {1, 1}));
    REQUIRE(s1_class >= 0);
    CHECK(pairs[static_cast<size_t>(s1_class)].m_part == std::vector<ThinModule>{ThinModule{1, 1}});
    CHECK(pairs[static_cast<size_t>(s1_class)].p_vertices == std::vector<int>{2});
    CHECK(pairs[static_cast<size_t>(s1_class)].c == ratlin::IntMatrix{{1, -1}, {0, -1}});
}

TEST_CASE("exchange sign dictionary holds on every cover edge of A2/A3")
{
    std::vector<TypeAQuiver> corpus{kA2, kA2rev};
    for (const auto& q : all_a3_orientations()) corpus.push_back(q);
    for (const auto& q : corpus) {
        TorsionLattice lat = torsion_lattice(q);
        auto pairs = tau_tilting_pairs(lat);
        for (const auto& [edge, label] : lat.labels)
            CHECK_MESSAGE(check_exchange_signs(lat, pairs, edge.first, edge.second),
                          "exchange signs failed on edge ", edge.first, " -> ", edge.second, " of ", q.str());
    }
}
