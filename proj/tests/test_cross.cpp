#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

/*
 * Cross-module checks: the framed-quiver picture (cluster) against the
 * module-category oracle (repkit).  The dictionary under test:
 *
 *  - bricks of a green walk = dimension vectors of the CFHO labelling
 *    the corresponding maximal chain of torsion classes;
 *  - the walk's C-matrix = minus the tau-tilting c-matrix of the chain
 *    class, columns arranged by mutation slot;
 *  - maximal chains <-> maximal green walks, bijectively;
 *  - transported CFHOs stay CFHOs over the mutated quiver (reflection
 *    variant), and the transported charge orders them.
 */

#include "greenwalk/repkit_stability.hpp"
#include "greenwalk/repkit_tautilting.hpp"
#include "greenwalk/rotation.hpp"

#include <set>

using namespace repkit;
using charge::CentralCharge;
using cluster::BrickSeq;
using cluster::GreenWalk;
using ratlin::Int;
using ratlin::IntVec;
using ratlin::Rational;
using ratlin::RatVec;

namespace {

RatVec rv(std::initializer_list<long> xs)
{
    RatVec v;
    for (long x : xs) v.emplace_back(Rational(x));
    return v;
}

std::vector<TypeAQuiver> desk_corpus()
{
    return {TypeAQuiver::parse("1>2"),      TypeAQuiver::parse("1<2"),
            TypeAQuiver::parse("1>2,2>3"),  TypeAQuiver::parse("1>2,2<3"),
            TypeAQuiver::parse("1<2,2>3"),  TypeAQuiver::parse("1<2,2<3")};
}

std::vector<TypeAQuiver> desk_corpus_with_a4()
{
    auto corpus = desk_corpus();
    corpus.push_back(TypeAQuiver::parse("a4"));
    return corpus;
}

std::vector<ThinModule> bricks_to_intervals(const TypeAQuiver& q, const BrickSeq& bricks)
{
    std::vector<ThinModule> mods;
    for (const auto& d : bricks.dims) {
        auto m = interval_of_dim(q, d);
        REQUIRE_MESSAGE(m.has_value(), "brick dimension vector is not an interval");
        mods.push_back(*m);
    }
    return mods;
}

BrickSeq intervals_to_bricks(const TypeAQuiver& q, const std::vector<ThinModule>& mods)
{
    BrickSeq seq{q.n(), {}};
    for (const auto& m : mods) seq.dims.push_back(dim_vector(q, m));
    return seq;
}

} // namespace

TEST_CASE("the paper walk end-to-end on linear A4")
{
    TypeAQuiver a4 = TypeAQuiver::parse("a4");
    cluster::Quiver q = a4.as_quiver();
    GreenWalk walk = cluster::run_walk(q, {2, 1, 4, 3, 1, 2});
    BrickSeq bricks = cluster::bricks_of_walk(walk);

    TorsionLattice lat = torsion_lattice(a4);
    std::vector<ThinModule> mods = bricks_to_intervals(a4, bricks);
    CHECK(mods == std::vector<ThinModule>{ThinModule{2, 2}, ThinModule{1, 1}, ThinModule{4, 4},
                                          ThinModule{1, 3}, ThinModule{2, 3}, ThinModule{3, 3}});
    CfhoReport rep = verify_cfho(lat, mods);
    CHECK_MESSAGE(rep.ok(), rep.detail);

    std::vector<int> chain = mgs_from_cfho(lat, mods);
    CHECK(chain.size() == 7);
    CHECK(cfho_from_chain(lat, chain) == mods);

    CentralCharge z(rv({2, 1, 20, 3}), rv({1, 1, 1, 1}));
    CHECK(charge::verify_charge_order(z.alpha, z.beta, bricks));
    CHECK(verify_induction(lat, chain, z).ok);

    auto [stables, semis] = stable_and_semistable(a4, z);
    CHECK(std::set<ThinModule>(stables.begin(), stables.end())
          == std::set<ThinModule>(mods.begin(), mods.end()));
    CHECK(semis == stables);

    // swapping the first two coordinates of alpha reverses the phases of
    // the first two bricks, so the chain is no longer induced
    CentralCharge broken(rv({1, 2, 20, 3}), rv({1, 1, 1, 1}));
    CHECK_FALSE(charge::verify_charge_order(broken.alpha, broken.beta, bricks));
    CHECK_FALSE(verify_induction(lat, chain, broken).ok);

    for (const auto& m : indecomposables(a4)) {
        auto chain_steps = chain_filtration(lat, chain, m);
        HNFiltration hn = hn_filtration(a4, {m}, z);
        std::vector<VertexMask> hn_steps;
        for (const auto& masks : hn.step_masks) hn_steps.push_back(masks[0]);
        CHECK(chain_steps == hn_steps);
    }
}

TEST_CASE("chains and green walks are the same thing, with matching c-matrices")
{
    for (const auto& a : desk_corpus_with_a4()) {
        CAPTURE(a.str());
        cluster::Quiver q = a.as_quiver();
        TorsionLattice lat = torsion_lattice(a);
        auto pairs = tau_tilting_pairs(lat);
        auto chains = maximal_chains(lat);

        size_t budget = static_cast<size_t>(a.n() * (a.n() + 1) / 2);
        auto enumeration = cluster::enumerate_mgs(q, budget, 10000);
        CHECK_FALSE(enumeration.truncated);
        CHECK(enumeration.budget_hits.empty());
        CHECK(enumeration.walks.size() == chains.size());

        std::set<std::vector<int>> enumerated_steps;
        for (const auto& w : enumeration.walks) enumerated_steps.insert(w.steps);

        std::set<std::vector<int>> constructed_steps;
        for (const auto& chain : chains) {
            ChainWalk cw = chain_to_walk(lat, pairs, chain);
            constructed_steps.insert(cw.steps);

            GreenWalk walk = cluster::run_walk(q, cw.steps); // throws if not green
            REQUIRE(walk.states.size() == cw.slotted_cmatrices.size());
            for (size_t i = 0; i < walk.states.size(); ++i)
                CHECK(walk.states[i].c == -cw.slotted_cmatrices[i]);

            // walk bricks = dimension vectors of the chain's edge labels
            BrickSeq bricks = cluster::bricks_of_walk(walk);
            CHECK(bricks == intervals_to_bricks(a, cfho_from_chain(lat, chain)));
        }
        // the constructed walks are exactly the enumerated ones
        CHECK(constructed_steps == enumerated_steps);
    }
}

TEST_CASE("every maximal chain with a feasible ones-charge induces itself")
{
    for (const auto& a : desk_corpus()) {
        CAPTURE(a.str());
        TorsionLattice lat = torsion_lattice(a);
        RatVec ones(static_cast<size_t>(a.n()), Rational(1));
        size_t feasible_count = 0;
        for (const auto& chain : maximal_chains(lat)) {
            auto mods = cfho_from_chain(lat, chain);
            auto report = charge::solve_crossing(intervals_to_bricks(a, mods), ones);
            if (!report.feasible()) continue;
            ++feasible_count;
            CentralCharge z(*report.alpha, ones);
            CHECK(verify_induction(lat, chain, z).ok);
            auto [stables, semis] = stable_and_semistable(a, z);
            CHECK(std::set<ThinModule>(stables.begin(), stables.end())
                  == std::set<ThinModule>(mods.begin(), mods.end()));
            for (const auto& m : indecomposables(a)) {
                auto chain_steps = chain_filtration(lat, chain, m);
                HNFiltration hn = hn_filtration(a, {m}, z);
                std::vector<VertexMask> hn_steps;
                for (const auto& masks : hn.step_masks) hn_steps.push_back(masks[0]);
                CHECK(chain_steps == hn_steps);
            }
        }
        CHECK(feasible_count > 0);
    }
}

TEST_CASE("rotation transports CFHOs to the mutated quiver (reflection variant)")
{
    size_t rotated_count = 0, skipped_not_type_a = 0;
    for (const auto& a : desk_corpus_with_a4()) {
        CAPTURE(a.str());
        cluster::Quiver q = a.as_quiver();
        TorsionLattice lat = torsion_lattice(a);
        for (const auto& chain : maximal_chains(lat)) {
            auto mods = cfho_from_chain(lat, chain);
            REQUIRE(mods.front().length() == 1);
            int k = mods.front().lo;
            auto mutated = TypeAQuiver::from_quiver(cluster::mutate_quiver(q, k));
            if (!mutated || !mutated->as_quiver().acyclic()) {
                ++skipped_not_type_a;
                continue;
            }
            ++rotated_count;
            BrickSeq rotated = cluster::rotate_cfho(intervals_to_bricks(a, mods), k, q,
                                                    cluster::RotationVariant::Reflection);
            TorsionLattice mutated_lat = torsion_lattice(*mutated);
            std::vector<ThinModule> rotated_mods = bricks_to_intervals(*mutated, rotated);
            CfhoReport rep = verify_cfho(mutated_lat, rotated_mods);
            CHECK_MESSAGE(rep.ok(), a.str(), " chain rotation at ", k, ": ", rep.detail);
        }
    }
    CHECK(rotated_count > 0);
    CHECK(skipped_not_type_a > 0); // middle flow-through vertices do occur
}

TEST_CASE("the printed transport matrix (projection variant) fails the rotation property")
{
    // Over 1>2 the CFHO (S1, [1,2], S2) starts at the simple S_1.  The
    // projection transport sends both [1,2] and S2 to (1,1), so the
    // image has a repeated entry and cannot be forward hom-orthogonal.
    TypeAQuiver a2 = TypeAQuiver::parse("1>2");
    cluster::Quiver q = a2.as_quiver();
    BrickSeq original{2, {{Int(1), Int(0)}, {Int(1), Int(1)}, {Int(0), Int(1)}}};

    BrickSeq proj = cluster::rotate_cfho(original, 1, q, cluster::RotationVariant::Projection);
    CHECK(proj.dims[0] == proj.dims[1]); // both (1,1): information lost
    TypeAQuiver mutated = *TypeAQuiver::from_quiver(cluster::mutate_quiver(q, 1));
    TorsionLattice mlat = torsion_lattice(mutated);
    CHECK_FALSE(verify_cfho(mlat, bricks_to_intervals(mutated, proj)).ok());

    BrickSeq refl = cluster::rotate_cfho(original, 1, q, cluster::RotationVariant::Reflection);
    CHECK(refl.dims == std::vector<IntVec>{{Int(0), Int(1)}, {Int(1), Int(1)}, {Int(1), Int(0)}});
    CHECK(verify_cfho(mlat, bricks_to_intervals(mutated, refl)).ok());
}

TEST_CASE("transported charges order transported brick sequences")
{
    // Hand instance over 1>2, k = 1: alpha = (0,-2), beta = (-1,2)
    // satisfies cot N_2 < cot N_3 < cot N_1 with <beta, N_i> > 0 for
    // i >= 2 and beta_1 < 0.
    TypeAQuiver a2 = TypeAQuiver::parse("1>2");
    cluster::Quiver q = a2.as_quiver();
    BrickSeq original{2, {{Int(1), Int(0)}, {Int(1), Int(1)}, {Int(0), Int(1)}}};
    RatVec alpha = rv({0, -2});
    RatVec beta{Rational(-1), Rational(2)};

    CentralCharge z = cluster::rotate_charge(alpha, beta, 1, q);
    CHECK(z.alpha == rv({0, -2}));
    CHECK(z.beta == rv({1, 1}));

    BrickSeq rotated = cluster::rotate_cfho(original, 1, q);
    CHECK(charge::verify_charge_order(z.alpha, z.beta, rotated));

    // General sweep: for every eligible chain, look for (alpha, beta)
    // satisfying the rotated-order hypothesis with beta_k < 0; whenever
    // the system is feasible, the transported charge must order the
    // transported bricks.
    size_t verified = 0;
    for (const auto& a : desk_corpus()) {
        cluster::Quiver quiv = a.as_quiver();
        TorsionLattice lat = torsion_lattice(a);
        for (const auto& chain : maximal_chains(lat)) {
            auto mods = cfho_from_chain(lat, chain);
            int k = mods.front().lo;
            auto mutated = TypeAQuiver::from_quiver(cluster::mutate_quiver(quiv, k));
            if (!mutated) continue;

            // beta: ones with beta_k = -1/2 keeps B_k beta > 0 and the
            // transported beta positive
            RatVec b(static_cast<size_t>(a.n()), Rational(1));
            b[static_cast<size_t>(k - 1)] = Rational(-1, 2);

            // strict system for cot N_2 < ... < cot N_m < cot N_1 with
            // sign-aware cross-multiplication (only <beta, N_1> < 0)
            BrickSeq seq = intervals_to_bricks(a, mods);
            ratlin::StrictSystem sys(a.n());
            bool degenerate = false;
            auto add_row = [&](const IntVec& u, const IntVec& v, bool flip) {
                // cot u < cot v, both denominators positive unless flip
                Rational bu = dot(b, u), bv = dot(b, v);
                Int scale = ratlin::lcm(bu.den(), bv.den());
                Int cu = bu.num() * (scale / bu.den());
                Int cv = bv.num() * (scale / bv.den());
                IntVec row(static_cast<size_t>(a.n()));
                for (int i = 0; i < a.n(); ++i) row[static_cast<size_t>(i)] =
                    flip ? cu * v[static_cast<size_t>(i)] - cv * u[static_cast<size_t>(i)]
                         : cv * u[static_cast<size_t>(i)] - cu * v[static_cast<size_t>(i)];
                if (ratlin::is_zero_vec(row)) degenerate = true;
                else sys.add_row(row);
            };
            for (size_t i = 1; i + 1 < seq.dims.size(); ++i)
                add_row(seq.dims[i], seq.dims[i + 1], false);
            if (seq.dims.size() > 1) add_row(seq.dims.back(), seq.dims.front(), true);
            if (degenerate) continue;

            auto result = ratlin::strict_feasible(sys);
            if (!result.feasible()) continue;
            RatVec alpha2 = *result.witness;

            CentralCharge transported = cluster::rotate_charge(alpha2, b, k, quiv);
            BrickSeq rotated2 = cluster::rotate_cfho(seq, k, quiv);
            CHECK(charge::verify_charge_order(transported.alpha, transported.beta, rotated2));
            ++verified;
        }
    }
    CHECK(verified > 0);
}

TEST_CASE("every enumerated maximal walk certificate on A1..A4")
{
    for (int n = 1; n <= 4; ++n) {
        TypeAQuiver a = TypeAQuiver::parse("a" + std::to_string(n));
        auto enumeration =
            cluster::enumerate_mgs(a.as_quiver(), static_cast<size_t>(n * (n + 1) / 2), 1000);
        CHECK(enumeration.budget_hits.empty());
        for (const auto& w : enumeration.walks) {
            CHECK(w.states.back().c.is_negated_permutation());
            // every c-matrix along the walk is unimodular and
            // sign-coherent (validated in mutate_state; spot-check here)
            for (const auto& s : w.states) CHECK(ratlin::is_z_invertible(s.c));
            // brick sequence contains all unit vectors, unit first/last
            BrickSeq bricks = cluster::bricks_of_walk(w);
            auto is_unit = [](const IntVec& v) {
                int ones = 0;
                for (const auto& x : v)
                    if (x == 1) ++ones;
                    else if (ratlin::sgn(x) != 0) return false;
                return ones == 1;
            };
            CHECK(is_unit(bricks.dims.front()));
            CHECK(is_unit(bricks.dims.back()));
            for (int v = 0; v < n; ++v) {
                IntVec unit(static_cast<size_t>(n), Int(0));
                unit[static_cast<size_t>(v)] = 1;
                CHECK(std::find(bricks.dims.begin(), bricks.dims.end(), unit)
                      != bricks.dims.end());
            }
        }
    }
}
