#include "greenwalk/repkit_stability.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace repkit {

using charge::eval_charge;

Phase phase_of_mask(const TypeAQuiver& q, const CentralCharge& z, VertexMask mask)
{
    IntVec d(static_cast<size_t>(q.n()), Int(0));
    for (int v = 1; v <= q.n(); ++v)
        if (mask & (VertexMask(1) << (v - 1))) d[v - 1] = 1;
    return eval_charge(z, d);
}

Phase phase_of(const TypeAQuiver& q, const CentralCharge& z, const ThinModule& m)
{
    return eval_charge(z, dim_vector(q, m));
}

namespace {

// The maximally destabilizing submodule of the module supported on
// `within`: maximal phase, then maximal length.  The maximiser is unique
// (a tie would contradict the see-saw property); assert that.
VertexMask max_destabilizing_sub(const TypeAQuiver& q, const CentralCharge& z, VertexMask within,
                                 unsigned seed)
{
    std::vector<VertexMask> candidates = flow_closed_subsets(q, within);
    if (seed != 0) {
        std::mt19937 rng(seed);
        std::shuffle(candidates.begin(), candidates.end(), rng);
    }
    bool have = false;
    Phase best{ratlin::Rational(0), ratlin::Rational(1)};
    int best_len = -1;
    VertexMask best_mask = 0;
    int ties = 0;
    for (VertexMask s : candidates) {
        if (s == 0) continue;
        Phase p = phase_of_mask(q, z, s);
        int len = std::popcount(s);
        if (!have || p > best || (p == best && len > best_len)) {
            have = true;
            best = p;
            best_len = len;
            best_mask = s;
            ties = 1;
        } else if (p == best && len == best_len) {
            ++ties;
        }
    }
    if (!have) throw std::logic_error("max_destabilizing_sub: empty module");
    if (ties != 1)
        throw std::logic_error("max_destabilizing_sub: maximiser is not unique");
    return best_mask;
}

// Per-summand HN data before the merge.
struct SummandHN {
    std::vector<VertexMask> steps; // accumulated, strictly increasing
    std::vector<Phase> phases;     // per extracted factor
};

SummandHN single_hn(const TypeAQuiver& q, const ThinModule& m, const CentralCharge& z,
                    unsigned seed)
{
    SummandHN out;
    VertexMask remaining = support_mask(m);
    VertexMask acc = 0;
    while (remaining != 0) {
        VertexMask u = max_destabilizing_sub(q, z, remaining, seed);
        Phase p = phase_of_mask(q, z, u);
        // the factor is semistable and all its components share its phase
        for (const ThinModule& c : components(u)) {
            Phase pc = phase_of(q, z, c);
            if (!(pc == p)) throw std::logic_error("hn: factor component with different phase");
        }
        for (VertexMask v : flow_closed_subsets(q, u)) {
            if (v == 0) continue;
            if (phase_of_mask(q, z, v) > p)
                throw std::logic_error("hn: extracted factor is not semistable");
        }
        if (!out.phases.empty() && !(p < out.phases.back()))
            throw std::logic_error("hn: phases not strictly decreasing");
        acc |= u;
        out.steps.push_back(acc);
        out.phases.push_back(p);
        remaining &= ~u;
    }
    return out;
}

} // namespace

HNFiltration hn_filtration(const TypeAQuiver& q, const std::vector<ThinModule>& summands,
                           const CentralCharge& z, unsigned seed)
{
    if (summands.empty()) throw std::invalid_argument("hn_filtration: zero module");
    if (z.n() != q.n()) throw std::invalid_argument("hn_filtration: rank mismatch");

    std::vector<SummandHN> per;
    per.reserve(summands.size());
    for (const auto& m : summands) per.push_back(single_hn(q, m, z, seed));

    // Merge per-summand factors by phase, descending.
    std::vector<Phase> all_phases;
    for (const auto& s : per)
        for (const auto& p : s.phases) all_phases.push_back(p);
    std::sort(all_phases.begin(), all_phases.end(),
              [](const Phase& a, const Phase& b) { return b < a; });
    all_phases.erase(std::unique(all_phases.begin(), all_phases.end(),
                                 [](const Phase& a, const Phase& b) { return a == b; }),
                     all_phases.end());

    HNFiltration out;
    out.summands = summands;
    std::vector<size_t> cursor(summands.size(), 0);
    std::vector<VertexMask> acc(summands.size(), 0);
    for (const Phase& p : all_phases) {
        std::vector<ThinModule> factor;
        for (size_t i = 0; i < per.size(); ++i) {
            if (cursor[i] < per[i].phases.size() && per[i].phases[cursor[i]] == p) {
                VertexMask grown = per[i].steps[cursor[i]];
                for (const ThinModule& c : components(grown & ~acc[i])) factor.push_back(c);
                acc[i] = grown;
                ++cursor[i];
            }
        }
        if (factor.empty()) throw std::logic_error("hn_filtration: empty merge step");
        out.step_masks.push_back(acc);
        out.factors.push_back(std::move(factor));
        out.phases.push_back(p);
    }
    for (size_t i = 0; i < per.size(); ++i)
        if (cursor[i] != per[i].phases.size())
            throw std::logic_error("hn_filtration: merge left factors behind");
    return out;
}

Phase max_destabilizing_quotient_phase(const TypeAQuiver& q, const ThinModule& m,
                                       const CentralCharge& z, unsigned seed)
{
    return hn_filtration(q, {m}, z, seed).phases.back();
}

ModSet induced_torsion_class(const TorsionLattice& lat, const CentralCharge& z, const Phase& r)
{
    ModSet t = 0;
    for (size_t x = 0; x < lat.ind.size(); ++x) {
        Phase p = max_destabilizing_quotient_phase(lat.q, lat.ind[x], z);
        if (!(p < r)) t |= ModSet(1) << x;
    }
    if (!is_torsion_fixed_point(lat, t))
        throw std::logic_error("induced_torsion_class: not a perp fixed point");
    if (!is_factor_closed(lat, t))
        throw std::logic_error("induced_torsion_class: not factor-closed");
    return t;
}

InductionReport verify_induction(const TorsionLattice& lat, const std::vector<int>& chain,
                                 const CentralCharge& z)
{
    std::vector<ThinModule> bricks;
    try {
        bricks = cfho_from_chain(lat, chain);
    } catch (const NotMaximalChainError& e) {
        return {false, e.what()};
    }
    cluster::BrickSeq seq{lat.q.n(), {}};
    for (const auto& b : bricks) seq.dims.push_back(dim_vector(lat.q, b));
    if (!charge::verify_charge_order(z.alpha, z.beta, seq))
        return {false, "charge does not order the chain's bricks strictly"};

    for (size_t i = 0; i < bricks.size(); ++i) {
        Phase r = phase_of(lat.q, z, bricks[i]);
        ModSet induced = induced_torsion_class(lat, z, r);
        if (induced != lat.class_mask(chain[i + 1]))
            return {false, "T_{>= phase(N_" + std::to_string(i + 1) + ")} differs from T_"
                               + std::to_string(i + 1)};
    }
    return {true, ""};
}

std::pair<std::vector<ThinModule>, std::vector<ThinModule>>
stable_and_semistable(const TypeAQuiver& q, const CentralCharge& z)
{
    std::vector<ThinModule> stables, semis;
    for (const ThinModule& m : indecomposables(q)) {
        Phase pm = phase_of(q, z, m);
        bool stable = true, semi = true;
        for (VertexMask s : submodule_masks(q, m)) {
            if (s == 0 || s == support_mask(m)) continue;
            Phase ps = phase_of_mask(q, z, s);
            if (!(ps < pm)) stable = false;
            if (pm < ps) semi = false;
        }
        if (stable) stables.push_back(m);
        if (semi) semis.push_back(m);
    }
    return {stables, semis};
}

std::vector<VertexMask> chain_filtration(const TorsionLattice& lat, const std::vector<int>& chain,
                                         const ThinModule& m)
{
    std::vector<ThinModule> bricks = cfho_from_chain(lat, chain); // validates the chain
    const VertexMask full = support_mask(m);

    // torsion part of m with respect to a class: union of the flow-closed
    // subsets all of whose components lie in the class
    auto torsion_part = [&](ModSet cls) {
        VertexMask part = 0;
        for (VertexMask s : flow_closed_subsets(lat.q, full)) {
            bool inside = true;
            for (const ThinModule& c : components(s))
                if (!((cls >> interval_index(lat.q, c)) & 1)) { inside = false; break; }
            if (inside) part |= s;
        }
        // the union is itself a qualifying submodule
        for (const ThinModule& c : components(part))
            if (!((cls >> interval_index(lat.q, c)) & 1))
                throw std::logic_error("chain_filtration: torsion part escapes the class");
        return part;
    };

    std::vector<VertexMask> steps;
    VertexMask prev = 0;
    for (size_t i = 1; i < chain.size(); ++i) {
        VertexMask cur = torsion_part(lat.class_mask(chain[i]));
        if ((cur & prev) != prev)
            throw std::logic_error("chain_filtration: steps not nested");
        // the subquotient must lie in Filt(N_i): for thin modules, every
        // component is a copy of the brick N_i
        for (const ThinModule& c : components(cur & ~prev))
            if (!(c == bricks[i - 1]))
                throw std::logic_error("chain_filtration: factor is not the edge brick");
        if (cur != prev) steps.push_back(cur);
        prev = cur;
    }
    if (prev != full) throw std::logic_error("chain_filtration: did not exhaust the module");
    return steps;
}

} // namespace repkit
