/*
 * Stability machinery for the type-A oracle: Harder-Narasimhan
 * filtrations of thin modules and their direct sums, the torsion classes
 * T_{>= r} induced by a central charge, and the comparison between the
 * charge-induced picture and a maximal chain of torsion classes.
 *
 * For a single interval module the HN filtration is found definitionally:
 * repeatedly extract the submodule of maximal phase (breaking ties by
 * maximal length) with an exhaustive search over the finitely many
 * flow-closed support subsets.  That maximiser is provably unique; the
 * search asserts this rather than assuming it, and an optional seed
 * permutes the candidate order so tests can show the result does not
 * depend on it.  For a direct sum, the per-summand filtrations are
 * merged by phase; tests validate the merge against direct extraction.
 */

#pragma once

#include "greenwalk/charge.hpp"
#include "greenwalk/repkit_lattice.hpp"

namespace repkit {

using charge::CentralCharge;
using charge::Phase;

Phase phase_of(const TypeAQuiver& q, const CentralCharge& z, const ThinModule& m);
Phase phase_of_mask(const TypeAQuiver& q, const CentralCharge& z, VertexMask mask);

struct HNFiltration {
    std::vector<ThinModule> summands;
    // step_masks[s][i]: support of the step-s submodule inside summand i;
    // strictly increasing in s, ending at the full supports.
    std::vector<std::vector<VertexMask>> step_masks;
    // factors[s]: interval components of the step-s subquotient
    std::vector<std::vector<ThinModule>> factors;
    std::vector<Phase> phases; // strictly decreasing
};

/// HN filtration of a direct sum of intervals under the charge z.  The
/// seed only permutes internal search order; the result is asserted to
/// be independent of it.
HNFiltration hn_filtration(const TypeAQuiver& q, const std::vector<ThinModule>& summands,
                           const CentralCharge& z, unsigned seed = 0);

/// Phase of the maximally destabilizing quotient (the last HN factor).
Phase max_destabilizing_quotient_phase(const TypeAQuiver& q, const ThinModule& m,
                                       const CentralCharge& z, unsigned seed = 0);

/// T_{>= r}: indecomposables whose maximally destabilizing quotient has
/// phase >= r.  The result is asserted to satisfy the torsion-class
/// fixed-point and factor-closure invariants.
ModSet induced_torsion_class(const TorsionLattice& lat, const CentralCharge& z, const Phase& r);

struct InductionReport {
    bool ok = false;
    std::string detail;
};

/// Checks T_{>= phase(N_i)} = T_i for every class of the chain, where
/// N_i are the chain's brick labels.  Requires z to order the bricks
/// with strictly decreasing phases; a violated precondition is reported,
/// not thrown.
InductionReport verify_induction(const TorsionLattice& lat, const std::vector<int>& chain,
                                 const CentralCharge& z);

/// phi-stable and phi-semistable indecomposables (by exhaustive proper
/// submodule search).
std::pair<std::vector<ThinModule>, std::vector<ThinModule>>
stable_and_semistable(const TypeAQuiver& q, const CentralCharge& z);

/// The filtration of the interval m induced by a maximal chain: step i
/// is the torsion part of m with respect to chain class i.  Returned as
/// the strictly increasing sequence of nonzero step supports (the same
/// encoding hn_filtration uses for a single summand), so the two can be
/// compared directly.
std::vector<VertexMask> chain_filtration(const TorsionLattice& lat, const std::vector<int>& chain,
                                         const ThinModule& m);

} // namespace repkit
