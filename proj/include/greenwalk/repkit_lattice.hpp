/*
 * The lattice of torsion classes of a type-A path algebra, with each
 * cover edge labelled by its unique minimal extending brick, and the
 * two mutually inverse constructions
 *
 *     maximal chain of torsion classes  <->  complete forward
 *                                            hom-orthogonal sequence.
 *
 * Torsion classes are recorded as the set of indecomposables they
 * contain.  Every torsion class of a representation-finite algebra is a
 * left Hom-perpendicular ^perp(S), and those are exactly the
 * intersection closure of the single-module perpendiculars, which is
 * how enumeration proceeds.  Construction asserts, for every class, the
 * fixed-point identity T = ^perp(T^perp) and closure under thin factors,
 * and for every cover edge the uniqueness of the minimal extending brick.
 */

#pragma once

#include "greenwalk/repkit_base.hpp"

#include <map>

namespace repkit {

/// Reads GREENWALK_MAX_N (default 5): the largest rank the oracle agrees
/// to enumerate.
int configured_max_n();

ModSet left_perp(const HomTable& hom, size_t count, ModSet of);
ModSet right_perp(const HomTable& hom, size_t count, ModSet of);

struct TorsionLattice {
    TypeAQuiver q;
    std::vector<ThinModule> ind;
    HomTable hom;
    std::vector<ModSet> classes;               // sorted by (size, mask)
    std::vector<std::vector<int>> covers_up;   // ascending cover lists
    std::vector<std::vector<int>> covers_down;
    std::map<std::pair<int, int>, int> labels; // cover edge -> indec index
    int bottom = -1, top = -1;

    int class_index(ModSet mask) const;
    const ModSet& class_mask(int i) const { return classes[static_cast<size_t>(i)]; }
    bool is_cover(int from, int to) const;
    ThinModule label(int from, int to) const;
};

TorsionLattice torsion_lattice(const TypeAQuiver& q, int bound = configured_max_n());

/// T = ^perp(T^perp)?
bool is_torsion_fixed_point(const TorsionLattice& lat, ModSet t);
/// Every quotient of every member decomposes into members?
bool is_factor_closed(const TorsionLattice& lat, ModSet t);

/// All maximal chains bottom -> top, ordered lexicographically by class
/// index.  The count of these equals the number of maximal green
/// sequences of the quiver.
std::vector<std::vector<int>> maximal_chains(const TorsionLattice& lat);

struct NotMaximalChainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotCfhoError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Edge labels N_1, ..., N_m along a maximal chain; the output always
/// passes verify_cfho.
std::vector<ThinModule> cfho_from_chain(const TorsionLattice& lat, const std::vector<int>& chain);

/// The chain T_i = ^perp(N_{i+1} + ... + N_m) recovered from a CFHO;
/// inverse to cfho_from_chain.  Throws NotCfhoError on bad input.
std::vector<int> mgs_from_cfho(const TorsionLattice& lat, const std::vector<ThinModule>& mods);

struct CfhoReport {
    bool bricks_ok = false;      // every entry a brick
    bool forward_ok = false;     // Hom(N_i, N_j) = 0 for i < j
    bool maximal_ok = false;     // no brick inserts at any position
    bool intermediate_ok = false;       // G(N) & (N_1..N_k)^perp & ^perp(N_{k+1}..N_m) = 0, all k
    bool generates_ok = false;   // G(N) is everything
    std::string detail;          // first failure, for diagnostics
    bool ok() const { return bricks_ok && forward_ok && maximal_ok && intermediate_ok && generates_ok; }
};

/// Checks the complete forward hom-orthogonal conditions one by one.
/// Never throws on inputs made of valid intervals; the verdict and the
/// failing condition come back in the report.
CfhoReport verify_cfho(const TorsionLattice& lat, const std::vector<ThinModule>& mods);

} // namespace repkit
