/*
 * tau-tilting data for the type-A oracle.
 *
 * For a torsion class T the associated pair is (M, P): M the
 * Ext-projectives of T (X in T with Hom(T, tau X) = 0), P the
 * projectives with no Hom into T; |M| + |P| = n always.  The g-matrix
 * columns are the g-vectors of the M-summands and the negated g-vectors
 * of the P-summands; the c-matrix is the inverse transpose of the
 * g-matrix, integral and sign-coherent.
 *
 * The sign dictionary pinned by the tests relating this data to framed
 * quiver mutation: along a green walk whose torsion classes are
 * T_0 < T_1 < ..., the cluster C-matrix of the walk state equals MINUS
 * the c-matrix here, with columns ordered by mutation slot.  In
 * particular the c-vector of the summand leaving a pair at a cover is
 * minus the dimension vector of the cover's brick label, and the
 * incoming summand's c-vector is plus that dimension vector.
 */

#pragma once

#include "greenwalk/repkit_lattice.hpp"

namespace repkit {

/// AR translate: zero (nullopt) on projectives, otherwise the interval
/// whose dimension vector is the Coxeter transform of dim m.  A
/// non-interval image would mean a convention bug and throws.
std::optional<ThinModule> tau(const TypeAQuiver& q, const ThinModule& m);

/// g-vector from the minimal projective presentation of m (projective
/// cover, then projective cover of the kernel, which is projective since
/// the algebra is hereditary).
IntVec g_vector(const TypeAQuiver& q, const ThinModule& m);

/// A decorated summand of a tau-tilting pair: either a module summand or
/// a projective in the P-part (tracked with its vertex).
struct Summand {
    bool from_p = false;
    ThinModule mod;  // for P-part summands, the projective interval
    int vertex = 0;  // engaged for P-part summands
    friend bool operator==(const Summand&, const Summand&) = default;
    friend auto operator<=>(const Summand&, const Summand&) = default;
};

struct TauTiltingPair {
    std::vector<ThinModule> m_part; // canonical interval order
    std::vector<int> p_vertices;    // ascending
    IntMatrix g;                    // columns follow `columns`
    IntMatrix c;                    // (g^T)^{-1}
    std::vector<Summand> columns;   // column labels: m_part then p-part
    int column_of(const Summand& s) const;
};

/// One pair per torsion class, indexed like lat.classes.
std::vector<TauTiltingPair> tau_tilting_pairs(const TorsionLattice& lat);

/// Exchange data of a cover edge: X leaves the lower pair, Y enters the
/// upper one.
struct ExchangePair {
    Summand out_summand;
    Summand in_summand;
};
ExchangePair exchange_of_edge(const TauTiltingPair& lower, const TauTiltingPair& upper);

/// c(X) = -dim(label) on the lower pair, c(Y) = +dim(label) on the upper
/// pair, and the green-direction sign conditions c(X) <= 0, c(Y) >= 0.
bool check_exchange_signs(const TorsionLattice& lat, const std::vector<TauTiltingPair>& pairs,
                   int from, int to);

/// Walks a maximal chain through pair mutation, tracking which slot each
/// summand occupies (the bottom pair (0, A) puts P(i) in slot i; every
/// exchange reuses the slot of the summand it replaces).  `steps` is the
/// induced mutation sequence; slotted_cmatrices[i] is the chain's i-th
/// c-matrix with columns arranged by slot.
struct ChainWalk {
    std::vector<int> steps;
    std::vector<IntMatrix> slotted_cmatrices;
};
ChainWalk chain_to_walk(const TorsionLattice& lat, const std::vector<TauTiltingPair>& pairs,
                        const std::vector<int>& chain);

} // namespace repkit
