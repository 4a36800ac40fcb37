/*
 * Module-category oracle for path algebras of type-A quivers over Q.
 *
 * The underlying graph is always the path 1 - 2 - ... - n; an orientation
 * assigns a direction to each edge.  Every indecomposable representation
 * is thin: it is the interval module [a, b] with a one-dimensional space
 * at each vertex of [a, b] and identity maps along the arrows inside the
 * interval.  This makes everything brute-forceable:
 *
 *   - submodules of an interval are the subsets of its support closed
 *     under the arrow flow (finitely many);
 *   - Hom spaces are kernels of small intertwiner systems and have
 *     dimension 0 or 1;
 *   - projectives and injectives are the reachable / co-reachable
 *     intervals of a vertex.
 *
 * Vertex sets are bitmasks (bit v-1 = vertex v); sets of indecomposables
 * are bitmasks over the canonical interval ordering.
 */

#pragma once

#include "greenwalk/matrix.hpp"
#include "greenwalk/quiver.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace repkit {

using ratlin::Int;
using ratlin::IntMatrix;
using ratlin::IntVec;

using VertexMask = uint32_t;
using ModSet = uint64_t; // set of indecomposables, bit = canonical index

struct BoundExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Orientation of the path 1 - 2 - ... - n.  dir[e] refers to the edge
/// between vertices e+1 and e+2: +1 means e+1 -> e+2, -1 the reverse.
class TypeAQuiver {
public:
    TypeAQuiver(int n, std::vector<int> dir);

    int n() const { return n_; }
    /// +1 if the edge between v and v+1 points right, -1 if left.
    int edge_dir(int v) const { return dir_.at(static_cast<size_t>(v) - 1); }

    cluster::Quiver as_quiver() const;

    /// Accepts an edge list like "1>2,3<2" (every path edge exactly once)
    /// or the shorthand "aN" for the linear orientation 1>2>...>N.
    static TypeAQuiver parse(const std::string& spec);
    /// Recognises a general quiver whose underlying graph is the path on
    /// consecutively labelled vertices.
    static std::optional<TypeAQuiver> from_quiver(const cluster::Quiver& q);

    std::string str() const;

    friend bool operator==(const TypeAQuiver&, const TypeAQuiver&) = default;

private:
    int n_;
    std::vector<int> dir_;
};

/// Interval module [lo, hi], 1 <= lo <= hi <= n.
struct ThinModule {
    int lo = 1, hi = 1;
    friend bool operator==(const ThinModule&, const ThinModule&) = default;
    friend auto operator<=>(const ThinModule&, const ThinModule&) = default;
    int length() const { return hi - lo + 1; }
    std::string str() const { return std::to_string(lo) + ".." + std::to_string(hi); }
};

/// All n(n+1)/2 intervals, ordered by (lo, hi).
std::vector<ThinModule> indecomposables(const TypeAQuiver& q);
int interval_index(const TypeAQuiver& q, const ThinModule& m);

IntVec dim_vector(const TypeAQuiver& q, const ThinModule& m);
VertexMask support_mask(const ThinModule& m);
/// The interval with the given 0/1 dimension vector, if there is one.
std::optional<ThinModule> interval_of_dim(const TypeAQuiver& q, const IntVec& d);

/// Maximal runs of consecutive vertices in the mask, as intervals.
std::vector<ThinModule> components(VertexMask mask);

/// Subsets of `within` closed under the arrow flow: for every edge
/// u -> v with both endpoints in `within`, u in S implies v in S.
/// These are exactly the submodules of the module supported on `within`.
std::vector<VertexMask> flow_closed_subsets(const TypeAQuiver& q, VertexMask within);

/// Submodule supports of the interval m (includes 0 and the full support).
std::vector<VertexMask> submodule_masks(const TypeAQuiver& q, const ThinModule& m);

/// dim Hom(m, w) over Q, computed as the kernel dimension of the
/// intertwiner system; 0 or 1 for thin type-A modules.
int hom_dim(const TypeAQuiver& q, const ThinModule& m, const ThinModule& w);

/// Full Hom table over the canonical indecomposable list.
struct HomTable {
    std::vector<std::vector<int>> dim;
    int operator()(int from, int to) const { return dim[from][to]; }
};
HomTable build_hom_table(const TypeAQuiver& q);

ThinModule projective(const TypeAQuiver& q, int vertex);
ThinModule injective(const TypeAQuiver& q, int vertex);
bool is_projective(const TypeAQuiver& q, const ThinModule& m);

/// Cartan matrix: column j is the dimension vector of P(j+1).
IntMatrix cartan_matrix(const TypeAQuiver& q);
/// Euler form matrix E = I - (arrow adjacency): x^T E y = dim Hom - dim Ext.
IntMatrix euler_matrix(const TypeAQuiver& q);
/// Coxeter transformation -E^{-1} E^T; sends dim X to dim tau(X) for
/// non-projective X.
IntMatrix coxeter_matrix(const TypeAQuiver& q);

} // namespace repkit
