/*
 * Framed-quiver mutation and green walks.
 *
 * A state carries the exchange matrix B and the companion matrix C of
 * the framed quiver; mutation acts on the stacked matrix [B; C] by the
 * usual matrix mutation rule.  A vertex is green in a state when its
 * C-column is nonzero with all entries >= 0; a maximal green walk is a
 * sequence of green mutations ending in a state with no green vertex,
 * and such a final C equals minus a permutation matrix.
 *
 * Every state constructed here is checked for the structural invariants
 * (skew-symmetric B, sign-coherent columns, C invertible over Z); a
 * violation is a logic error, not an input error.
 */

#pragma once

#include "greenwalk/brickseq.hpp"
#include "greenwalk/quiver.hpp"

#include <set>

namespace cluster {

using ratlin::IntVec;

struct CMatrixState {
    IntMatrix b;
    IntMatrix c;
    friend bool operator==(const CMatrixState&, const CMatrixState&) = default;
};

struct NonGreenStepError : std::runtime_error {
    NonGreenStepError(size_t index, int vertex)
        : std::runtime_error("step " + std::to_string(index) + " mutates non-green vertex "
                             + std::to_string(vertex)),
          index(index), vertex(vertex)
    {
    }
    size_t index; // 0-based position of the offending step
    int vertex;
};

/// Fomin-Zelevinsky matrix mutation at vertex k (1-based).
IntMatrix mutate_exchange(const IntMatrix& b, int k);

CMatrixState initial_state(const Quiver& q);
CMatrixState mutate_state(const CMatrixState& s, int k);

bool column_sign_coherent(const IntMatrix& m, int j);
void validate_state(const CMatrixState& s);

/// Vertices whose C-column is nonzero and componentwise >= 0, ascending.
std::vector<int> green_vertices(const CMatrixState& s);

struct GreenWalk {
    Quiver quiver;
    std::vector<int> steps;
    std::vector<CMatrixState> states; // states.size() == steps.size() + 1
    bool is_maximal() const { return green_vertices(states.back()).empty(); }
};

/// Applies the given mutation sequence from the initial state, requiring
/// each step to be green when taken.  Throws NonGreenStepError otherwise.
GreenWalk run_walk(const Quiver& q, const std::vector<int>& seq);

/// Brick dimension vectors read off a green walk: entry i is column k_i
/// of the C-matrix in force just before step i.
BrickSeq bricks_of_walk(const GreenWalk& w);

struct MgsEnumeration {
    std::vector<GreenWalk> walks;        // lexicographic in step sequences
    bool truncated = false;              // true iff the walk limit was hit
    std::vector<std::vector<int>> budget_hits; // prefixes cut off by max_len
};

/// Depth-first enumeration of maximal green walks of an acyclic quiver.
/// Branches still green at depth max_len are reported in budget_hits;
/// enumeration stops (truncated = true) once limit walks were collected.
MgsEnumeration enumerate_mgs(const Quiver& q, size_t max_len, size_t limit);

} // namespace cluster
