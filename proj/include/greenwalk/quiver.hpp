/*
 * Quivers (finite directed multigraphs without loops or 2-cycles) and
 * their skew-symmetric exchange matrices.  Vertices are 1-based
 * everywhere in the public interface.
 */

#pragma once

#include "greenwalk/matrix.hpp"

#include <utility>

namespace cluster {

using ratlin::Int;
using ratlin::IntMatrix;

struct InvalidQuiverError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Quiver {
public:
    Quiver(int n, std::vector<std::pair<int, int>> arrows);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
    bool acyclic() const { return acyclic_; }

    int arrow_count(int from, int to) const;

    /// Exchange matrix: b[i][j] = #(i -> j) - #(j -> i).
    IntMatrix b_matrix() const;

    /// Reconstructs a quiver from a skew-symmetric matrix (b[i][j] > 0
    /// becomes b[i][j] arrows i -> j).
    static Quiver from_b_matrix(const IntMatrix& b);

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    int n_;
    std::vector<std::pair<int, int>> arrows_; // sorted, 1-based
    bool acyclic_;
};

/// Quiver mutation at vertex k (1-based), via the exchange matrix.
Quiver mutate_quiver(const Quiver& q, int k);

} // namespace cluster
