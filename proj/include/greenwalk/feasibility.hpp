/*
 * Exact feasibility of homogeneous systems of strict linear inequalities
 *
 *     <x, d_i> < 0   for every row d_i.
 *
 * Homogeneity makes strictness scale away: the system has a solution iff
 * the weak system <x, d_i> <= -1 does, and the latter is decided exactly
 * by Fourier-Motzkin elimination over the rationals.  Any witness found
 * is substituted back into the strict rows before being returned.
 */

#pragma once

#include "greenwalk/rational.hpp"

#include <optional>

namespace ratlin {

/// Homogeneous system of strict constraints <x, row> < 0.
class StrictSystem {
public:
    explicit StrictSystem(int dimension) : n_(dimension)
    {
        if (dimension < 0) throw std::invalid_argument("StrictSystem: negative dimension");
    }

    int dimension() const { return n_; }
    const std::vector<IntVec>& rows() const { return rows_; }

    void add_row(IntVec row)
    {
        if (static_cast<int>(row.size()) != n_)
            throw std::invalid_argument("StrictSystem: row has wrong dimension");
        if (is_zero_vec(row))
            throw std::invalid_argument("StrictSystem: zero row");
        rows_.push_back(std::move(row));
    }

    friend bool operator==(const StrictSystem&, const StrictSystem&) = default;

private:
    int n_;
    std::vector<IntVec> rows_;
};

struct Feasibility {
    std::optional<RatVec> witness;
    bool feasible() const { return witness.has_value(); }
};

/// Decides the system.  Total: never throws on well-formed input.  An
/// empty system is feasible with the canonical witness 0.  Every witness
/// returned has been checked against the strict rows by substitution.
Feasibility strict_feasible(const StrictSystem& sys);

/// True iff <x, row> < 0 holds for every row (used by tests as the
/// independent check on returned witnesses).
bool satisfies_strictly(const StrictSystem& sys, const RatVec& x);

} // namespace ratlin
