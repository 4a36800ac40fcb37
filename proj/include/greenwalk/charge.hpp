/*
 * Central charges and exact phase comparison.
 *
 * A central charge is a pair (alpha, beta) of rational vectors with
 * beta > 0; it sends a nonzero dimension vector v to the upper-half-plane
 * point <alpha,v> + i <beta,v>.  Phases are never materialised as real
 * numbers: the phase of v is represented by the exact cotangent
 * <alpha,v> / <beta,v>, and phase(v) < phase(w) iff cot(v) > cot(w),
 * decided by cross-multiplication of exact rationals.
 *
 * A brick sequence N_1, ..., N_m satisfies the crossing inequalities for
 * a fixed beta when some alpha solves the strict homogeneous system
 *
 *     <alpha, <beta,N_{i+1}> N_i - <beta,N_i> N_{i+1}> < 0,  1 <= i < m,
 *
 * i.e. the phases of the bricks are strictly decreasing.  The system is
 * bilinear in (alpha, beta) jointly, so the solver decides it exactly
 * for the supplied beta only; an infeasible verdict always means
 * "infeasible for the given beta", never a refutation of existence for
 * every beta.
 */

#pragma once

#include "greenwalk/brickseq.hpp"
#include "greenwalk/feasibility.hpp"

namespace charge {

using ratlin::Int;
using ratlin::IntVec;
using ratlin::Rational;
using ratlin::RatVec;
using ratlin::StrictSystem;

struct CentralCharge {
    RatVec alpha;
    RatVec beta;

    CentralCharge(RatVec a, RatVec b) : alpha(std::move(a)), beta(std::move(b))
    {
        if (alpha.size() != beta.size())
            throw std::invalid_argument("CentralCharge: alpha/beta size mismatch");
        for (const auto& x : beta)
            if (x.sgn_of() <= 0)
                throw std::invalid_argument("CentralCharge: beta must be strictly positive");
    }
    int n() const { return static_cast<int>(alpha.size()); }
};

/// Exact phase of a nonzero non-negative class: cot = num/den, den > 0.
/// Phases are ordered opposite to cotangents.
struct Phase {
    Rational cot_num;
    Rational cot_den;

    Rational cot() const { return cot_num / cot_den; }

    friend bool operator==(const Phase& a, const Phase& b)
    {
        return a.cot_num * b.cot_den == b.cot_num * a.cot_den;
    }
    // phase order: larger phase <=> smaller cotangent
    friend std::strong_ordering operator<=>(const Phase& a, const Phase& b)
    {
        const Rational l = a.cot_num * b.cot_den;
        const Rational r = b.cot_num * a.cot_den;
        if (l > r) return std::strong_ordering::less;
        if (l < r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

enum class Ordering { Less, Equal, Greater };

Phase eval_charge(const CentralCharge& z, const IntVec& v);

/// Compares phases of v and w under z (Less means phase(v) < phase(w)).
Ordering phase_cmp(const CentralCharge& z, const IntVec& v, const IntVec& w);

/// The strict system above, with rows scaled integral and divided by
/// their gcd.  Throws std::domain_error if consecutive bricks are
/// proportional (the inequality degenerates to 0 < 0).
StrictSystem build_crossing_system(const cluster::BrickSeq& bricks, const RatVec& beta);

struct CrossingReport {
    cluster::BrickSeq bricks;
    RatVec beta_used;
    StrictSystem system;
    std::optional<RatVec> alpha; // engaged iff feasible for beta_used
    bool feasible() const { return alpha.has_value(); }
};

/// Decides the crossing inequalities for one beta.  Total: degenerate
/// systems come back infeasible rather than throwing.  Any witness is
/// re-checked through verify_charge_order before the report is returned.
CrossingReport solve_crossing(const cluster::BrickSeq& bricks, const RatVec& beta);

/// Tries each beta in turn, returning the first feasible report (or the
/// last infeasible one).  The verdict is only about the supplied list.
CrossingReport solve_crossing_sweep(const cluster::BrickSeq& bricks,
                                    const std::vector<RatVec>& betas);

/// True iff cot N_1 < cot N_2 < ... < cot N_m strictly, i.e. the phases
/// are strictly decreasing.  Requires beta > 0 and nonzero bricks.
bool verify_charge_order(const RatVec& alpha, const RatVec& beta, const cluster::BrickSeq& bricks);

} // namespace charge
