#include "greenwalk/charge.hpp"

#include "greenwalk/walk.hpp"

namespace charge {

using ratlin::sgn;

namespace {

void check_brick(const RatVec& alpha_or_beta, const IntVec& v, const char* who)
{
    if (v.size() != alpha_or_beta.size())
        throw std::invalid_argument(std::string(who) + ": rank mismatch");
    bool nonzero = false;
    for (const auto& x : v) {
        if (sgn(x) < 0) throw std::invalid_argument(std::string(who) + ": negative entry");
        if (sgn(x) != 0) nonzero = true;
    }
    if (!nonzero) throw std::invalid_argument(std::string(who) + ": zero vector");
}

void check_beta(const RatVec& beta, const char* who)
{
    for (const auto& x : beta)
        if (x.sgn_of() <= 0)
            throw std::invalid_argument(std::string(who) + ": beta must be strictly positive");
}

} // namespace

Phase eval_charge(const CentralCharge& z, const IntVec& v)
{
    check_brick(z.beta, v, "eval_charge");
    Phase p{dot(z.alpha, v), dot(z.beta, v)};
    if (p.cot_den.sgn_of() <= 0) throw std::logic_error("eval_charge: non-positive denominator");
    return p;
}

Ordering phase_cmp(const CentralCharge& z, const IntVec& v, const IntVec& w)
{
    Phase pv = eval_charge(z, v);
    Phase pw = eval_charge(z, w);
    auto c = pv <=> pw;
    if (c < 0) return Ordering::Less;
    if (c > 0) return Ordering::Greater;
    return Ordering::Equal;
}

StrictSystem build_crossing_system(const cluster::BrickSeq& bricks, const RatVec& beta)
{
    check_beta(beta, "build_crossing_system");
    if (bricks.dims.empty())
        throw std::invalid_argument("build_crossing_system: no bricks");
    const int n = static_cast<int>(beta.size());
    if (bricks.n != n) throw std::invalid_argument("build_crossing_system: rank mismatch");

    StrictSystem sys(n);
    for (size_t i = 0; i + 1 < bricks.dims.size(); ++i) {
        const IntVec& cur = bricks.dims[i];
        const IntVec& nxt = bricks.dims[i + 1];
        check_brick(beta, cur, "build_crossing_system");
        check_brick(beta, nxt, "build_crossing_system");
        Rational bc = dot(beta, cur);
        Rational bn = dot(beta, nxt);
        // row = <beta,next> * cur - <beta,cur> * next, cleared to integers
        // by the (positive) lcm of the two denominators.
        Int scale = ratlin::lcm(bc.den(), bn.den());
        Int cn = bn.num() * (scale / bn.den());
        Int cc = bc.num() * (scale / bc.den());
        IntVec row(n);
        for (int j = 0; j < n; ++j) row[j] = cn * cur[j] - cc * nxt[j];
        if (ratlin::is_zero_vec(row))
            throw std::domain_error("build_crossing_system: consecutive bricks are proportional");
        Int g = 0;
        for (const auto& x : row) g = ratlin::gcd(g, x);
        for (auto& x : row) x /= g;
        sys.add_row(std::move(row));
    }
    if (bricks.dims.size() == 1) {
        // single brick: empty system
        check_brick(beta, bricks.dims[0], "build_crossing_system");
    }
    return sys;
}

CrossingReport solve_crossing(const cluster::BrickSeq& bricks, const RatVec& beta)
{
    check_beta(beta, "solve_crossing");
    try {
        StrictSystem sys = build_crossing_system(bricks, beta);
        auto result = ratlin::strict_feasible(sys);
        CrossingReport report{bricks, beta, std::move(sys), std::move(result.witness)};
        if (report.alpha && !verify_charge_order(*report.alpha, beta, bricks))
            throw std::logic_error("solve_crossing: witness does not order the bricks");
        return report;
    } catch (const std::domain_error&) {
        // proportional consecutive bricks force equal phases for every alpha
        return CrossingReport{bricks, beta, StrictSystem(static_cast<int>(beta.size())),
                              std::nullopt};
    }
}

CrossingReport solve_crossing_sweep(const cluster::BrickSeq& bricks,
                                    const std::vector<RatVec>& betas)
{
    if (betas.empty()) throw std::invalid_argument("solve_crossing_sweep: empty beta list");
    CrossingReport last = solve_crossing(bricks, betas.front());
    if (last.feasible()) return last;
    for (size_t i = 1; i < betas.size(); ++i) {
        last = solve_crossing(bricks, betas[i]);
        if (last.feasible()) return last;
    }
    return last;
}

bool verify_charge_order(const RatVec& alpha, const RatVec& beta, const cluster::BrickSeq& bricks)
{
    check_beta(beta, "verify_charge_order");
    CentralCharge z(alpha, beta);
    for (size_t i = 0; i + 1 < bricks.dims.size(); ++i) {
        Phase a = eval_charge(z, bricks.dims[i]);
        Phase b = eval_charge(z, bricks.dims[i + 1]);
        if (a.cot() >= b.cot()) return false;
    }
    if (!bricks.dims.empty()) check_brick(beta, bricks.dims.back(), "verify_charge_order");
    return true;
}

} // namespace charge
