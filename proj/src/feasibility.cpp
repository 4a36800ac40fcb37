#include "greenwalk/feasibility.hpp"

#include <algorithm>
#include <map>

namespace ratlin {

namespace {

// Weak inequality <x, a> <= b with integer data.
struct WeakRow {
    IntVec a;
    Int b;
};

// Scale so the gcd of all coefficients and the bound is 1.  Scaling an
// inequality by a positive rational preserves its solution set.
void normalize(WeakRow& r)
{
    Int g = ratlin::gcd(r.b, Int(0));
    for (const auto& x : r.a) g = ratlin::gcd(g, x);
    if (sgn(g) == 0 || g == 1) return;
    for (auto& x : r.a) x /= g;
    r.b /= g;
}

// Deduplicate rows with identical coefficient vectors, keeping the
// tightest bound.
std::vector<WeakRow> dedup(std::vector<WeakRow> rows)
{
    std::map<IntVec, Int> best;
    for (auto& r : rows) {
        normalize(r);
        auto it = best.find(r.a);
        if (it == best.end())
            best.emplace(std::move(r.a), std::move(r.b));
        else if (r.b < it->second)
            it->second = r.b;
    }
    std::vector<WeakRow> out;
    out.reserve(best.size());
    for (auto& [a, b] : best) out.push_back(WeakRow{a, b});
    return out;
}

struct EliminationStep {
    int var;                    // variable removed at this step
    std::vector<WeakRow> rows;  // rows involving it, at the time of removal
};

} // namespace

bool satisfies_strictly(const StrictSystem& sys, const RatVec& x)
{
    for (const auto& row : sys.rows())
        if (dot(x, row).sgn_of() >= 0) return false;
    return true;
}

Feasibility strict_feasible(const StrictSystem& sys)
{
    const int n = sys.dimension();
    if (sys.rows().empty())
        return Feasibility{RatVec(static_cast<size_t>(n), Rational(0))};

    std::vector<WeakRow> rows;
    rows.reserve(sys.rows().size());
    for (const auto& d : sys.rows()) rows.push_back(WeakRow{d, Int(-1)});
    rows = dedup(std::move(rows));

    std::vector<bool> eliminated(n, false);
    std::vector<EliminationStep> steps;
    steps.reserve(n);

    for (int round = 0; round < n; ++round) {
        // Pick the remaining variable with the fewest pos*neg pairings;
        // ties break to the lowest index so runs are reproducible.
        int var = -1;
        long best_cost = -1;
        for (int t = 0; t < n; ++t) {
            if (eliminated[t]) continue;
            long pos = 0, neg = 0;
            for (const auto& r : rows) {
                int s = sgn(r.a[t]);
                if (s > 0) ++pos;
                else if (s < 0) ++neg;
            }
            long cost = pos * neg;
            if (var < 0 || cost < best_cost) {
                var = t;
                best_cost = cost;
            }
        }
        eliminated[var] = true;

        std::vector<WeakRow> kept, pos, neg, involved;
        for (auto& r : rows) {
            int s = sgn(r.a[var]);
            if (s == 0) kept.push_back(std::move(r));
            else if (s > 0) pos.push_back(std::move(r));
            else neg.push_back(std::move(r));
        }
        involved = pos;
        involved.insert(involved.end(), neg.begin(), neg.end());
        steps.push_back(EliminationStep{var, std::move(involved)});

        for (const auto& p : pos)
            for (const auto& q : neg) {
                // q.a[var] < 0 < p.a[var]; the combination cancels var.
                Int cp = -q.a[var];
                Int cq = p.a[var];
                WeakRow comb;
                comb.a.resize(n);
                for (int j = 0; j < n; ++j) comb.a[j] = cp * p.a[j] + cq * q.a[j];
                comb.b = cp * p.b + cq * q.b;
                kept.push_back(std::move(comb));
            }
        rows = dedup(std::move(kept));
    }

    // Only constant rows 0 <= b remain.
    for (const auto& r : rows)
        if (sgn(r.b) < 0) return Feasibility{std::nullopt};

    // Back-substitute in reverse elimination order.  At each step the
    // recorded rows involve only this variable and ones assigned later,
    // so they reduce to bounds lo <= x_var <= hi.
    RatVec x(static_cast<size_t>(n), Rational(0));
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        std::optional<Rational> lo, hi;
        for (const auto& r : it->rows) {
            Rational rest(r.b);
            for (int j = 0; j < n; ++j) {
                if (j == it->var) continue;
                if (sgn(r.a[j]) != 0) rest -= Rational(r.a[j]) * x[j];
            }
            Rational bound = rest / Rational(r.a[it->var]);
            if (sgn(r.a[it->var]) > 0) {
                if (!hi || bound < *hi) hi = bound;
            } else {
                if (!lo || bound > *lo) lo = bound;
            }
        }
        Rational& v = x[it->var];
        if (lo && hi) {
            if (*lo > *hi)
                throw std::logic_error("strict_feasible: empty interval during back-substitution");
            v = (*lo + *hi) / Rational(2);
        } else if (hi) {
            v = *hi;
        } else if (lo) {
            v = *lo;
        }
    }

    if (!satisfies_strictly(sys, x))
        throw std::logic_error("strict_feasible: witness failed substitution check");
    return Feasibility{std::move(x)};
}

} // namespace ratlin
