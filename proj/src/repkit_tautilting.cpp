#include "greenwalk/repkit_tautilting.hpp"

#include <algorithm>

namespace repkit {

using ratlin::sgn;

std::optional<ThinModule> tau(const TypeAQuiver& q, const ThinModule& m)
{
    if (is_projective(q, m)) return std::nullopt;
    IntVec image = mat_apply(coxeter_matrix(q), dim_vector(q, m));
    auto interval = interval_of_dim(q, image);
    if (!interval)
        throw std::logic_error("tau: Coxeter image of " + m.str() + " is not an interval");
    return interval;
}

IntVec g_vector(const TypeAQuiver& q, const ThinModule& m)
{
    const int n = q.n();
    // tops of the interval: vertices with no in-arrow from inside it
    IntVec tops(static_cast<size_t>(n), Int(0));
    IntVec cover_dim(static_cast<size_t>(n), Int(0));
    for (int v = m.lo; v <= m.hi; ++v) {
        bool in_from_left = v > m.lo && q.edge_dir(v - 1) > 0;
        bool in_from_right = v < m.hi && q.edge_dir(v) < 0;
        if (in_from_left || in_from_right) continue;
        tops[v - 1] = 1;
        ThinModule p = projective(q, v);
        for (int u = p.lo; u <= p.hi; ++u) cover_dim[u - 1] += 1;
    }

    // kernel of the projective cover, decomposed in the projective basis
    IntVec kdim(static_cast<size_t>(n), Int(0));
    IntVec mdim = dim_vector(q, m);
    for (int v = 0; v < n; ++v) {
        kdim[v] = cover_dim[v] - mdim[v];
        if (sgn(kdim[v]) < 0) throw std::logic_error("g_vector: cover not surjective");
    }
    ratlin::RatMatrix cinv = ratlin::rat_inverse(cartan_matrix(q));
    ratlin::RatVec kvec;
    for (const auto& x : kdim) kvec.emplace_back(x);
    ratlin::RatVec b_rat = mat_apply(cinv, kvec);
    IntVec g(static_cast<size_t>(n), Int(0));
    for (int v = 0; v < n; ++v) {
        if (!b_rat[v].is_integer() || b_rat[v].sgn_of() < 0)
            throw std::logic_error("g_vector: kernel is not a non-negative projective sum");
        g[v] = tops[v] - b_rat[v].num();
    }
    // sanity: Cartan * g = dim m
    if (mat_apply(cartan_matrix(q), g) != mdim)
        throw std::logic_error("g_vector: presentation does not resolve the module");
    return g;
}

int TauTiltingPair::column_of(const Summand& s) const
{
    for (size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == s) return static_cast<int>(i);
    return -1;
}

std::vector<TauTiltingPair> tau_tilting_pairs(const TorsionLattice& lat)
{
    const TypeAQuiver& q = lat.q;
    const int n = q.n();
    const size_t count = lat.ind.size();

    // cache tau per indecomposable
    std::vector<std::optional<ThinModule>> taus;
    for (const auto& m : lat.ind) taus.push_back(tau(q, m));

    std::vector<TauTiltingPair> out;
    for (ModSet t : lat.classes) {
        TauTiltingPair pair;
        for (size_t x = 0; x < count; ++x) {
            if (!((t >> x) & 1)) continue;
            bool ext_proj = true;
            if (taus[x]) {
                int tx = interval_index(q, *taus[x]);
                for (size_t j = 0; j < count && ext_proj; ++j)
                    if ((t >> j) & 1)
                        if (lat.hom(static_cast<int>(j), tx) != 0) ext_proj = false;
            }
            if (ext_proj) pair.m_part.push_back(lat.ind[x]);
        }
        for (int v = 1; v <= n; ++v) {
            int pv = interval_index(q, projective(q, v));
            bool orthogonal = true;
            for (size_t j = 0; j < count && orthogonal; ++j)
                if ((t >> j) & 1)
                    if (lat.hom(pv, static_cast<int>(j)) != 0) orthogonal = false;
            if (orthogonal) pair.p_vertices.push_back(v);
        }
        if (static_cast<int>(pair.m_part.size() + pair.p_vertices.size()) != n)
            throw std::logic_error("tau_tilting_pairs: |M| + |P| != n");

        // tau-rigidity of M and Hom(P, M) = 0 are structural; verify.
        for (const auto& a : pair.m_part)
            for (const auto& b : pair.m_part) {
                auto tb = taus[static_cast<size_t>(interval_index(q, b))];
                if (tb && hom_dim(q, a, *tb) != 0)
                    throw std::logic_error("tau_tilting_pairs: M not tau-rigid");
            }
        for (int v : pair.p_vertices)
            for (const auto& a : pair.m_part)
                if (hom_dim(q, projective(q, v), a) != 0)
                    throw std::logic_error("tau_tilting_pairs: Hom(P, M) != 0");

        pair.g = IntMatrix(n, n);
        int col = 0;
        for (const auto& m : pair.m_part) {
            IntVec gv = g_vector(q, m);
            for (int i = 0; i < n; ++i) pair.g.at(i, col) = gv[i];
            pair.columns.push_back(Summand{false, m, 0});
            ++col;
        }
        for (int v : pair.p_vertices) {
            IntVec gv = g_vector(q, projective(q, v));
            for (int i = 0; i < n; ++i) pair.g.at(i, col) = -gv[i];
            pair.columns.push_back(Summand{true, projective(q, v), v});
            ++col;
        }
        if (!ratlin::is_z_invertible(pair.g))
            throw std::logic_error("tau_tilting_pairs: g-matrix not invertible over Z");
        pair.c = ratlin::rat_inverse(pair.g.transpose()).to_int();
        for (int j = 0; j < n; ++j) {
            bool pos = false, neg = false;
            for (int i = 0; i < n; ++i) {
                int s = sgn(pair.c.at(i, j));
                if (s > 0) pos = true;
                if (s < 0) neg = true;
            }
            if (pos && neg)
                throw std::logic_error("tau_tilting_pairs: c-matrix column not sign-coherent");
        }
        out.push_back(std::move(pair));
    }
    return out;
}

ExchangePair exchange_of_edge(const TauTiltingPair& lower, const TauTiltingPair& upper)
{
    std::vector<Summand> out_only, in_only;
    for (const auto& s : lower.columns)
        if (upper.column_of(s) < 0) out_only.push_back(s);
    for (const auto& s : upper.columns)
        if (lower.column_of(s) < 0) in_only.push_back(s);
    if (out_only.size() != 1 || in_only.size() != 1)
        throw std::logic_error("exchange_of_edge: pairs do not differ in exactly one summand");
    return ExchangePair{out_only.front(), in_only.front()};
}

bool check_exchange_signs(const TorsionLattice& lat, const std::vector<TauTiltingPair>& pairs,
                   int from, int to)
{
    if (!lat.is_cover(from, to)) throw std::invalid_argument("check_exchange_signs: not a cover edge");
    IntVec dim_label = dim_vector(lat.q, lat.label(from, to));
    const TauTiltingPair& lower = pairs[static_cast<size_t>(from)];
    const TauTiltingPair& upper = pairs[static_cast<size_t>(to)];
    ExchangePair ex = exchange_of_edge(lower, upper);

    IntVec cx = lower.c.col(lower.column_of(ex.out_summand));
    IntVec cy = upper.c.col(upper.column_of(ex.in_summand));
    for (int i = 0; i < lat.q.n(); ++i) {
        if (cx[i] != -dim_label[i]) return false;
        if (cy[i] != dim_label[i]) return false;
        if (sgn(cx[i]) > 0) return false; // green direction: c(X) <= 0
        if (sgn(cy[i]) < 0) return false; // equivalently c(Y) >= 0
    }
    return true;
}

ChainWalk chain_to_walk(const TorsionLattice& lat, const std::vector<TauTiltingPair>& pairs,
                        const std::vector<int>& chain)
{
    if (chain.empty() || chain.front() != lat.bottom)
        throw std::invalid_argument("chain_to_walk: chain must start at 0");
    const int n = lat.q.n();

    const TauTiltingPair& bottom = pairs[static_cast<size_t>(lat.bottom)];
    std::vector<Summand> slots(static_cast<size_t>(n));
    if (!bottom.m_part.empty())
        throw std::logic_error("chain_to_walk: bottom pair has module summands");
    for (const auto& s : bottom.columns) slots[static_cast<size_t>(s.vertex - 1)] = s;

    auto slotted = [&](const TauTiltingPair& p) {
        IntMatrix m(n, n);
        for (int v = 0; v < n; ++v) {
            int col = p.column_of(slots[static_cast<size_t>(v)]);
            if (col < 0) throw std::logic_error("chain_to_walk: slot summand missing from pair");
            for (int i = 0; i < n; ++i) m.at(i, v) = p.c.at(i, col);
        }
        return m;
    };

    ChainWalk out;
    out.slotted_cmatrices.push_back(slotted(bottom));
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        if (!lat.is_cover(chain[i], chain[i + 1]))
            throw std::invalid_argument("chain_to_walk: not a cover chain");
        ExchangePair ex = exchange_of_edge(pairs[static_cast<size_t>(chain[i])],
                                           pairs[static_cast<size_t>(chain[i + 1])]);
        int slot = -1;
        for (int v = 0; v < n; ++v)
            if (slots[static_cast<size_t>(v)] == ex.out_summand) { slot = v; break; }
        if (slot < 0) throw std::logic_error("chain_to_walk: leaving summand not in any slot");
        slots[static_cast<size_t>(slot)] = ex.in_summand;
        out.steps.push_back(slot + 1);
        out.slotted_cmatrices.push_back(slotted(pairs[static_cast<size_t>(chain[i + 1])]));
    }
    return out;
}

} // namespace repkit
