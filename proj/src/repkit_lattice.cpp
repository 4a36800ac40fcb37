#include "greenwalk/repkit_lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>

namespace repkit {

int configured_max_n()
{
    const char* env = std::getenv("GREENWALK_MAX_N");
    if (!env) return 5;
    try {
        int n = std::stoi(env);
        return n >= 1 ? n : 5;
    } catch (...) {
        return 5;
    }
}

ModSet left_perp(const HomTable& hom, size_t count, ModSet of)
{
    ModSet out = 0;
    for (size_t x = 0; x < count; ++x) {
        bool ok = true;
        for (size_t j = 0; j < count && ok; ++j)
            if ((of >> j) & 1)
                if (hom(static_cast<int>(x), static_cast<int>(j)) != 0) ok = false;
        if (ok) out |= ModSet(1) << x;
    }
    return out;
}

ModSet right_perp(const HomTable& hom, size_t count, ModSet of)
{
    ModSet out = 0;
    for (size_t x = 0; x < count; ++x) {
        bool ok = true;
        for (size_t j = 0; j < count && ok; ++j)
            if ((of >> j) & 1)
                if (hom(static_cast<int>(j), static_cast<int>(x)) != 0) ok = false;
        if (ok) out |= ModSet(1) << x;
    }
    return out;
}

int TorsionLattice::class_index(ModSet mask) const
{
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i] == mask) return static_cast<int>(i);
    return -1;
}

bool TorsionLattice::is_cover(int from, int to) const
{
    return labels.contains({from, to});
}

ThinModule TorsionLattice::label(int from, int to) const
{
    auto it = labels.find({from, to});
    if (it == labels.end()) throw std::invalid_argument("label: not a cover edge");
    return ind[static_cast<size_t>(it->second)];
}

bool is_torsion_fixed_point(const TorsionLattice& lat, ModSet t)
{
    size_t count = lat.ind.size();
    return left_perp(lat.hom, count, right_perp(lat.hom, count, t)) == t;
}

bool is_factor_closed(const TorsionLattice& lat, ModSet t)
{
    for (size_t x = 0; x < lat.ind.size(); ++x) {
        if (!((t >> x) & 1)) continue;
        const ThinModule& m = lat.ind[x];
        for (VertexMask u : submodule_masks(lat.q, m)) {
            VertexMask quot = support_mask(m) & ~u;
            for (const ThinModule& c : components(quot))
                if (!((t >> interval_index(lat.q, c)) & 1)) return false;
        }
    }
    return true;
}

namespace {

// Minimal extending brick for the cover t < t2: the unique X in t2 \ t
// whose proper factors all lie in t and with Hom(t, X) = 0.
int find_edge_label(const TorsionLattice& lat, ModSet t, ModSet t2,
                    const std::vector<ModSet>& proper_factor_sets)
{
    int found = -1;
    ModSet fresh = t2 & ~t;
    for (size_t x = 0; x < lat.ind.size(); ++x) {
        if (!((fresh >> x) & 1)) continue;
        if (lat.hom(static_cast<int>(x), static_cast<int>(x)) != 1) continue; // brick
        if ((proper_factor_sets[x] & ~t) != 0) continue; // some proper factor escapes t
        bool hom_free = true;
        for (size_t j = 0; j < lat.ind.size() && hom_free; ++j)
            if ((t >> j) & 1)
                if (lat.hom(static_cast<int>(j), static_cast<int>(x)) != 0) hom_free = false;
        if (!hom_free) continue;
        if (found >= 0)
            throw std::logic_error("torsion_lattice: cover edge has two extending bricks");
        found = static_cast<int>(x);
    }
    if (found < 0) throw std::logic_error("torsion_lattice: cover edge has no extending brick");
    return found;
}

} // namespace

TorsionLattice torsion_lattice(const TypeAQuiver& q, int bound)
{
    if (q.n() > bound)
        throw BoundExceededError("oracle bound exceeded: n = " + std::to_string(q.n())
                                 + " > " + std::to_string(bound));
    if (q.n() > 8)
        throw BoundExceededError("oracle supports n <= 8");

    TorsionLattice lat{q, indecomposables(q), build_hom_table(q), {}, {}, {}, {}, -1, -1};
    const size_t count = lat.ind.size();
    const ModSet full = (count == 64) ? ~ModSet(0) : ((ModSet(1) << count) - 1);

    // Torsion classes = intersection closure of the single-module
    // left-perpendiculars together with the whole category.
    std::vector<ModSet> singles(count);
    for (size_t j = 0; j < count; ++j) singles[j] = left_perp(lat.hom, count, ModSet(1) << j);

    std::set<ModSet> closure;
    closure.insert(full);
    for (ModSet s : singles) closure.insert(s);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<ModSet> snapshot(closure.begin(), closure.end());
        for (ModSet a : snapshot)
            for (ModSet s : singles)
                if (closure.insert(a & s).second) grew = true;
    }

    lat.classes.assign(closure.begin(), closure.end());
    std::sort(lat.classes.begin(), lat.classes.end(), [](ModSet a, ModSet b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    for (ModSet t : lat.classes) {
        if (!is_torsion_fixed_point(lat, t))
            throw std::logic_error("torsion_lattice: class is not a perp fixed point");
        if (!is_factor_closed(lat, t))
            throw std::logic_error("torsion_lattice: class is not factor-closed");
    }
    if (lat.classes.front() != 0 || lat.classes.back() != full)
        throw std::logic_error("torsion_lattice: missing bottom or top");
    lat.bottom = 0;
    lat.top = static_cast<int>(lat.classes.size()) - 1;

    // Proper-factor sets, shared by all edge-label scans.
    std::vector<ModSet> proper_factors(count, 0);
    for (size_t x = 0; x < count; ++x) {
        const ThinModule& m = lat.ind[x];
        for (VertexMask u : submodule_masks(lat.q, m)) {
            if (u == 0) continue; // the improper factor m itself
            VertexMask quot = support_mask(m) & ~u;
            for (const ThinModule& c : components(quot))
                proper_factors[x] |= ModSet(1) << interval_index(lat.q, c);
        }
    }

    const int cn = static_cast<int>(lat.classes.size());
    lat.covers_up.assign(lat.classes.size(), {});
    lat.covers_down.assign(lat.classes.size(), {});
    for (int i = 0; i < cn; ++i)
        for (int j = 0; j < cn; ++j) {
            if (i == j) continue;
            ModSet a = lat.classes[static_cast<size_t>(i)], b = lat.classes[static_cast<size_t>(j)];
            if ((a & b) != a || a == b) continue; // need a strictly inside b
            bool covered = true;
            for (int k = 0; k < cn && covered; ++k) {
                if (k == i || k == j) continue;
                ModSet c = lat.classes[static_cast<size_t>(k)];
                if ((a & c) == a && (c & b) == c && a != c && c != b) covered = false;
            }
            if (!covered) continue;
            lat.covers_up[static_cast<size_t>(i)].push_back(j);
            lat.covers_down[static_cast<size_t>(j)].push_back(i);
            lat.labels[{i, j}] = find_edge_label(lat, a, b, proper_factors);
        }

    // Closure under intersection makes the poset a lattice; verify.
    for (int i = 0; i < cn; ++i)
        for (int j = i + 1; j < cn; ++j) {
            ModSet meet = lat.classes[static_cast<size_t>(i)] & lat.classes[static_cast<size_t>(j)];
            if (lat.class_index(meet) < 0)
                throw std::logic_error("torsion_lattice: classes not meet-closed");
        }
    return lat;
}

std::vector<std::vector<int>> maximal_chains(const TorsionLattice& lat)
{
    std::vector<std::vector<int>> out;
    std::vector<int> chain{lat.bottom};
    auto dfs = [&](auto&& self, int at) -> void {
        if (at == lat.top) {
            out.push_back(chain);
            return;
        }
        for (int next : lat.covers_up[static_cast<size_t>(at)]) {
            chain.push_back(next);
            self(self, next);
            chain.pop_back();
        }
    };
    dfs(dfs, lat.bottom);
    return out;
}

std::vector<ThinModule> cfho_from_chain(const TorsionLattice& lat, const std::vector<int>& chain)
{
    if (chain.empty() || chain.front() != lat.bottom || chain.back() != lat.top)
        throw NotMaximalChainError("chain must run from 0 to the whole category");
    std::vector<ThinModule> mods;
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        if (!lat.is_cover(chain[i], chain[i + 1]))
            throw NotMaximalChainError("chain step " + std::to_string(i) + " is not a cover");
        mods.push_back(lat.label(chain[i], chain[i + 1]));
    }
    return mods;
}

std::vector<int> mgs_from_cfho(const TorsionLattice& lat, const std::vector<ThinModule>& mods)
{
    CfhoReport report = verify_cfho(lat, mods);
    if (!report.ok())
        throw NotCfhoError("input is not a complete forward hom-orthogonal sequence: "
                           + report.detail);
    const size_t count = lat.ind.size();
    std::vector<int> chain;
    for (size_t i = 0; i <= mods.size(); ++i) {
        ModSet tail = 0;
        for (size_t j = i; j < mods.size(); ++j)
            tail |= ModSet(1) << interval_index(lat.q, mods[j]);
        int idx = lat.class_index(left_perp(lat.hom, count, tail));
        if (idx < 0) throw std::logic_error("mgs_from_cfho: perp is not a torsion class");
        chain.push_back(idx);
    }
    if (chain.front() != lat.bottom || chain.back() != lat.top)
        throw std::logic_error("mgs_from_cfho: chain endpoints wrong");
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        if (!lat.is_cover(chain[i], chain[i + 1]))
            throw std::logic_error("mgs_from_cfho: chain step is not a cover");
    return chain;
}

CfhoReport verify_cfho(const TorsionLattice& lat, const std::vector<ThinModule>& mods)
{
    CfhoReport r;
    const size_t count = lat.ind.size();
    const ModSet full = (count == 64) ? ~ModSet(0) : ((ModSet(1) << count) - 1);
    const size_t m = mods.size();

    std::vector<int> idx;
    for (const auto& mod : mods) idx.push_back(interval_index(lat.q, mod));

    r.bricks_ok = true;
    for (size_t i = 0; i < m && r.bricks_ok; ++i)
        if (lat.hom(idx[i], idx[i]) != 1) {
            r.bricks_ok = false;
            r.detail = "entry " + std::to_string(i) + " is not a brick";
        }

    r.forward_ok = true;
    for (size_t i = 0; i < m && r.forward_ok; ++i)
        for (size_t j = i + 1; j < m && r.forward_ok; ++j)
            if (lat.hom(idx[i], idx[j]) != 0) {
                r.forward_ok = false;
                r.detail = "Hom(N_" + std::to_string(i + 1) + ", N_" + std::to_string(j + 1)
                           + ") != 0";
            }

    // Maximality, by attempting to insert every brick at every position.
    r.maximal_ok = true;
    for (size_t b = 0; b < count && r.maximal_ok; ++b) {
        if (lat.hom(static_cast<int>(b), static_cast<int>(b)) != 1) continue;
        for (size_t pos = 0; pos <= m && r.maximal_ok; ++pos) {
            bool fits = true;
            for (size_t i = 0; i < pos && fits; ++i)
                if (lat.hom(idx[i], static_cast<int>(b)) != 0) fits = false;
            for (size_t j = pos; j < m && fits; ++j)
                if (lat.hom(static_cast<int>(b), idx[j]) != 0) fits = false;
            if (fits) {
                r.maximal_ok = false;
                r.detail = "brick " + lat.ind[b].str() + " inserts at position "
                           + std::to_string(pos);
            }
        }
    }

    ModSet all_mods = 0;
    for (int i : idx) all_mods |= ModSet(1) << i;
    ModSet g = left_perp(lat.hom, count, right_perp(lat.hom, count, all_mods));

    r.generates_ok = (g == full);
    if (!r.generates_ok && r.detail.empty()) r.detail = "G(N) is not the whole category";

    r.intermediate_ok = true;
    for (size_t k = 0; k <= m && r.intermediate_ok; ++k) {
        ModSet head = 0, tail = 0;
        for (size_t i = 0; i < k; ++i) head |= ModSet(1) << idx[i];
        for (size_t j = k; j < m; ++j) tail |= ModSet(1) << idx[j];
        ModSet meet = g & right_perp(lat.hom, count, head) & left_perp(lat.hom, count, tail);
        if (meet != 0) {
            r.intermediate_ok = false;
            if (r.detail.empty())
                r.detail = "intermediate perp at k = " + std::to_string(k) + " is nonzero";
        }
    }
    return r;
}

} // namespace repkit
