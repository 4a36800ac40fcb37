#include "greenwalk/repkit_base.hpp"

#include <bit>
#include <sstream>

namespace repkit {

TypeAQuiver::TypeAQuiver(int n, std::vector<int> dir) : n_(n), dir_(std::move(dir))
{
    if (n < 1) throw std::invalid_argument("TypeAQuiver: n must be >= 1");
    if (static_cast<int>(dir_.size()) != n - 1)
        throw std::invalid_argument("TypeAQuiver: need n-1 edge directions");
    for (int d : dir_)
        if (d != 1 && d != -1) throw std::invalid_argument("TypeAQuiver: direction must be +-1");
}

cluster::Quiver TypeAQuiver::as_quiver() const
{
    std::vector<std::pair<int, int>> arrows;
    for (int v = 1; v < n_; ++v)
        arrows.emplace_back(edge_dir(v) > 0 ? v : v + 1, edge_dir(v) > 0 ? v + 1 : v);
    return cluster::Quiver(n_, std::move(arrows));
}

TypeAQuiver TypeAQuiver::parse(const std::string& spec)
{
    if (!spec.empty() && (spec[0] == 'a' || spec[0] == 'A')) {
        int n = 0;
        try {
            size_t used = 0;
            n = std::stoi(spec.substr(1), &used);
            if (used + 1 != spec.size()) n = 0;
        } catch (...) {
            n = 0;
        }
        if (n >= 1) return TypeAQuiver(n, std::vector<int>(static_cast<size_t>(n) - 1, 1));
        throw std::invalid_argument("TypeAQuiver: cannot parse '" + spec + "'");
    }

    std::vector<std::optional<int>> dir_by_edge;
    int max_vertex = 0;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = item.find_first_of("<>");
        if (pos == std::string::npos || pos == 0 || pos + 1 >= item.size())
            throw std::invalid_argument("TypeAQuiver: bad edge '" + item + "'");
        int u, v;
        try {
            u = std::stoi(item.substr(0, pos));
            v = std::stoi(item.substr(pos + 1));
        } catch (...) {
            throw std::invalid_argument("TypeAQuiver: bad edge '" + item + "'");
        }
        // normalise to (smaller, larger) with a direction sign
        int from = (item[pos] == '>') ? u : v;
        int lo = std::min(u, v), hi = std::max(u, v);
        if (hi != lo + 1 || lo < 1)
            throw std::invalid_argument("TypeAQuiver: edge '" + item + "' is not a path edge");
        max_vertex = std::max(max_vertex, hi);
        if (static_cast<int>(dir_by_edge.size()) < hi - 1) dir_by_edge.resize(hi - 1);
        if (dir_by_edge[lo - 1].has_value())
            throw std::invalid_argument("TypeAQuiver: duplicate edge '" + item + "'");
        dir_by_edge[lo - 1] = (from == lo) ? 1 : -1;
    }
    if (max_vertex == 0) throw std::invalid_argument("TypeAQuiver: empty spec");
    std::vector<int> dir;
    for (int e = 0; e < max_vertex - 1; ++e) {
        if (!dir_by_edge[e].has_value())
            throw std::invalid_argument("TypeAQuiver: missing edge between "
                                        + std::to_string(e + 1) + " and " + std::to_string(e + 2));
        dir.push_back(*dir_by_edge[e]);
    }
    return TypeAQuiver(max_vertex, std::move(dir));
}

std::optional<TypeAQuiver> TypeAQuiver::from_quiver(const cluster::Quiver& q)
{
    std::vector<int> dir(static_cast<size_t>(q.n()) - 1, 0);
    for (auto [i, j] : q.arrows()) {
        int lo = std::min(i, j);
        if (std::max(i, j) != lo + 1) return std::nullopt;
        if (dir[lo - 1] != 0) return std::nullopt; // double edge
        dir[lo - 1] = (i == lo) ? 1 : -1;
    }
    for (int d : dir)
        if (d == 0) return std::nullopt; // disconnected
    return TypeAQuiver(q.n(), std::move(dir));
}

std::string TypeAQuiver::str() const
{
    std::string s;
    for (int v = 1; v < n_; ++v) {
        if (!s.empty()) s += ',';
        s += std::to_string(v) + (edge_dir(v) > 0 ? ">" : "<") + std::to_string(v + 1);
    }
    if (n_ == 1) s = "a1";
    return s;
}

std::vector<ThinModule> indecomposables(const TypeAQuiver& q)
{
    std::vector<ThinModule> out;
    for (int lo = 1; lo <= q.n(); ++lo)
        for (int hi = lo; hi <= q.n(); ++hi) out.push_back(ThinModule{lo, hi});
    return out;
}

int interval_index(const TypeAQuiver& q, const ThinModule& m)
{
    if (m.lo < 1 || m.lo > m.hi || m.hi > q.n())
        throw std::invalid_argument("interval_index: interval out of range");
    // intervals with smaller lo come first; for fixed lo there are n-lo+1
    int idx = 0;
    for (int lo = 1; lo < m.lo; ++lo) idx += q.n() - lo + 1;
    return idx + (m.hi - m.lo);
}

IntVec dim_vector(const TypeAQuiver& q, const ThinModule& m)
{
    IntVec d(static_cast<size_t>(q.n()), Int(0));
    for (int v = m.lo; v <= m.hi; ++v) d[v - 1] = 1;
    return d;
}

VertexMask support_mask(const ThinModule& m)
{
    VertexMask mask = 0;
    for (int v = m.lo; v <= m.hi; ++v) mask |= VertexMask(1) << (v - 1);
    return mask;
}

std::optional<ThinModule> interval_of_dim(const TypeAQuiver& q, const IntVec& d)
{
    if (static_cast<int>(d.size()) != q.n()) return std::nullopt;
    int lo = 0, hi = 0;
    for (int v = 1; v <= q.n(); ++v) {
        if (d[v - 1] == 0) continue;
        if (d[v - 1] != 1) return std::nullopt;
        if (lo == 0) lo = v;
        else if (v != hi + 1) return std::nullopt;
        hi = v;
    }
    if (lo == 0) return std::nullopt;
    return ThinModule{lo, hi};
}

std::vector<ThinModule> components(VertexMask mask)
{
    std::vector<ThinModule> out;
    int v = 1;
    while (mask >> (v - 1)) {
        if (mask & (VertexMask(1) << (v - 1))) {
            int lo = v;
            while (mask & (VertexMask(1) << v)) ++v;
            out.push_back(ThinModule{lo, v});
        }
        ++v;
    }
    return out;
}

std::vector<VertexMask> flow_closed_subsets(const TypeAQuiver& q, VertexMask within)
{
    std::vector<int> verts;
    for (int v = 1; v <= q.n(); ++v)
        if (within & (VertexMask(1) << (v - 1))) verts.push_back(v);
    std::vector<VertexMask> out;
    const size_t count = size_t(1) << verts.size();
    for (size_t bits = 0; bits < count; ++bits) {
        VertexMask s = 0;
        for (size_t t = 0; t < verts.size(); ++t)
            if (bits & (size_t(1) << t)) s |= VertexMask(1) << (verts[t] - 1);
        bool closed = true;
        for (int v = 1; v < q.n() && closed; ++v) {
            VertexMask left = VertexMask(1) << (v - 1), right = VertexMask(1) << v;
            if ((within & left) && (within & right)) {
                VertexMask src = q.edge_dir(v) > 0 ? left : right;
                VertexMask dst = q.edge_dir(v) > 0 ? right : left;
                if ((s & src) && !(s & dst)) closed = false;
            }
        }
        if (closed) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexMask> submodule_masks(const TypeAQuiver& q, const ThinModule& m)
{
    return flow_closed_subsets(q, support_mask(m));
}

int hom_dim(const TypeAQuiver& q, const ThinModule& m, const ThinModule& w)
{
    // Variables: one scalar per vertex in supp(m) & supp(w).  Each edge
    // u -> v contributes the intertwiner equation  [u,v in m] f_v =
    // [u,v in w] f_u, where f at a vertex outside the common support is 0.
    VertexMask common = support_mask(m) & support_mask(w);
    std::vector<int> var_of(static_cast<size_t>(q.n()) + 1, -1);
    int nvars = 0;
    for (int v = 1; v <= q.n(); ++v)
        if (common & (VertexMask(1) << (v - 1))) var_of[v] = nvars++;
    if (nvars == 0) return 0;

    std::vector<std::vector<int>> eqs;
    for (int e = 1; e < q.n(); ++e) {
        int src = q.edge_dir(e) > 0 ? e : e + 1;
        int dst = q.edge_dir(e) > 0 ? e + 1 : e;
        bool m_arrow = src >= m.lo && src <= m.hi && dst >= m.lo && dst <= m.hi;
        bool w_arrow = src >= w.lo && src <= w.hi && dst >= w.lo && dst <= w.hi;
        std::vector<int> row(static_cast<size_t>(nvars), 0);
        bool nontrivial = false;
        if (m_arrow && var_of[dst] >= 0) {
            row[var_of[dst]] += 1;
            nontrivial = true;
        }
        if (w_arrow && var_of[src] >= 0) {
            row[var_of[src]] -= 1;
            nontrivial = true;
        }
        if (nontrivial) eqs.push_back(std::move(row));
    }

    // kernel dimension = nvars - rank, by integer Gaussian elimination
    int rank = 0;
    for (int col = 0; col < nvars && rank < static_cast<int>(eqs.size()); ++col) {
        int pivot = -1;
        for (size_t i = rank; i < eqs.size(); ++i)
            if (eqs[i][col] != 0) { pivot = static_cast<int>(i); break; }
        if (pivot < 0) continue;
        std::swap(eqs[rank], eqs[pivot]);
        for (size_t i = 0; i < eqs.size(); ++i) {
            if (static_cast<int>(i) == rank || eqs[i][col] == 0) continue;
            int a = eqs[rank][col], b = eqs[i][col];
            for (int j = 0; j < nvars; ++j) eqs[i][j] = eqs[i][j] * a - eqs[rank][j] * b;
        }
        ++rank;
    }
    int dim = nvars - rank;
    if (dim < 0 || dim > 1) throw std::logic_error("hom_dim: thin modules must have dim <= 1");
    return dim;
}

HomTable build_hom_table(const TypeAQuiver& q)
{
    auto inds = indecomposables(q);
    HomTable t;
    t.dim.assign(inds.size(), std::vector<int>(inds.size(), 0));
    for (size_t i = 0; i < inds.size(); ++i)
        for (size_t j = 0; j < inds.size(); ++j) t.dim[i][j] = hom_dim(q, inds[i], inds[j]);
    return t;
}

ThinModule projective(const TypeAQuiver& q, int vertex)
{
    if (vertex < 1 || vertex > q.n()) throw std::out_of_range("projective: vertex out of range");
    int lo = vertex, hi = vertex;
    while (hi < q.n() && q.edge_dir(hi) > 0) ++hi;      // arrows hi -> hi+1
    while (lo > 1 && q.edge_dir(lo - 1) < 0) --lo;      // arrows lo -> lo-1
    return ThinModule{lo, hi};
}

ThinModule injective(const TypeAQuiver& q, int vertex)
{
    if (vertex < 1 || vertex > q.n()) throw std::out_of_range("injective: vertex out of range");
    int lo = vertex, hi = vertex;
    while (hi < q.n() && q.edge_dir(hi) < 0) ++hi;      // arrows hi+1 -> hi
    while (lo > 1 && q.edge_dir(lo - 1) > 0) --lo;      // arrows lo-1 -> lo
    return ThinModule{lo, hi};
}

bool is_projective(const TypeAQuiver& q, const ThinModule& m)
{
    for (int v = m.lo; v <= m.hi; ++v)
        if (projective(q, v) == m) return true;
    return false;
}

IntMatrix cartan_matrix(const TypeAQuiver& q)
{
    IntMatrix c(q.n(), q.n());
    for (int j = 1; j <= q.n(); ++j) {
        ThinModule p = projective(q, j);
        for (int v = p.lo; v <= p.hi; ++v) c.at(v - 1, j - 1) = 1;
    }
    return c;
}

IntMatrix euler_matrix(const TypeAQuiver& q)
{
    IntMatrix e = IntMatrix::identity(q.n());
    for (int v = 1; v < q.n(); ++v) {
        int src = q.edge_dir(v) > 0 ? v : v + 1;
        int dst = q.edge_dir(v) > 0 ? v + 1 : v;
        e.at(src - 1, dst - 1) -= 1;
    }
    return e;
}

IntMatrix coxeter_matrix(const TypeAQuiver& q)
{
    IntMatrix e = euler_matrix(q);
    ratlin::RatMatrix inv = ratlin::rat_inverse(e);
    ratlin::RatMatrix prod(q.n(), q.n());
    IntMatrix et = e.transpose();
    for (int i = 0; i < q.n(); ++i)
        for (int j = 0; j < q.n(); ++j) {
            ratlin::Rational s;
            for (int k = 0; k < q.n(); ++k)
                s += inv.at(i, k) * ratlin::Rational(et.at(k, j));
            prod.at(i, j) = -s;
        }
    return prod.to_int();
}

} // namespace repkit
