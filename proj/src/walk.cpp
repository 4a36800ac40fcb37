#include "greenwalk/walk.hpp"

namespace cluster {

using ratlin::sgn;

IntMatrix mutate_exchange(const IntMatrix& b, int k)
{
    if (b.rows() != b.cols() || !b.is_skew_symmetric())
        throw std::invalid_argument("mutate_exchange: matrix must be skew-symmetric");
    if (k < 1 || k > b.rows()) throw std::out_of_range("mutate_exchange: vertex out of range");
    const int n = b.rows();
    const int kk = k - 1;
    IntMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == kk || j == kk) {
                out.at(i, j) = -b.at(i, j);
            } else {
                Int prod = b.at(i, kk) * b.at(kk, j);
                Int add = 0;
                if (prod > 0) add = (sgn(b.at(i, kk)) > 0) ? prod : -prod;
                out.at(i, j) = b.at(i, j) + add;
            }
        }
    return out;
}

CMatrixState initial_state(const Quiver& q)
{
    CMatrixState s{q.b_matrix(), IntMatrix::identity(q.n())};
    validate_state(s);
    return s;
}

bool column_sign_coherent(const IntMatrix& m, int j)
{
    bool has_pos = false, has_neg = false;
    for (int i = 0; i < m.rows(); ++i) {
        int s = sgn(m.at(i, j));
        if (s > 0) has_pos = true;
        if (s < 0) has_neg = true;
    }
    return !(has_pos && has_neg);
}

void validate_state(const CMatrixState& s)
{
    if (!s.b.is_skew_symmetric())
        throw std::logic_error("state invariant: B not skew-symmetric");
    if (!ratlin::is_z_invertible(s.c))
        throw std::logic_error("state invariant: C not invertible over Z");
    for (int j = 0; j < s.c.cols(); ++j)
        if (!column_sign_coherent(s.c, j))
            throw std::logic_error("state invariant: C-column " + std::to_string(j + 1)
                                   + " not sign-coherent");
}

CMatrixState mutate_state(const CMatrixState& s, int k)
{
    if (k < 1 || k > s.b.rows()) throw std::out_of_range("mutate_state: vertex out of range");
    const int n = s.b.rows();
    const int kk = k - 1;
    CMatrixState out;
    out.b = mutate_exchange(s.b, k);
    out.c = IntMatrix(n, n);
    // Mutation of the stacked matrix [B; C]: the C-block row i transforms
    // by c'_{ij} = -c_{ij} if j = k, else
    // c_{ij} + max(c_{ik},0) max(b_{kj},0) - max(-c_{ik},0) max(-b_{kj},0).
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == kk) {
                out.c.at(i, j) = -s.c.at(i, j);
            } else {
                const Int& cik = s.c.at(i, kk);
                const Int& bkj = s.b.at(kk, j);
                Int add = 0;
                if (sgn(cik) > 0 && sgn(bkj) > 0) add = cik * bkj;
                if (sgn(cik) < 0 && sgn(bkj) < 0) add = -(cik * bkj);
                out.c.at(i, j) = s.c.at(i, j) + add;
            }
        }
    validate_state(out);
    return out;
}

std::vector<int> green_vertices(const CMatrixState& s)
{
    std::vector<int> green;
    for (int j = 0; j < s.c.cols(); ++j) {
        bool nonzero = false, nonneg = true;
        for (int i = 0; i < s.c.rows(); ++i) {
            int sg = sgn(s.c.at(i, j));
            if (sg != 0) nonzero = true;
            if (sg < 0) nonneg = false;
        }
        if (nonzero && nonneg) green.push_back(j + 1);
    }
    return green;
}

GreenWalk run_walk(const Quiver& q, const std::vector<int>& seq)
{
    GreenWalk w{q, {}, {initial_state(q)}};
    for (size_t i = 0; i < seq.size(); ++i) {
        int k = seq[i];
        if (k < 1 || k > q.n()) throw std::out_of_range("run_walk: vertex out of range");
        auto greens = green_vertices(w.states.back());
        if (std::find(greens.begin(), greens.end(), k) == greens.end())
            throw NonGreenStepError(i, k);
        w.states.push_back(mutate_state(w.states.back(), k));
        w.steps.push_back(k);
    }
    return w;
}

BrickSeq bricks_of_walk(const GreenWalk& w)
{
    BrickSeq bricks{w.quiver.n(), {}};
    for (size_t i = 0; i < w.steps.size(); ++i) {
        IntVec col = w.states[i].c.col(w.steps[i] - 1);
        for (const auto& x : col)
            if (sgn(x) < 0)
                throw std::logic_error("bricks_of_walk: green column with negative entry");
        bricks.dims.push_back(std::move(col));
    }
    return bricks;
}

namespace {

void enumerate_dfs(const Quiver& q, const CMatrixState state, std::vector<int>& prefix,
                   std::vector<CMatrixState>& state_stack, size_t max_len, size_t limit,
                   MgsEnumeration& out)
{
    if (out.truncated) return;
    auto greens = green_vertices(state);
    if (greens.empty()) {
        if (!state.c.is_negated_permutation())
            throw std::logic_error("enumerate_mgs: final C-matrix is not minus a permutation");
        if (out.walks.size() == limit) {
            out.truncated = true;
            return;
        }
        out.walks.push_back(GreenWalk{q, prefix, state_stack});
        return;
    }
    if (prefix.size() >= max_len) {
        out.budget_hits.push_back(prefix);
        return;
    }
    for (int k : greens) {
        prefix.push_back(k);
        state_stack.push_back(mutate_state(state, k));
        enumerate_dfs(q, state_stack.back(), prefix, state_stack, max_len, limit, out);
        state_stack.pop_back();
        prefix.pop_back();
        if (out.truncated) return;
    }
}

} // namespace

MgsEnumeration enumerate_mgs(const Quiver& q, size_t max_len, size_t limit)
{
    if (!q.acyclic())
        throw InvalidQuiverError("enumerate_mgs requires an acyclic quiver");
    MgsEnumeration out;
    std::vector<int> prefix;
    std::vector<CMatrixState> stack{initial_state(q)};
    enumerate_dfs(q, stack.back(), prefix, stack, max_len, limit, out);
    return out;
}

} // namespace cluster
