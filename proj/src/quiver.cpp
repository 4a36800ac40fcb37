#include "greenwalk/quiver.hpp"

#include <algorithm>

namespace cluster {

Quiver::Quiver(int n, std::vector<std::pair<int, int>> arrows)
    : n_(n), arrows_(std::move(arrows))
{
    if (n < 1) throw InvalidQuiverError("quiver needs at least one vertex");
    for (auto [i, j] : arrows_) {
        if (i < 1 || i > n_ || j < 1 || j > n_)
            throw InvalidQuiverError("arrow endpoint out of range");
        if (i == j) throw InvalidQuiverError("loops are not allowed");
    }
    for (auto [i, j] : arrows_)
        for (auto [u, v] : arrows_)
            if (i == v && j == u) throw InvalidQuiverError("2-cycles are not allowed");
    std::sort(arrows_.begin(), arrows_.end());

    // Kahn's algorithm for the acyclicity flag.
    std::vector<int> indeg(n_ + 1, 0);
    for (auto [i, j] : arrows_) ++indeg[j];
    std::vector<int> queue;
    for (int v = 1; v <= n_; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (auto [i, j] : arrows_)
            if (i == v && --indeg[j] == 0) queue.push_back(j);
    }
    acyclic_ = (seen == n_);
}

int Quiver::arrow_count(int from, int to) const
{
    int c = 0;
    for (auto [i, j] : arrows_)
        if (i == from && j == to) ++c;
    return c;
}

IntMatrix Quiver::b_matrix() const
{
    IntMatrix b(n_, n_);
    for (auto [i, j] : arrows_) {
        b.at(i - 1, j - 1) += 1;
        b.at(j - 1, i - 1) -= 1;
    }
    return b;
}

Quiver Quiver::from_b_matrix(const IntMatrix& b)
{
    if (!b.is_skew_symmetric())
        throw InvalidQuiverError("exchange matrix must be skew-symmetric");
    std::vector<std::pair<int, int>> arrows;
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            for (Int c = b.at(i, j); c > 0; --c) arrows.emplace_back(i + 1, j + 1);
    return Quiver(b.rows(), std::move(arrows));
}

Quiver mutate_quiver(const Quiver& q, int k)
{
    IntMatrix b = q.b_matrix();
    // inlined to avoid a header cycle with walk.hpp
    if (k < 1 || k > b.rows()) throw std::out_of_range("mutate_quiver: vertex out of range");
    const int n = b.rows();
    const int kk = k - 1;
    IntMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == kk || j == kk) {
                out.at(i, j) = -b.at(i, j);
            } else {
                Int add = 0;
                Int prod = b.at(i, kk) * b.at(kk, j);
                if (prod > 0) add = (sgn(b.at(i, kk)) > 0) ? prod : -prod;
                out.at(i, j) = b.at(i, j) + add;
            }
        }
    return Quiver::from_b_matrix(out);
}

} // namespace cluster
