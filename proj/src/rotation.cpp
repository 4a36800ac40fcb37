#include "greenwalk/rotation.hpp"

namespace cluster {

using ratlin::Rational;
using ratlin::RatVec;
using ratlin::sgn;

IntMatrix rotation_matrix(const Quiver& q, int k, RotationVariant variant)
{
    if (k < 1 || k > q.n()) throw std::out_of_range("rotation_matrix: vertex out of range");
    IntMatrix m = IntMatrix::identity(q.n());
    for (int j = 1; j <= q.n(); ++j)
        m.at(k - 1, j - 1) = (j == k) ? Int((variant == RotationVariant::Reflection) ? -1 : 0)
                                      : Int(q.arrow_count(k, j));
    return m;
}

BrickSeq rotate_cfho(const BrickSeq& bricks, int k, const Quiver& q, RotationVariant variant)
{
    if (k < 1 || k > q.n()) throw std::out_of_range("rotate_cfho: vertex out of range");
    if (bricks.n != q.n()) throw std::invalid_argument("rotate_cfho: rank mismatch");
    if (bricks.dims.empty()) throw std::invalid_argument("rotate_cfho: empty brick sequence");

    IntVec unit(q.n(), Int(0));
    unit[k - 1] = 1;
    if (bricks.dims.front() != unit) throw FirstBrickNotSimpleAtK(k);

    const IntMatrix m = rotation_matrix(q, k, variant);
    BrickSeq out{bricks.n, {}};
    for (size_t i = 1; i < bricks.dims.size(); ++i) {
        IntVec image = mat_apply(m, bricks.dims[i]);
        bool nonzero = false;
        for (const auto& x : image) {
            if (sgn(x) < 0) throw NonPositiveImage(i);
            if (sgn(x) > 0) nonzero = true;
        }
        if (!nonzero) throw NonPositiveImage(i);
        out.dims.push_back(std::move(image));
    }
    out.dims.push_back(unit);
    return out;
}

charge::CentralCharge rotate_charge(const RatVec& alpha, const RatVec& beta, int k,
                                    const Quiver& q, RotationVariant variant)
{
    if (k < 1 || k > q.n()) throw std::out_of_range("rotate_charge: vertex out of range");
    if (static_cast<int>(alpha.size()) != q.n() || static_cast<int>(beta.size()) != q.n())
        throw std::invalid_argument("rotate_charge: rank mismatch");

    const IntMatrix m = rotation_matrix(q, k, variant);
    RatVec pre = mat_apply(m, beta);
    for (const auto& x : pre)
        if (x.sgn_of() <= 0)
            throw RotatedBetaNotPositive("B_k beta is not strictly positive (hypothesis fails)");

    const IntMatrix mt = m.transpose();
    RatVec new_alpha = mat_apply(mt, alpha);
    RatVec new_beta = mat_apply(mt, beta);
    for (const auto& x : new_beta)
        if (x.sgn_of() <= 0)
            throw RotatedBetaNotPositive("transported beta is not strictly positive");
    return charge::CentralCharge(std::move(new_alpha), std::move(new_beta));
}

} // namespace cluster
