#include "greenwalk/matrix.hpp"

namespace ratlin {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long x : r) a_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntVec IntMatrix::row(int i) const
{
    IntVec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

IntVec IntMatrix::col(int j) const
{
    IntVec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator-() const
{
    IntMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = -at(i, j);
    return m;
}

bool IntMatrix::is_negated_permutation() const
{
    if (rows_ != cols_) return false;
    std::vector<bool> col_hit(cols_, false);
    for (int i = 0; i < rows_; ++i) {
        int nonzero = -1;
        for (int j = 0; j < cols_; ++j) {
            if (sgn(at(i, j)) == 0) continue;
            if (nonzero >= 0 || at(i, j) != -1) return false;
            nonzero = j;
        }
        if (nonzero < 0 || col_hit[nonzero]) return false;
        col_hit[nonzero] = true;
    }
    return true;
}

bool IntMatrix::is_skew_symmetric() const
{
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j <= i; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols())
{
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) at(i, j) = Rational(m.at(i, j));
}

bool RatMatrix::is_integral() const
{
    for (const auto& x : a_)
        if (!x.is_integer()) return false;
    return true;
}

IntMatrix RatMatrix::to_int() const
{
    IntMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (!at(i, j).is_integer())
                throw std::domain_error("RatMatrix::to_int: non-integral entry");
            m.at(i, j) = at(i, j).num();
        }
    return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (sgn(a.at(i, k)) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

IntVec mat_apply(const IntMatrix& a, const IntVec& v)
{
    if (a.cols() != static_cast<int>(v.size()))
        throw std::invalid_argument("mat_apply: dimension mismatch");
    IntVec r(a.rows(), Int(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r[i] += a.at(i, j) * v[j];
    return r;
}

RatVec mat_apply(const IntMatrix& a, const RatVec& v)
{
    if (a.cols() != static_cast<int>(v.size()))
        throw std::invalid_argument("mat_apply: dimension mismatch");
    RatVec r(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r[i] += Rational(a.at(i, j)) * v[j];
    return r;
}

RatVec mat_apply(const RatMatrix& a, const RatVec& v)
{
    if (a.cols() != static_cast<int>(v.size()))
        throw std::invalid_argument("mat_apply: dimension mismatch");
    RatVec r(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r[i] += a.at(i, j) * v[j];
    return r;
}

Rational det(const RatMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    int n = m.rows();
    RatMatrix w = m;
    Rational d(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!w.at(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(w.at(pivot, j), w.at(col, j));
            d = -d;
        }
        d *= w.at(col, col);
        Rational inv = Rational(1) / w.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (w.at(i, col).is_zero()) continue;
            Rational f = w.at(i, col) * inv;
            for (int j = col; j < n; ++j) w.at(i, j) -= f * w.at(col, j);
        }
    }
    return d;
}

Rational det(const IntMatrix& m) { return det(RatMatrix(m)); }

RatMatrix rat_inverse(const RatMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("rat_inverse: matrix not square");
    int n = m.rows();
    RatMatrix w = m;
    RatMatrix inv(n, n);
    for (int i = 0; i < n; ++i) inv.at(i, i) = Rational(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!w.at(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) throw SingularMatrixError();
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(pivot, j), w.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rational f = Rational(1) / w.at(col, col);
        for (int j = 0; j < n; ++j) {
            w.at(col, j) *= f;
            inv.at(col, j) *= f;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || w.at(i, col).is_zero()) continue;
            Rational g = w.at(i, col);
            for (int j = 0; j < n; ++j) {
                w.at(i, j) -= g * w.at(col, j);
                inv.at(i, j) -= g * inv.at(col, j);
            }
        }
    }
    return inv;
}

RatMatrix rat_inverse(const IntMatrix& m) { return rat_inverse(RatMatrix(m)); }

bool is_z_invertible(const IntMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("is_z_invertible: matrix not square");
    Rational d = det(m);
    return d == Rational(1) || d == Rational(-1);
}

} // namespace ratlin
