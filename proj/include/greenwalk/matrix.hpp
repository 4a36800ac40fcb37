/*
 * Dense integer and rational matrices, sized at construction.
 *
 * These stay tiny (n is the rank of the quiver, rarely above 6), so the
 * implementations favour exactness and clarity: Gauss-Jordan over the
 * rationals for inverses, fraction-free expansion for determinants.
 */

#pragma once

#include "greenwalk/rational.hpp"

#include <initializer_list>

namespace ratlin {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Int(0))
    {
        if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative size");
    }
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[index(i, j)]; }
    const Int& at(int i, int j) const { return a_[index(i, j)]; }

    IntVec row(int i) const;
    IntVec col(int j) const;

    IntMatrix transpose() const;
    IntMatrix operator-() const;
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    /// True iff every entry is zero except exactly one -1 per row and column.
    bool is_negated_permutation() const;
    bool is_skew_symmetric() const;

private:
    size_t index(int i, int j) const
    {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("IntMatrix: index out of range");
        return static_cast<size_t>(i) * cols_ + j;
    }
    int rows_, cols_;
    std::vector<Int> a_;
};

class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols)
    {
        if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: negative size");
    }
    explicit RatMatrix(const IntMatrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[index(i, j)]; }
    const Rational& at(int i, int j) const { return a_[index(i, j)]; }
    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

    bool is_integral() const;
    /// Conversion to IntMatrix; throws std::domain_error if any entry has
    /// a denominator other than 1.
    IntMatrix to_int() const;

private:
    size_t index(int i, int j) const
    {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("RatMatrix: index out of range");
        return static_cast<size_t>(i) * cols_ + j;
    }
    int rows_, cols_;
    std::vector<Rational> a_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntVec mat_apply(const IntMatrix& a, const IntVec& v);
RatVec mat_apply(const IntMatrix& a, const RatVec& v);
RatVec mat_apply(const RatMatrix& a, const RatVec& v);

Rational det(const RatMatrix& m);
Rational det(const IntMatrix& m);

/// Exact inverse; throws SingularMatrixError if det = 0.
RatMatrix rat_inverse(const RatMatrix& m);
RatMatrix rat_inverse(const IntMatrix& m);

/// True iff m is square with determinant +1 or -1.
bool is_z_invertible(const IntMatrix& m);

struct SingularMatrixError : std::domain_error {
    SingularMatrixError() : std::domain_error("matrix is singular") {}
};

} // namespace ratlin
