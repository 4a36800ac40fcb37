/*
 * Exact integer and rational scalars.
 *
 * All scalar arithmetic in this project is exact: integers are
 * arbitrary-precision (GMP mpz) and rationals are kept in lowest terms
 * with a positive denominator (GMP mpq canonical form).  No operation
 * anywhere in the library goes through floating point.
 */

#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace ratlin {

using Int = mpz_class;

inline int sgn(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline Int gcd(const Int& a, const Int& b)
{
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}
inline Int lcm(const Int& a, const Int& b)
{
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}
inline std::string to_string(const Int& a) { return a.get_str(); }

/// Rational number, always in lowest terms with denominator > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(num, den)
    {
        if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(int num, int den) : Rational(Int(num), Int(den)) {}

    Int num() const { return Int(v_.get_num()); }
    Int den() const { return Int(v_.get_den()); }

    bool is_zero() const { return sgn_of() == 0; }
    int sgn_of() const { return mpq_sgn(v_.get_mpq_t()); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.v_, b.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Renders "p/q", or just "p" when q = 1.
    std::string str() const
    {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    double to_double() const { return v_.get_d(); }

    /// Parses "p" or "p/q".  Throws std::invalid_argument on malformed input.
    static Rational parse(const std::string& s)
    {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(Int(s));
            return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
    }

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

inline bool is_zero_vec(const IntVec& v)
{
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

inline Int dot(const IntVec& a, const IntVec& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rational dot(const RatVec& a, const IntVec& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rational s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(b[i]);
    return s;
}

inline Rational dot(const RatVec& a, const RatVec& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rational s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace ratlin
