#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace cybe {

struct ScalarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an operation would need two distinct irrationalities at once.
struct TowerError : ScalarError {
    using ScalarError::ScalarError;
};

using Rational = mpq_class;

/// Exact field element a + b*sqrt(d) with a, b rational and d a square-free
/// positive integer.  d == 1 marks a plain rational (then b == 0).  Mixing two
/// distinct non-trivial discriminants throws TowerError; a rational operand
/// adopts the other side's discriminant.
class Scalar {
  public:
    Scalar() : a_(0), b_(0), d_(1) {}
    Scalar(long v) : a_(v), b_(0), d_(1) {}
    Scalar(const Rational& v) : a_(v), b_(0), d_(1) {}
    Scalar(long num, long den) : a_(num, den), b_(0), d_(1) { a_.canonicalize(); }
    Scalar(const Rational& a, const Rational& b, long d);

    /// sqrt of a nonnegative rational; adjoins a square root when needed.
    static Scalar sqrt_of(const Rational& r);

    const Rational& rat_part() const { return a_; }
    const Rational& irr_part() const { return b_; }
    long disc() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    Scalar operator-() const { return Scalar(-a_, -b_, d_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    Scalar inverse() const;
    /// Galois conjugate a - b*sqrt(d).
    Scalar conjugate() const { return Scalar(a_, -b_, d_); }

    /// "p/q" or "p/q+r/s*sqrt(d)" / "p/q-r/s*sqrt(d)".
    std::string str() const;
    static Scalar parse(const std::string& s);

  private:
    static long merge_disc(long d1, long d2);
    Rational a_, b_;
    long d_;
};

/// Square-free part: n = s^2 * d with d square-free; returns {s, d}.
std::pair<mpz_class, mpz_class> squarefree_split(const mpz_class& n);

} // namespace cybe
