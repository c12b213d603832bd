#include "cybe/scalar.hpp"

namespace cybe {

Scalar::Scalar(const Rational& a, const Rational& b, long d) : a_(a), b_(b), d_(d) {
    if (d_ < 1) throw ScalarError("discriminant must be a positive integer");
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
    }
    if (b_ == 0) d_ = 1;
}

long Scalar::merge_disc(long d1, long d2) {
    if (d1 == d2) return d1;
    if (d1 == 1) return d2;
    if (d2 == 1) return d1;
    throw TowerError("cannot mix sqrt(" + std::to_string(d1) + ") with sqrt(" +
                     std::to_string(d2) + "): only one square root per context");
}

Scalar& Scalar::operator+=(const Scalar& o) {
    d_ = merge_disc(d_, o.d_);
    a_ += o.a_;
    b_ += o.b_;
    if (b_ == 0) d_ = 1;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    d_ = merge_disc(d_, o.d_);
    a_ -= o.a_;
    b_ -= o.b_;
    if (b_ == 0) d_ = 1;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    long d = merge_disc(d_, o.d_);
    Rational a = a_ * o.a_ + b_ * o.b_ * d;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    d_ = (b_ == 0) ? 1 : d;
    return *this;
}

Scalar Scalar::inverse() const {
    Rational norm = a_ * a_ - b_ * b_ * d_;
    if (norm == 0) throw ScalarError("division by zero scalar");
    return Scalar(a_ / norm, -b_ / norm, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::pair<mpz_class, mpz_class> squarefree_split(const mpz_class& n) {
    if (n <= 0) throw ScalarError("squarefree_split expects a positive integer");
    mpz_class s = 1, d = n;
    for (mpz_class p = 2; p * p <= d; ++p) {
        mpz_class pp = p * p;
        while (d % pp == 0) {
            d /= pp;
            s *= p;
        }
    }
    return {s, d};
}

Scalar Scalar::sqrt_of(const Rational& r) {
    if (r < 0) throw ScalarError("sqrt of a negative rational");
    if (r == 0) return Scalar();
    // sqrt(p/q) = sqrt(p*q)/q
    mpz_class pq = r.get_num() * r.get_den();
    auto [s, d] = squarefree_split(pq);
    Rational coeff(s, r.get_den());
    coeff.canonicalize();
    if (d == 1) return Scalar(coeff);
    if (!d.fits_slong_p()) throw ScalarError("discriminant too large");
    return Scalar(Rational(0), coeff, d.get_si());
}

std::string Scalar::str() const {
    if (b_ == 0) return a_.get_str();
    std::string out = a_.get_str();
    Rational ab = abs(b_);
    out += (b_ < 0 ? "-" : "+");
    out += ab.get_str() + "*sqrt(" + std::to_string(d_) + ")";
    return out;
}

Scalar Scalar::parse(const std::string& s) {
    auto pos = s.find("*sqrt(");
    if (pos == std::string::npos) {
        Rational a(s);
        a.canonicalize();
        return Scalar(a);
    }
    // find the sign separating the rational part from the sqrt coefficient:
    // the last '+'/'-' strictly before the coefficient token start
    auto close = s.find(')', pos);
    if (close == std::string::npos) throw ScalarError("bad scalar literal: " + s);
    std::string dstr = s.substr(pos + 6, close - pos - 6);
    size_t sign = std::string::npos;
    for (size_t i = pos; i-- > 1;) {
        if (s[i] == '+' || s[i] == '-') {
            sign = i;
            break;
        }
    }
    if (sign == std::string::npos) throw ScalarError("bad scalar literal: " + s);
    Rational a(s.substr(0, sign));
    Rational b(s.substr(sign + 1, pos - sign - 1));
    a.canonicalize();
    b.canonicalize();
    if (s[sign] == '-') b = -b;
    long d = std::stol(dstr);
    return Scalar(a, b, d);
}

} // namespace cybe
