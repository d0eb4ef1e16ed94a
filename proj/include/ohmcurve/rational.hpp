#ifndef OHMCURVE_RATIONAL_HPP
#define OHMCURVE_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "ohmcurve/errors.hpp"

namespace ohmcurve {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin value wrapper over GMP's mpq_class; every arithmetic
// result is canonicalized, so equality is plain representation equality.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {} // NOLINT(google-explicit-constructor)
    Rational(long n, long d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    explicit Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Parses "p/q" or a bare integer "p".
    static Rational from_string(std::string_view text);

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational reciprocal() const {
        if (is_zero()) throw std::invalid_argument("Rational: reciprocal of zero");
        mpq_class r;
        mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
        return Rational(std::move(r));
    }

    double to_double() const { return q_.get_d(); }

    // Always "p/q", with the denominator spelled out even when it is 1.
    std::string str() const {
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
        return Rational(mpq_class(a.q_ / b.q_));
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    mpq_class q_;
};

inline Rational Rational::from_string(std::string_view text) {
    auto slash = text.find('/');
    std::string num(text.substr(0, slash));
    std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
    mpz_class n, d;
    if (num.empty() || n.set_str(num, 10) != 0)
        throw ParseError("invalid rational numerator: '" + std::string(text) + "'");
    if (den.empty() || d.set_str(den, 10) != 0)
        throw ParseError("invalid rational denominator: '" + std::string(text) + "'");
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return Rational(n, d);
}

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

} // namespace ohmcurve

#endif
