#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gwloc {

// Arbitrary-precision rational. Always canonical: gcd(|num|, den) = 1,
// den > 0, zero stored as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<long int>(n)) {}
    Rational(long long n) : v_(from_ll(n)) {}
    Rational(long long num, long long den) : v_(from_ll(num)) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ /= from_ll(den);
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rational(const std::string& s) : v_(s) { v_.canonicalize(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(1 / v_));
    }

    // Integer exponents of either sign; 0^0 = 1, 0^negative throws.
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero()) {
            if (e < 0) throw std::domain_error("Rational: division by zero");
            return Rational(0);
        }
        mpq_class base = e > 0 ? v_ : mpq_class(1 / v_);
        unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
        mpq_class r;
        mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), k);
        mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), k);
        r.canonicalize();
        return Rational(r);
    }

    static Rational factorial(unsigned long n) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), n);
        return Rational(mpq_class(f));
    }

    // n^k for nonnegative integer n, k.
    static Rational ipow(unsigned long n, unsigned long k) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), n, k);
        return Rational(mpq_class(p));
    }

    // "n", or "n/d" when the denominator is nontrivial.
    std::string str() const { return v_.get_str(); }

private:
    static mpq_class from_ll(long long n) {
        if (n >= 0) return mpq_class(mpz_class(static_cast<unsigned long>(n)));
        return mpq_class(-mpz_class(static_cast<unsigned long>(-(n + 1)) + 1));
    }

    mpq_class v_;
};

} // namespace gwloc
