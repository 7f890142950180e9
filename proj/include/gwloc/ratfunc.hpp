#pragma once

#include <map>
#include <string>

#include "gwloc/errors.hpp"
#include "gwloc/poly2.hpp"

namespace gwloc {

// Monic linear form in (u1, s): either "s" or "u1 + b*s".
// These are the only irreducible factors that occur in graph-sum denominators.
struct LinearForm {
    bool is_s = false;
    Rational b; // meaningful when !is_s

    Poly2 to_poly() const;
    friend bool operator==(const LinearForm& x, const LinearForm& y) {
        return x.is_s == y.is_s && (x.is_s || x.b == y.b);
    }
};

struct LinearFormLess {
    bool operator()(const LinearForm& x, const LinearForm& y) const {
        if (x.is_s != y.is_s) return !x.is_s; // u1-forms first, then s
        if (x.is_s) return false;
        return x.b < y.b;
    }
};

// A single monomial c * u^k (k of either sign); the value ring of every
// restricted invariant. Zero is stored as 0 * u^0.
struct UMonomial {
    Rational c;
    int k = 0;

    UMonomial() = default;
    UMonomial(const Rational& coeff, int power) : c(coeff), k(coeff.is_zero() ? 0 : power) {}

    bool is_zero() const { return c.is_zero(); }

    // Sum is defined only between like powers (or with zero); anything else
    // means a graph sum produced inhomogeneous parts.
    friend UMonomial operator+(const UMonomial& a, const UMonomial& b);
    friend UMonomial operator*(const UMonomial& a, const UMonomial& b) {
        return {a.c * b.c, a.k + b.k};
    }
    friend bool operator==(const UMonomial& a, const UMonomial& b) {
        return a.c == b.c && (a.is_zero() || a.k == b.k);
    }
    UMonomial operator-() const { return {-c, k}; }
    UMonomial negated_u() const { return {(k % 2 == 0) ? c : -c, k}; } // u -> -u

    std::string str() const; // "c * u^k", or "0"
};

// Exact rational function of u1 and s = u1 + u2. The denominator is kept as
// a product of monic linear forms (times a residual polynomial, which stays 1
// on every localization path); powers of s common to numerator and
// denominator are always cancelled, and denominator factors dividing the
// numerator exactly are removed. The expanded denominator is monic under the
// canonical term order.
class RatFunc2 {
public:
    using Factors = std::map<LinearForm, int, LinearFormLess>;

    RatFunc2() : den_rest_(1) {}
    explicit RatFunc2(const Rational& c) : num_(c), den_rest_(1) {}
    RatFunc2(int c) : RatFunc2(Rational(c)) {}
    explicit RatFunc2(const Poly2& p) : num_(p), den_rest_(1) {}

    // c * u1^i * s^j
    static RatFunc2 monomial(const Rational& c, int i, int j);
    static RatFunc2 u1() { return monomial(Rational(1), 1, 0); }
    static RatFunc2 s() { return monomial(Rational(1), 0, 1); }
    static RatFunc2 u2() { return RatFunc2(Poly2::u2()); }
    // (a*u1 + b*s)^e, e of either sign; the form must be nonzero.
    static RatFunc2 linear_power(const Rational& a, const Rational& b, int e);
    // num / den as plain polynomials (den != 0).
    static RatFunc2 fraction(const Poly2& num, const Poly2& den);

    bool is_zero() const { return num_.is_zero(); }
    const Poly2& num() const { return num_; }
    Poly2 den() const; // expanded; monic under TermOrder
    const Factors& den_factors() const { return den_; }
    const Poly2& den_rest() const { return den_rest_; }

    friend RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b);
    friend RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b);
    friend RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b);
    friend RatFunc2 operator/(const RatFunc2& a, const RatFunc2& b);
    RatFunc2 operator-() const;
    RatFunc2& operator+=(const RatFunc2& b) { *this = *this + b; return *this; }
    RatFunc2& operator*=(const RatFunc2& b) { *this = *this * b; return *this; }

    RatFunc2 reciprocal() const;
    RatFunc2 pow(int e) const;

    // Exact equality of values (cross multiplication; no canonical form needed).
    friend bool operator==(const RatFunc2& a, const RatFunc2& b);
    friend bool operator!=(const RatFunc2& a, const RatFunc2& b) { return !(a == b); }

    // Order of vanishing along s = 0. Undefined (throws) for zero.
    int s_valuation() const;

    // 2 * (deg num - deg den) with deg u1 = deg s = 2; throws IntegrityError
    // if numerator or denominator fails to be homogeneous.
    int homogeneous_degree() const;

    // Value at s = 0, u1 = u. Requires s_valuation >= 0 (pole -> IntegrityError)
    // and a single-monomial value (multi-term residue -> IntegrityError).
    UMonomial restrict_antidiagonal() const;

    // The fan involution u1 <-> u2 (u1 -> s - u1, s fixed).
    RatFunc2 swap_u1_u2() const;

    // "(num)/(den)" with both polynomials in canonical term order.
    std::string canonical_string() const;

private:
    void normalize();

    Poly2 num_;
    Factors den_;    // exponents > 0
    Poly2 den_rest_; // monic, nonzero; no s or u1 monomial content
};

RatFunc2 to_ratfunc(const UMonomial& m);

} // namespace gwloc
