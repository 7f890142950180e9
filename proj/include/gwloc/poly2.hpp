#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "gwloc/rational.hpp"

namespace gwloc {

// Exponent pair of one monomial: u1^i * s^j.
struct Exp2 {
    int i = 0; // u1 exponent
    int j = 0; // s exponent
    int total() const { return i + j; }
    friend bool operator==(const Exp2& a, const Exp2& b) { return a.i == b.i && a.j == b.j; }
};

// Canonical term order: total degree descending, then u1-exponent descending.
// Leading term of a product is the product of leading terms under this order.
struct TermOrder {
    bool operator()(const Exp2& a, const Exp2& b) const {
        if (a.total() != b.total()) return a.total() > b.total();
        return a.i > b.i;
    }
};

// Polynomial in u1 and s = u1 + u2, exact rational coefficients.
// No zero coefficients are stored; term iteration follows TermOrder.
class Poly2 {
public:
    using Terms = std::map<Exp2, Rational, TermOrder>;

    Poly2() = default;
    explicit Poly2(const Rational& c) { if (!c.is_zero()) terms_[{0, 0}] = c; }
    Poly2(int c) : Poly2(Rational(c)) {}

    static Poly2 monomial(const Rational& c, int i, int j);
    static Poly2 u1() { return monomial(Rational(1), 1, 0); }
    static Poly2 s() { return monomial(Rational(1), 0, 1); }
    // u2 = s - u1
    static Poly2 u2();

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    const Rational& leading_coeff() const; // under TermOrder; poly must be nonzero

    Poly2 operator-() const;
    friend Poly2 operator+(const Poly2& a, const Poly2& b);
    friend Poly2 operator-(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    Poly2& operator+=(const Poly2& b) { *this = *this + b; return *this; }
    Poly2& operator*=(const Poly2& b) { *this = *this * b; return *this; }
    friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

    Poly2 scaled(const Rational& c) const;
    Poly2 pow(int e) const; // e >= 0

    // Smallest s-exponent (resp. u1-exponent) over all terms; poly must be nonzero.
    int s_content() const;
    int u1_content() const;

    // Divide by u1^a * s^b; every term must have large enough exponents.
    Poly2 shifted_down(int a, int b) const;

    int total_degree() const; // max of i + j; poly must be nonzero
    // Degree when all terms share one total degree, otherwise nullopt.
    std::optional<int> homogeneous_degree() const;

    // Terms with s-exponent exactly j0, as a univariate polynomial in u1
    // (map u1-exponent -> coefficient).
    std::map<int, Rational> u1_slice(int j0) const;

    // Substitute u1 -> s - u1 (the fan involution u1 <-> u2).
    Poly2 swap_u1_u2() const;

    // Quotient if d divides *this exactly, nullopt otherwise. Division is
    // long division by the leading term under TermOrder; d must be nonzero.
    static std::optional<Poly2> divide_exact(const Poly2& p, const Poly2& d);

    // Deterministic rendering, e.g. "u1^2*s - 2*u1 + 1/2".
    std::string str() const;

private:
    void add_term(const Exp2& e, const Rational& c);

    Terms terms_;
};

} // namespace gwloc
