#include "gwloc/ratfunc.hpp"

#include <stdexcept>

namespace gwloc {

Poly2 LinearForm::to_poly() const {
    if (is_s) return Poly2::s();
    Poly2 p = Poly2::u1();
    if (!b.is_zero()) p += Poly2::monomial(b, 0, 1);
    return p;
}

UMonomial operator+(const UMonomial& a, const UMonomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.k != b.k)
        throw IntegrityError("sum of restricted values with unequal u-powers (u^" +
                             std::to_string(a.k) + " vs u^" + std::to_string(b.k) + ")");
    return {a.c + b.c, a.k};
}

std::string UMonomial::str() const {
    if (is_zero()) return "0";
    return c.str() + " * u^" + std::to_string(k);
}

RatFunc2 to_ratfunc(const UMonomial& m) {
    if (m.is_zero()) return RatFunc2();
    if (m.k >= 0) return RatFunc2::monomial(m.c, m.k, 0);
    RatFunc2 r = RatFunc2::monomial(m.c, 0, 0);
    return r * RatFunc2::linear_power(Rational(1), Rational(0), m.k);
}

RatFunc2 RatFunc2::monomial(const Rational& c, int i, int j) {
    RatFunc2 r;
    r.num_ = Poly2::monomial(c, i, j);
    return r;
}

RatFunc2 RatFunc2::linear_power(const Rational& a, const Rational& b, int e) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("RatFunc2: zero linear form");
    if (e == 0) return RatFunc2(1);

    // Normalize a*u1 + b*s to a monic form and a scalar.
    LinearForm f;
    Rational scale;
    if (a.is_zero()) {
        f.is_s = true;
        scale = b;
    } else {
        f.is_s = false;
        f.b = b / a;
        scale = a;
    }
    RatFunc2 r;
    if (e > 0) {
        r.num_ = f.to_poly().pow(e).scaled(scale.pow(e));
    } else {
        r.num_ = Poly2(scale.pow(e));
        r.den_[f] = -e;
    }
    r.normalize();
    return r;
}

RatFunc2 RatFunc2::fraction(const Poly2& num, const Poly2& den) {
    if (den.is_zero()) throw std::domain_error("RatFunc2: zero denominator");
    RatFunc2 d(den);
    RatFunc2 n(num);
    return n * d.reciprocal();
}

Poly2 RatFunc2::den() const {
    Poly2 d = den_rest_;
    for (const auto& [f, e] : den_) d *= f.to_poly().pow(e);
    return d;
}

void RatFunc2::normalize() {
    if (num_.is_zero()) {
        den_.clear();
        den_rest_ = Poly2(1);
        return;
    }
    if (den_rest_.is_zero()) throw std::domain_error("RatFunc2: zero denominator");

    // Pull monomial content of the residual denominator into the factor map.
    {
        int cu = den_rest_.u1_content();
        int cs = den_rest_.s_content();
        if (cu > 0 || cs > 0) {
            den_rest_ = den_rest_.shifted_down(cu, cs);
            if (cu > 0) den_[LinearForm{false, Rational(0)}] += cu;
            if (cs > 0) den_[LinearForm{true, Rational(0)}] += cs;
        }
    }

    // Cancel u1- and s-powers shared by numerator and denominator.
    auto cancel_monomial = [&](const LinearForm& f, int content) {
        auto it = den_.find(f);
        if (it == den_.end()) return 0;
        int c = std::min(content, it->second);
        if (c > 0) {
            it->second -= c;
            if (it->second == 0) den_.erase(it);
        }
        return c;
    };
    int cu = cancel_monomial(LinearForm{false, Rational(0)}, num_.u1_content());
    int cs = cancel_monomial(LinearForm{true, Rational(0)}, num_.s_content());
    if (cu > 0 || cs > 0) num_ = num_.shifted_down(cu, cs);

    // Cancel the remaining linear factors that divide the numerator exactly.
    for (auto it = den_.begin(); it != den_.end();) {
        const LinearForm& f = it->first;
        if (!f.is_s && !f.b.is_zero()) {
            Poly2 fp = f.to_poly();
            while (it->second > 0) {
                auto q = Poly2::divide_exact(num_, fp);
                if (!q) break;
                num_ = *q;
                --it->second;
            }
        }
        if (it->second == 0) it = den_.erase(it);
        else ++it;
    }

    // Keep the residual monic; the factors already are.
    const Rational& lc = den_rest_.leading_coeff();
    if (!lc.is_one()) {
        Rational inv = lc.reciprocal();
        den_rest_ = den_rest_.scaled(inv);
        num_ = num_.scaled(inv);
    }
}

RatFunc2 RatFunc2::operator-() const {
    RatFunc2 r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b) {
    RatFunc2 r;
    r.num_ = a.num_ * b.num_;
    if (r.num_.is_zero()) return RatFunc2();
    r.den_ = a.den_;
    for (const auto& [f, e] : b.den_) r.den_[f] += e;
    r.den_rest_ = a.den_rest_ * b.den_rest_;
    r.normalize();
    return r;
}

RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RatFunc2 r;
    // Factor-wise lcm of the two denominators.
    r.den_ = a.den_;
    for (const auto& [f, e] : b.den_) {
        int& cur = r.den_[f];
        cur = std::max(cur, e);
    }
    Poly2 cof_a(1), cof_b(1);
    for (const auto& [f, e] : r.den_) {
        auto ita = a.den_.find(f);
        auto itb = b.den_.find(f);
        int ea = ita == a.den_.end() ? 0 : ita->second;
        int eb = itb == b.den_.end() ? 0 : itb->second;
        if (e > ea) cof_a *= f.to_poly().pow(e - ea);
        if (e > eb) cof_b *= f.to_poly().pow(e - eb);
    }
    if (a.den_rest_ == b.den_rest_) {
        r.den_rest_ = a.den_rest_;
    } else {
        r.den_rest_ = a.den_rest_ * b.den_rest_;
        cof_a *= b.den_rest_;
        cof_b *= a.den_rest_;
    }
    r.num_ = a.num_ * cof_a + b.num_ * cof_b;
    r.normalize();
    return r;
}

RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b) { return a + (-b); }

RatFunc2 RatFunc2::reciprocal() const {
    if (is_zero()) throw std::domain_error("RatFunc2: division by zero");
    RatFunc2 r;
    r.num_ = den_rest_;
    for (const auto& [f, e] : den_) r.num_ *= f.to_poly().pow(e);

    // Factor the old numerator as far as monomial content and a single
    // linear form allow; anything beyond that stays as a residual.
    Poly2 p = num_;
    int cu = p.u1_content();
    int cs = p.s_content();
    if (cu > 0 || cs > 0) p = p.shifted_down(cu, cs);
    if (cu > 0) r.den_[LinearForm{false, Rational(0)}] += cu;
    if (cs > 0) r.den_[LinearForm{true, Rational(0)}] += cs;

    r.den_rest_ = Poly2(1);
    Rational coef_u1, coef_s, coef_const;
    bool linear = !p.is_zero() && p.total_degree() == 1;
    for (const auto& [e, c] : p.terms()) {
        if (e.i == 1 && e.j == 0) coef_u1 = c;
        else if (e.i == 0 && e.j == 1) coef_s = c;
        else if (e.i == 0 && e.j == 0) coef_const = c;
    }
    if (p.term_count() == 1 && !coef_const.is_zero()) {
        // Pure constant after content extraction.
        r.num_ = r.num_.scaled(coef_const.reciprocal());
    } else if (linear && coef_const.is_zero()) {
        // p = coef_u1*u1 + coef_s*s, both nonzero after content extraction.
        LinearForm f{false, coef_s / coef_u1};
        r.den_[f] += 1;
        r.num_ = r.num_.scaled(coef_u1.reciprocal());
    } else {
        r.den_rest_ = p;
    }
    r.normalize();
    return r;
}

RatFunc2 operator/(const RatFunc2& a, const RatFunc2& b) { return a * b.reciprocal(); }

RatFunc2 RatFunc2::pow(int e) const {
    if (e == 0) return RatFunc2(1);
    RatFunc2 base = e > 0 ? *this : reciprocal();
    RatFunc2 r(1);
    for (int k = 0, n = e > 0 ? e : -e; k < n; ++k) r *= base;
    return r;
}

bool operator==(const RatFunc2& a, const RatFunc2& b) {
    if (a.is_zero()) return b.is_zero();
    if (b.is_zero()) return false;
    return a.num_ * b.den() == b.num_ * a.den();
}

int RatFunc2::s_valuation() const {
    if (is_zero()) throw std::domain_error("RatFunc2: s-valuation of zero");
    auto it = den_.find(LinearForm{true, Rational(0)});
    int den_s = it == den_.end() ? 0 : it->second;
    return num_.s_content() - den_s; // den_rest_ has no s content
}

int RatFunc2::homogeneous_degree() const {
    if (is_zero()) throw std::domain_error("RatFunc2: degree of zero");
    auto dn = num_.homogeneous_degree();
    if (!dn) throw IntegrityError("inhomogeneous numerator: " + num_.str());
    auto dr = den_rest_.homogeneous_degree();
    if (!dr) throw IntegrityError("inhomogeneous denominator: " + den_rest_.str());
    int dd = *dr;
    for (const auto& [f, e] : den_) { (void)f; dd += e; }
    return 2 * (*dn - dd);
}

UMonomial RatFunc2::restrict_antidiagonal() const {
    if (is_zero()) return UMonomial();
    int v = s_valuation();
    if (v < 0)
        throw IntegrityError("pole on the antidiagonal (s-valuation " + std::to_string(v) + ")");
    if (v > 0) return UMonomial();

    // Valuation 0: both the numerator s-content and the denominator s-power
    // are 0, so evaluation at s = 0 is termwise.
    std::map<int, Rational> n0 = num_.u1_slice(0);
    std::map<int, Rational> d0 = den_rest_.u1_slice(0);
    int extra_u1 = 0;
    for (const auto& [f, e] : den_) {
        if (!f.is_s) extra_u1 += e; // (u1 + b*s)|_{s=0} = u1
    }
    // Need n0 = c * u1^k * d0 termwise.
    if (n0.size() != d0.size())
        throw IntegrityError("restriction is not a single monomial: " + canonical_string());
    int k = n0.rbegin()->first - d0.rbegin()->first;
    Rational c = n0.rbegin()->second / d0.rbegin()->second;
    for (const auto& [i, coef] : d0) {
        auto it = n0.find(i + k);
        if (it == n0.end() || it->second != c * coef)
            throw IntegrityError("restriction is not a single monomial: " + canonical_string());
    }
    return UMonomial(c, k - extra_u1);
}

RatFunc2 RatFunc2::swap_u1_u2() const {
    RatFunc2 r;
    r.num_ = num_.swap_u1_u2();
    r.den_rest_ = den_rest_.swap_u1_u2();
    for (const auto& [f, e] : den_) {
        if (f.is_s) {
            r.den_[f] += e;
        } else {
            // u1 + b*s  ->  (s - u1) + b*s = -(u1 - (1+b)*s)
            LinearForm g{false, -(Rational(1) + f.b)};
            r.den_[g] += e;
            if (e % 2 != 0) r.num_ = -r.num_;
        }
    }
    r.normalize();
    return r;
}

std::string RatFunc2::canonical_string() const {
    return "(" + num_.str() + ")/(" + den().str() + ")";
}

} // namespace gwloc
