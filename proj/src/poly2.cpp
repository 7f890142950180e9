#include "gwloc/poly2.hpp"

#include <sstream>
#include <stdexcept>

namespace gwloc {

Poly2 Poly2::monomial(const Rational& c, int i, int j) {
    Poly2 p;
    if (!c.is_zero()) p.terms_[{i, j}] = c;
    return p;
}

Poly2 Poly2::u2() {
    Poly2 p = s();
    p.add_term({1, 0}, Rational(-1));
    return p;
}

const Rational& Poly2::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("Poly2: leading coefficient of zero");
    return terms_.begin()->second;
}

void Poly2::add_term(const Exp2& e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[e] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly2 Poly2::operator-() const {
    Poly2 r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
    Poly2 r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

Poly2 operator-(const Poly2& a, const Poly2& b) {
    Poly2 r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term({ea.i + eb.i, ea.j + eb.j}, ca * cb);
    return r;
}

Poly2 Poly2::scaled(const Rational& c) const {
    Poly2 r;
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_[e] = t * c;
    return r;
}

Poly2 Poly2::pow(int e) const {
    if (e < 0) throw std::domain_error("Poly2: negative power");
    Poly2 r(1);
    for (int k = 0; k < e; ++k) r *= *this;
    return r;
}

int Poly2::s_content() const {
    if (terms_.empty()) throw std::domain_error("Poly2: content of zero");
    int m = -1;
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (m < 0 || e.j < m) m = e.j;
    }
    return m;
}

int Poly2::u1_content() const {
    if (terms_.empty()) throw std::domain_error("Poly2: content of zero");
    int m = -1;
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (m < 0 || e.i < m) m = e.i;
    }
    return m;
}

Poly2 Poly2::shifted_down(int a, int b) const {
    Poly2 r;
    for (const auto& [e, c] : terms_) {
        if (e.i < a || e.j < b) throw std::domain_error("Poly2: monomial does not divide");
        r.terms_[{e.i - a, e.j - b}] = c;
    }
    return r;
}

int Poly2::total_degree() const {
    if (terms_.empty()) throw std::domain_error("Poly2: degree of zero");
    return terms_.begin()->first.total(); // leading term has maximal total degree
}

std::optional<int> Poly2::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.total();
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (e.total() != d) return std::nullopt;
    }
    return d;
}

std::map<int, Rational> Poly2::u1_slice(int j0) const {
    std::map<int, Rational> r;
    for (const auto& [e, c] : terms_)
        if (e.j == j0) r[e.i] = c;
    return r;
}

Poly2 Poly2::swap_u1_u2() const {
    // u1 -> s - u1, s fixed
    Poly2 r;
    Poly2 repl = u2();
    for (const auto& [e, c] : terms_) {
        Poly2 t = repl.pow(e.i).scaled(c);
        for (const auto& [te, tc] : t.terms_) r.add_term({te.i, te.j + e.j}, tc);
    }
    return r;
}

std::optional<Poly2> Poly2::divide_exact(const Poly2& p, const Poly2& d) {
    if (d.is_zero()) throw std::domain_error("Poly2: division by zero");
    Poly2 rem = p;
    Poly2 quot;
    const Exp2 lead = d.terms_.begin()->first;
    const Rational& lc = d.terms_.begin()->second;
    while (!rem.is_zero()) {
        const Exp2 re = rem.terms_.begin()->first;
        if (re.i < lead.i || re.j < lead.j) return std::nullopt;
        Exp2 qe{re.i - lead.i, re.j - lead.j};
        Rational qc = rem.terms_.begin()->second / lc;
        quot.add_term(qe, qc);
        Poly2 sub;
        for (const auto& [e, c] : d.terms_) sub.terms_[{e.i + qe.i, e.j + qe.j}] = c * qc;
        rem = rem - sub;
    }
    return quot;
}

std::string Poly2::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { out << "-"; a = -a; }
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        std::string mono;
        if (e.i > 0) mono += "u1" + (e.i > 1 ? "^" + std::to_string(e.i) : "");
        if (e.j > 0) {
            if (!mono.empty()) mono += "*";
            mono += "s" + (e.j > 1 ? "^" + std::to_string(e.j) : "");
        }
        if (mono.empty()) {
            out << a.str();
        } else if (a.is_one()) {
            out << mono;
        } else {
            out << a.str() << "*" << mono;
        }
    }
    return out.str();
}

} // namespace gwloc
