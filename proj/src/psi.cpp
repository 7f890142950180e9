#include "gwloc/psi.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace gwloc {

namespace {

// (a, b) with value = a*u1 + b*s.
std::pair<Rational, Rational> linear_coeffs(const FlagWeight& w) {
    switch (w.var) {
        case WeightVar::u:
        case WeightVar::u1: return {w.coeff, Rational(0)};
        case WeightVar::u2: return {-w.coeff, w.coeff}; // u2 = s - u1
    }
    throw std::logic_error("unreachable");
}

// 1/w^e for a flag weight w.
RatFunc2 inverse_weight_power(const FlagWeight& w, int e) {
    auto [a, b] = linear_coeffs(w);
    return RatFunc2::linear_power(a, b, -e);
}

} // namespace

RatFunc2 FlagWeight::value() const {
    auto [a, b] = linear_coeffs(*this);
    return RatFunc2::linear_power(a, b, 1);
}

Rational psi_top_intersection(const std::vector<int>& exponents) {
    int h = static_cast<int>(exponents.size());
    if (h < 3) throw std::domain_error("psi_top_intersection: fewer than three points");
    long total = 0;
    Rational denom(1);
    for (int e : exponents) {
        if (e < 0) throw std::domain_error("psi_top_intersection: negative exponent");
        total += e;
        denom *= Rational::factorial(static_cast<unsigned long>(e));
    }
    if (total != h - 3) return Rational(0);
    return Rational::factorial(static_cast<unsigned long>(h - 3)) / denom;
}

Rational psi_string_equation(const std::vector<int>& exponents) {
    int h = static_cast<int>(exponents.size());
    if (h < 3) throw std::domain_error("psi_string_equation: fewer than three points");
    long total = 0;
    for (int e : exponents) total += e;
    if (total != h - 3) return Rational(0);

    static std::map<std::vector<int>, Rational> memo;
    std::vector<int> key = exponents;
    std::sort(key.begin(), key.end());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    Rational value;
    if (h == 3) {
        value = Rational(1); // forced (0,0,0)
    } else {
        // Remove one zero-exponent point (one always exists: total = h-3 < h)
        // and decrement each positive exponent in turn.
        std::vector<int> rest(key.begin() + 1, key.end()); // key[0] == 0
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (rest[i] == 0) continue;
            std::vector<int> next = rest;
            --next[i];
            value += psi_string_equation(next);
        }
    }
    memo[key] = value;
    return value;
}

RatFunc2 vertex_integral(const VertexIntegralSpec& spec) {
    const auto& flags = spec.flags;
    const auto& marks = spec.marking_exponents;
    if (flags.empty()) throw std::domain_error("vertex_integral: no flags");
    for (const auto& w : flags)
        if (w.coeff.is_zero()) throw std::domain_error("vertex_integral: zero flag weight");
    for (int a : marks)
        if (a < 0) throw std::domain_error("vertex_integral: negative exponent");

    const int k = static_cast<int>(flags.size());
    const int n = static_cast<int>(marks.size());
    const int h = k + n;

    // Memo key: flags as sorted (realized linear form, coeff) pairs plus the
    // sorted exponent multiset; the integral is symmetric in both.
    using WKey = std::pair<std::pair<Rational, Rational>, int>;
    std::vector<WKey> ws;
    for (const auto& w : flags) ws.push_back({linear_coeffs(w), 0});
    std::sort(ws.begin(), ws.end(), [](const WKey& x, const WKey& y) {
        if (x.first.first != y.first.first) return x.first.first < y.first.first;
        return x.first.second < y.first.second;
    });
    std::vector<int> as = marks;
    std::sort(as.begin(), as.end());
    using Key = std::pair<std::vector<WKey>, std::vector<int>>;
    static std::map<Key, RatFunc2> memo;
    Key key{ws, as};
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    RatFunc2 result;
    if (h >= 3) {
        // Expand each 1/(w - psi) as sum_m psi^m / w^{m+1}; only exponent
        // tuples of total h-3 survive.
        long budget = h - 3;
        Rational mark_fact(1);
        for (int a : marks) {
            budget -= a;
            mark_fact *= Rational::factorial(static_cast<unsigned long>(a));
        }
        if (budget >= 0) {
            Rational top_fact = Rational::factorial(static_cast<unsigned long>(h - 3));
            std::vector<int> m(static_cast<std::size_t>(k), 0);
            auto emit = [&]() {
                Rational coef = top_fact / mark_fact;
                RatFunc2 term(1);
                for (int i = 0; i < k; ++i) {
                    coef /= Rational::factorial(static_cast<unsigned long>(m[static_cast<std::size_t>(i)]));
                    term *= inverse_weight_power(flags[static_cast<std::size_t>(i)],
                                                 m[static_cast<std::size_t>(i)] + 1);
                }
                result += term * RatFunc2(coef);
            };
            auto rec = [&](auto&& self, int idx, long left) -> void {
                if (idx == k - 1) {
                    m[static_cast<std::size_t>(idx)] = static_cast<int>(left);
                    emit();
                    return;
                }
                for (long v = 0; v <= left; ++v) {
                    m[static_cast<std::size_t>(idx)] = static_cast<int>(v);
                    self(self, idx + 1, left - v);
                }
            };
            rec(rec, 0, budget);
        }
    } else if (k == 1 && n == 0) {
        result = flags[0].value();
    } else if (k == 1 && n == 1) {
        result = marks[0] == 0 ? RatFunc2(1) : (-flags[0].value()).pow(marks[0]);
    } else { // k == 2, n == 0
        auto [a1, b1] = linear_coeffs(flags[0]);
        auto [a2, b2] = linear_coeffs(flags[1]);
        Rational a = a1 + a2, b = b1 + b2;
        if (a.is_zero() && b.is_zero())
            throw IntegrityError("unsmoothable node weight: w1 + w2 = 0");
        result = RatFunc2::linear_power(a, b, -1);
    }
    memo[key] = result;
    return result;
}

} // namespace gwloc
