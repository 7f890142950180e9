#pragma once

#include <vector>

#include "gwloc/ratfunc.hpp"

namespace gwloc {

// Equivariant parameter a flag weight is a multiple of. The open theory is
// univariate; its u is realized as u1.
enum class WeightVar { u, u1, u2 };

// Weight coeff * var attached to one flag (edge, vertex), e.g. -u/d.
struct FlagWeight {
    WeightVar var = WeightVar::u;
    Rational coeff; // nonzero

    RatFunc2 value() const; // realized in the (u1, s) coordinates
};

struct VertexIntegralSpec {
    std::vector<FlagWeight> flags;      // nonempty
    std::vector<int> marking_exponents; // descendant exponents a_i >= 0
};

// Integral of psi_1^{s_1} ... psi_h^{s_h} over the genus-zero moduli with
// h >= 3 points: (h-3)!/prod(s_i!) when the exponents sum to h-3, else 0.
Rational psi_top_intersection(const std::vector<int>& exponents);

// The same number computed by the string-equation recursion down to the
// three-point base case. Independent of psi_top_intersection; memoized.
Rational psi_string_equation(const std::vector<int>& exponents);

// The vertex factor: integral of prod psi_i^{a_i} / prod (w_e - psi_e) over
// the moduli with one point per flag and per marking. For fewer than three
// points the unstable conventions apply (in the w-form: one flag -> w;
// one flag + one marking -> 1 for a = 0 and (-w)^a for a > 0;
// two flags -> 1/(w1 + w2)).
RatFunc2 vertex_integral(const VertexIntegralSpec& spec);

} // namespace gwloc
