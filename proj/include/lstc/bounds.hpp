// Bound assembly: the cup-length sandwich for LS category, the
// zero-divisor bound for topological complexity, and the immersion-based
// formula for real projective spaces.

#pragma once

#include "graded_algebra.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace lstc {

/// 1 for n in {1, 3, 7} (the parallelizable projective spaces), else 0.
inline int delta_correction(int n)
{
    if (n < 1)
        throw std::domain_error("delta correction: dimension must be positive");
    return (n == 1 || n == 3 || n == 7) ? 1 : 0;
}

/// Topological complexity of RP^n from its Euclidean immersion dimension,
/// which the caller must supply: tc = imm - delta. Valid for n != 1, 3, 7
/// by the immersion theorem and for all n via the delta correction.
inline int tc_rp(int n, int imm)
{
    const int delta = delta_correction(n);
    if (imm < n)
        throw std::domain_error("tc of RP^n: immersion dimension " + std::to_string(imm) +
                                " is below the manifold dimension " + std::to_string(n));
    return imm - delta;
}

struct BoundsReport {
    int cuplength = 0;
    int zcl = 0;
    int dim = 0;
    int cat_lower = 0;
    int cat_upper = 0;
    bool cat_exact = false;
    int tc_lower = 0;
    int tc_upper = 0;
    bool tc_exact = false;
    std::optional<int> known_tc;
    bool known_tc_consistent = true;
};

/// Sandwich facts from one algebra: cuplength <= cat <= dim and
/// zcl <= tc <= 2 cat <= 2 dim. A known tc value (for example from tc_rp)
/// is echoed back with a consistency flag.
template <typename F>
BoundsReport bounds_report(const GradedAlgebra<F>& a, int dim,
                           std::optional<int> known_tc = std::nullopt,
                           std::size_t capacity = default_capacity)
{
    int top_nonzero = 0;
    for (int d = 0; d <= a.top_degree; ++d)
        if (a.dim(d) > 0)
            top_nonzero = d;
    if (dim < top_nonzero)
        throw std::domain_error("bounds report: dimension " + std::to_string(dim) +
                                " lies below the top nonzero degree " +
                                std::to_string(top_nonzero));
    BoundsReport r;
    r.cuplength = cuplength(a);
    r.zcl = zero_divisor_cuplength(a, capacity);
    r.dim = dim;
    r.cat_lower = r.cuplength;
    r.cat_upper = dim;
    r.cat_exact = r.cat_lower == r.cat_upper;
    r.tc_lower = r.zcl;
    r.tc_upper = 2 * r.cat_upper;
    r.tc_exact = r.tc_lower == r.tc_upper;
    r.known_tc = known_tc;
    if (known_tc)
        r.known_tc_consistent = r.tc_lower <= *known_tc && *known_tc <= r.tc_upper;
    return r;
}

}  // namespace lstc
