#pragma once

#include <array>
#include <string>

namespace schedlab::fuzzy {

/// Piecewise-linear fuzzy set over a numeric universe. Four non-decreasing
/// breakpoints a <= b <= c <= d describe a trapezoid; a triangle has b == c.
/// Boundary shoulders (a == b or c == d) hold membership 1 on their flat
/// segment.
struct FuzzySet {
    std::string label;
    double a = 0, b = 0, c = 0, d = 0;
};

/// Membership degree of x in the set. Total function: 0 outside [a, d],
/// exact 1.0 on [b, c], linear interpolation on the slopes.
inline double membership(const FuzzySet& s, double x) {
    if (x < s.a || x > s.d) return 0.0;
    if (x < s.b) return (x - s.a) / (s.b - s.a);
    if (x <= s.c) return 1.0;
    if (s.d > s.c) return (s.d - x) / (s.d - s.c);
    return 1.0;
}

/// Three labelled sets over a closed universe [lo, hi], ordered low..high
/// (or poor..good for the output variable).
struct LinguisticVariable {
    std::string name;
    double lo = 0, hi = 1;
    std::array<FuzzySet, 3> sets;
};

/// Degrees of one crisp value against all three sets. The input is clamped
/// to the universe first, so out-of-range values saturate at the shoulders.
inline std::array<double, 3> fuzzify(const LinguisticVariable& var, double x) {
    const double cx = x < var.lo ? var.lo : (x > var.hi ? var.hi : x);
    return {membership(var.sets[0], cx), membership(var.sets[1], cx),
            membership(var.sets[2], cx)};
}

/// Proportional three-set template over [lo, hi]: shoulders at 15% / 85% of
/// the span, full overlap of the middle set with both neighbours, and the
/// low set ending exactly where the high set starts.
LinguisticVariable make_template_variable(const std::string& name,
                                          const std::array<std::string, 3>& labels,
                                          double lo, double hi);

/// Validates universe ordering, breakpoint monotonicity, the low-end/high-set
/// overlap rule and full coverage of the universe. Throws schedlab::Error.
void validate_variable(const LinguisticVariable& var);

}  // namespace schedlab::fuzzy
