#include "schedlab/fuzzy/fuzzy_set.hpp"

#include <algorithm>
#include <vector>

#include "schedlab/common.hpp"

namespace schedlab::fuzzy {

LinguisticVariable make_template_variable(const std::string& name,
                                          const std::array<std::string, 3>& labels,
                                          double lo, double hi) {
    const double span = hi - lo;
    const double p15 = lo + 0.15 * span;
    const double p50 = lo + 0.50 * span;
    const double p85 = lo + 0.85 * span;
    LinguisticVariable var;
    var.name = name;
    var.lo = lo;
    var.hi = hi;
    var.sets[0] = {labels[0], lo, lo, p15, p50};
    var.sets[1] = {labels[1], p15, p50, p50, p85};
    var.sets[2] = {labels[2], p50, p85, hi, hi};
    validate_variable(var);
    return var;
}

void validate_variable(const LinguisticVariable& var) {
    if (!(var.lo < var.hi))
        throw Error("variable '" + var.name + "': universe lo must be < hi");
    for (const auto& s : var.sets) {
        if (!(s.a <= s.b && s.b <= s.c && s.c <= s.d))
            throw Error("variable '" + var.name + "', set '" + s.label +
                        "': breakpoints must be non-decreasing");
    }
    // Overlap rule: the low set must end exactly where the high set starts.
    if (var.sets[0].d != var.sets[2].a)
        throw Error("variable '" + var.name +
                    "': endpoint of first set must equal start of third set");

    // Coverage: membership of some set must be positive everywhere on the
    // universe. Piecewise linearity makes it enough to check every breakpoint
    // and the midpoint of every interval between consecutive breakpoints.
    std::vector<double> xs{var.lo, var.hi};
    for (const auto& s : var.sets)
        for (double p : {s.a, s.b, s.c, s.d})
            if (p >= var.lo && p <= var.hi) xs.push_back(p);
    std::sort(xs.begin(), xs.end());
    std::vector<double> probes = xs;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        probes.push_back(0.5 * (xs[i] + xs[i + 1]));
    for (double x : probes) {
        const auto deg = fuzzify(var, x);
        if (std::max({deg[0], deg[1], deg[2]}) <= 0.0)
            throw Error("variable '" + var.name + "': universe not covered at x=" +
                        std::to_string(x));
    }
}

}  // namespace schedlab::fuzzy
