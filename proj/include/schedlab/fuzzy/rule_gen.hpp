#pragma once

#include <map>
#include <string>
#include <vector>

#include "schedlab/fuzzy/inference.hpp"

namespace schedlab::fuzzy {

/// Surplus bands mapping normalized capacity-minus-demand onto output labels.
/// s < poor_below          -> poor
/// good_low <= s <= good_high -> good
/// otherwise                -> adequate (slight deficit, or capacity overshoot
///                             above good_high: strong resources on small jobs)
struct RuleBands {
    double poor_below = -0.5;
    double good_low = -1.0 / 6.0;
    double good_high = 0.5;
};

/// Capacity surplus of one label combination: weighted resource label index
/// sum (normalized to [0,1]) minus the demand label index (normalized).
/// `resource_weights` holds one weight per input after the first; the first
/// input is always the demand (job length) variable.
double rule_surplus(const std::vector<std::uint8_t>& labels,
                    const std::vector<double>& resource_weights);

std::uint8_t consequent_for_surplus(double s, const RuleBands& bands);

/// Complete rule table (3^k rules, lexicographic over label indices with the
/// first input most significant) for a system whose inputs are
/// [demand, resource...]. Weights are looked up by resource variable name and
/// must sum to 1.
std::vector<FuzzyRule> generate_rule_table(
    const std::vector<std::string>& input_names,
    const std::map<std::string, double>& capacity_weights, const RuleBands& bands);

}  // namespace schedlab::fuzzy
