#include "schedlab/fuzzy/rule_gen.hpp"

#include <cmath>

#include "schedlab/common.hpp"

namespace schedlab::fuzzy {

double rule_surplus(const std::vector<std::uint8_t>& labels,
                    const std::vector<double>& resource_weights) {
    const double demand = static_cast<double>(labels[0]) / 2.0;
    double capacity = 0.0;
    for (std::size_t i = 0; i < resource_weights.size(); ++i)
        capacity += resource_weights[i] * static_cast<double>(labels[i + 1]);
    return capacity / 2.0 - demand;
}

std::uint8_t consequent_for_surplus(double s, const RuleBands& bands) {
    if (s < bands.poor_below) return 0;                       // poor
    if (s >= bands.good_low && s <= bands.good_high) return 2;  // good
    return 1;                                                 // adequate
}

std::vector<FuzzyRule> generate_rule_table(
    const std::vector<std::string>& input_names,
    const std::map<std::string, double>& capacity_weights, const RuleBands& bands) {
    if (input_names.size() < 2)
        throw Error("rule generation needs a demand variable and at least one resource");
    if (!(bands.poor_below <= bands.good_low && bands.good_low <= bands.good_high))
        throw Error("rule bands must satisfy poor_below <= good_low <= good_high");

    std::vector<double> weights;
    double sum = 0.0;
    for (std::size_t i = 1; i < input_names.size(); ++i) {
        const auto it = capacity_weights.find(input_names[i]);
        if (it == capacity_weights.end())
            throw Error("missing capacity weight for input '" + input_names[i] + "'");
        weights.push_back(it->second);
        sum += it->second;
    }
    if (std::fabs(sum - 1.0) > 1e-9)
        throw Error("capacity weights must sum to 1 (got " + std::to_string(sum) + ")");

    const std::size_t k = input_names.size();
    std::size_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= 3;

    std::vector<FuzzyRule> rules;
    rules.reserve(count);
    for (std::size_t r = 0; r < count; ++r) {
        FuzzyRule rule;
        rule.antecedent.resize(k);
        std::size_t rem = r;
        for (std::size_t i = k; i-- > 0;) {
            rule.antecedent[i] = static_cast<std::uint8_t>(rem % 3);
            rem /= 3;
        }
        rule.consequent = consequent_for_surplus(rule_surplus(rule.antecedent, weights), bands);
        rules.push_back(std::move(rule));
    }
    return rules;
}

}  // namespace schedlab::fuzzy
