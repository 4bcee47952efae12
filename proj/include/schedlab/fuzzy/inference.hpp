#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "schedlab/fuzzy/fuzzy_set.hpp"
#include "schedlab/simd/kernels.hpp"

namespace schedlab::fuzzy {

/// One Mamdani rule: a conjunction of one set label per input variable and a
/// single output label. Labels are stored as indices into each variable's
/// three sets.
struct FuzzyRule {
    std::vector<std::uint8_t> antecedent;  // one label index per input, in input order
    std::uint8_t consequent = 0;           // label index on the output variable
};

/// Uniformly sampled membership curve over [lo, hi].
struct SampledCurve {
    double lo = 0, hi = 1;
    std::vector<double> values;

    double x_at(std::size_t i) const {
        const double step = (hi - lo) / static_cast<double>(values.size() - 1);
        return lo + step * static_cast<double>(i);
    }
};

/// Discrete centroid of a sampled region. Errors on fewer than 3 samples or
/// an identically-zero region ("empty output region").
double defuzzify_centroid(const SampledCurve& region);

/// Mamdani inference system: min conjunction, min implication, max
/// aggregation, centroid defuzzification over `resolution` uniform samples.
/// Immutable after construction; concurrent read-only use is safe.
class InferenceSystem {
public:
    InferenceSystem(std::vector<LinguisticVariable> inputs, LinguisticVariable output,
                    std::vector<FuzzyRule> rules, int resolution);

    std::size_t input_count() const { return inputs_.size(); }
    const LinguisticVariable& input(std::size_t i) const { return inputs_[i]; }
    const std::vector<LinguisticVariable>& inputs() const { return inputs_; }
    const LinguisticVariable& output() const { return output_; }
    const std::vector<FuzzyRule>& rules() const { return rules_; }
    int resolution() const { return resolution_; }
    const simd::InferencePlan& plan() const { return plan_; }

    /// Max firing strength per output label for one crisp input vector.
    std::array<double, 3> clip_levels(std::span<const double> xs) const;

    /// Aggregated output region (pointwise max of min-clipped consequents).
    SampledCurve infer(std::span<const double> xs) const;

    /// infer + centroid through the scalar kernel; bit-identical to one lane
    /// of evaluate_batch on any backend.
    double evaluate(std::span<const double> xs) const;

    /// Batch evaluation; `columns` holds one pointer per input variable.
    void evaluate_batch(const double* const* columns, std::size_t n, double* out,
                        simd::Backend backend) const;

private:
    void check_arity(std::size_t got) const;

    std::vector<LinguisticVariable> inputs_;
    LinguisticVariable output_;
    std::vector<FuzzyRule> rules_;
    int resolution_;
    simd::InferencePlan plan_;
};

}  // namespace schedlab::fuzzy
