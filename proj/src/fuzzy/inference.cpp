#include "schedlab/fuzzy/inference.hpp"

#include <cmath>
#include <set>

#include "schedlab/common.hpp"

namespace schedlab::fuzzy {

double defuzzify_centroid(const SampledCurve& region) {
    if (region.values.size() < 3)
        throw Error("defuzzify: region must have at least 3 samples");
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < region.values.size(); ++j) {
        const double y = region.values[j];
        num += region.x_at(j) * y;
        den += y;
    }
    if (den == 0.0) throw Error("defuzzify: empty output region");
    return num / den;
}

InferenceSystem::InferenceSystem(std::vector<LinguisticVariable> inputs,
                                 LinguisticVariable output,
                                 std::vector<FuzzyRule> rules, int resolution)
    : inputs_(std::move(inputs)),
      output_(std::move(output)),
      rules_(std::move(rules)),
      resolution_(resolution) {
    if (inputs_.empty() || inputs_.size() > simd::kMaxInputs)
        throw Error("inference system must have 1.." +
                    std::to_string(simd::kMaxInputs) + " input variables");
    if (resolution_ < 3) throw Error("inference resolution must be >= 3");
    for (const auto& v : inputs_) validate_variable(v);
    validate_variable(output_);

    // Rule base must be complete: exactly one rule per label combination.
    std::size_t expected = 1;
    for (std::size_t i = 0; i < inputs_.size(); ++i) expected *= 3;
    if (rules_.size() != expected)
        throw Error("rule base has " + std::to_string(rules_.size()) +
                    " rules, expected " + std::to_string(expected));
    std::set<std::vector<std::uint8_t>> seen;
    for (const auto& r : rules_) {
        if (r.antecedent.size() != inputs_.size())
            throw Error("rule antecedent arity mismatch");
        for (auto l : r.antecedent)
            if (l > 2) throw Error("rule antecedent label index out of range");
        if (r.consequent > 2) throw Error("rule consequent label index out of range");
        if (!seen.insert(r.antecedent).second)
            throw Error("duplicate rule for one antecedent combination");
    }

    // Flatten into the kernel plan and sample the output curves once.
    plan_.inputs.resize(inputs_.size());
    for (std::size_t iv = 0; iv < inputs_.size(); ++iv) {
        auto& pi = plan_.inputs[iv];
        pi.lo = inputs_[iv].lo;
        pi.hi = inputs_[iv].hi;
        for (int l = 0; l < 3; ++l) {
            const FuzzySet& s = inputs_[iv].sets[l];
            pi.a[l] = s.a;
            pi.b[l] = s.b;
            pi.c[l] = s.c;
            pi.d[l] = s.d;
        }
    }
    plan_.n_rules = rules_.size();
    plan_.rule_labels.reserve(rules_.size() * inputs_.size());
    plan_.rule_consequents.reserve(rules_.size());
    for (const auto& r : rules_) {
        plan_.rule_labels.insert(plan_.rule_labels.end(), r.antecedent.begin(),
                                 r.antecedent.end());
        plan_.rule_consequents.push_back(r.consequent);
    }
    const std::size_t R = static_cast<std::size_t>(resolution_);
    const double step = (output_.hi - output_.lo) / static_cast<double>(R - 1);
    plan_.out_xs.resize(R);
    for (std::size_t j = 0; j < R; ++j)
        plan_.out_xs[j] = output_.lo + step * static_cast<double>(j);
    for (int l = 0; l < 3; ++l) {
        plan_.out_curves[l].resize(R);
        for (std::size_t j = 0; j < R; ++j)
            plan_.out_curves[l][j] = membership(output_.sets[l], plan_.out_xs[j]);
    }
}

void InferenceSystem::check_arity(std::size_t got) const {
    if (got != inputs_.size())
        throw Error("inference input arity mismatch: got " + std::to_string(got) +
                    ", expected " + std::to_string(inputs_.size()));
}

std::array<double, 3> InferenceSystem::clip_levels(std::span<const double> xs) const {
    check_arity(xs.size());
    return simd::clip_levels(plan_, xs.data());
}

SampledCurve InferenceSystem::infer(std::span<const double> xs) const {
    const auto clip = clip_levels(xs);
    SampledCurve region;
    region.lo = output_.lo;
    region.hi = output_.hi;
    region.values.resize(plan_.out_xs.size());
    for (std::size_t j = 0; j < region.values.size(); ++j) {
        double y = clip[0] < plan_.out_curves[0][j] ? clip[0] : plan_.out_curves[0][j];
        const double y1 =
            clip[1] < plan_.out_curves[1][j] ? clip[1] : plan_.out_curves[1][j];
        y = y1 > y ? y1 : y;
        const double y2 =
            clip[2] < plan_.out_curves[2][j] ? clip[2] : plan_.out_curves[2][j];
        y = y2 > y ? y2 : y;
        region.values[j] = y;
    }
    return region;
}

double InferenceSystem::evaluate(std::span<const double> xs) const {
    check_arity(xs.size());
    const double* cols[simd::kMaxInputs];
    for (std::size_t iv = 0; iv < inputs_.size(); ++iv) cols[iv] = &xs[iv];
    double out = 0.0;
    simd::evaluate_batch_scalar(plan_, cols, 1, &out);
    if (std::isnan(out)) throw Error("defuzzify: empty output region");
    return out;
}

void InferenceSystem::evaluate_batch(const double* const* columns, std::size_t n,
                                     double* out, simd::Backend backend) const {
    simd::evaluate_batch(plan_, columns, n, out, backend);
}

}  // namespace schedlab::fuzzy
