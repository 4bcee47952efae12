#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "schedlab/simd/dispatch.hpp"

namespace schedlab::simd {

// Flattened, structure-of-arrays form of one Mamdani inference system,
// prepared once so the batch kernels touch only plain arrays. Both kernels
// evaluate, per item:
//
//   1. clamp each input to its universe and fuzzify it against 3 sets,
//   2. per rule, firing strength = min over the rule's antecedent degrees,
//      folded into a max per consequent label (3 clip levels),
//   3. centroid of max_label(min(clip[label], out_curve[label][j])) over the
//      precomputed output samples.
//
// The scalar and AVX2 paths perform the identical sequence of IEEE
// operations per item (same clamp, same divisions, same min/max and
// accumulation order), so their outputs are required to match bit-for-bit.
// The library is built with -ffp-contract=off to keep the compiler from
// fusing the scalar accumulation into FMA and breaking that contract.

inline constexpr std::size_t kMaxInputs = 4;

struct PlanInput {
    double lo = 0, hi = 1;                // universe clamp bounds
    std::array<double, 3> a{}, b{}, c{}, d{};  // breakpoints per label
};

struct InferencePlan {
    std::vector<PlanInput> inputs;
    std::size_t n_rules = 0;
    std::vector<std::uint8_t> rule_labels;      // n_rules * inputs.size()
    std::vector<std::uint8_t> rule_consequents; // n_rules
    std::array<std::vector<double>, 3> out_curves;  // per label, sampled
    std::vector<double> out_xs;                 // sample positions
};

/// Membership degrees (3 labels) of one clamped input against a PlanInput.
/// Shared by plan construction and the scalar kernel.
void fuzzify_input(const PlanInput& in, double x, double deg[3]);

/// Mamdani clip levels for a single item (used by the region/inspection API).
std::array<double, 3> clip_levels(const InferencePlan& plan, const double* xs);

/// out[i] = defuzzified suitability of item i. `columns` holds one pointer
/// per input variable, each addressing n contiguous values. Items whose
/// aggregated region is identically zero yield NaN (callers validate rule
/// bases so this does not occur in normal operation).
void evaluate_batch_scalar(const InferencePlan& plan, const double* const* columns,
                           std::size_t n, double* out);

#if defined(__x86_64__) || defined(_M_X64)
void evaluate_batch_avx2(const InferencePlan& plan, const double* const* columns,
                         std::size_t n, double* out);
#endif

/// Dispatching front end. Throws schedlab::Error for an unavailable backend.
void evaluate_batch(const InferencePlan& plan, const double* const* columns,
                    std::size_t n, double* out, Backend backend);

}  // namespace schedlab::simd
