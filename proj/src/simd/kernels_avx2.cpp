// AVX2 variant of the batch inference kernel. Four items per pass, inputs in
// structure-of-arrays form. Every lane performs the same IEEE operations as
// one pass of evaluate_batch_scalar: clamp, slope divisions, min/max folds
// and the sequential centroid accumulation over the output samples, so the
// two backends agree bit-for-bit (see the kernel equivalence tests).
//
// Slope divisions are computed unconditionally; degenerate shoulder sets
// (b == a or d == c) produce inf/NaN lanes that the blend masks discard
// before they can reach a min/max.

#include "schedlab/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace schedlab::simd {

namespace {

inline __m256d membership4(__m256d x, double A, double B, double C, double D) {
    const __m256d a = _mm256_set1_pd(A);
    const __m256d b = _mm256_set1_pd(B);
    const __m256d c = _mm256_set1_pd(C);
    const __m256d d = _mm256_set1_pd(D);

    const __m256d inside =
        _mm256_and_pd(_mm256_cmp_pd(x, a, _CMP_GE_OQ), _mm256_cmp_pd(x, d, _CMP_LE_OQ));
    const __m256d on_rise = _mm256_and_pd(inside, _mm256_cmp_pd(x, b, _CMP_LT_OQ));
    __m256d on_fall = _mm256_and_pd(inside, _mm256_cmp_pd(x, c, _CMP_GT_OQ));
    if (!(D > C)) on_fall = _mm256_setzero_pd();

    const __m256d rise = _mm256_div_pd(_mm256_sub_pd(x, a), _mm256_sub_pd(b, a));
    const __m256d fall = _mm256_div_pd(_mm256_sub_pd(d, x), _mm256_sub_pd(d, c));

    __m256d v = _mm256_and_pd(inside, _mm256_set1_pd(1.0));
    v = _mm256_blendv_pd(v, rise, on_rise);
    v = _mm256_blendv_pd(v, fall, on_fall);
    return v;
}

}  // namespace

void evaluate_batch_avx2(const InferencePlan& plan, const double* const* columns,
                         std::size_t n, double* out) {
    const std::size_t k = plan.inputs.size();
    const std::size_t R = plan.out_xs.size();
    const std::size_t n4 = n & ~std::size_t(3);

    const double* curve0 = plan.out_curves[0].data();
    const double* curve1 = plan.out_curves[1].data();
    const double* curve2 = plan.out_curves[2].data();
    const double* xs = plan.out_xs.data();

    for (std::size_t i = 0; i < n4; i += 4) {
        __m256d memb[kMaxInputs][3];
        for (std::size_t iv = 0; iv < k; ++iv) {
            const PlanInput& in = plan.inputs[iv];
            __m256d x = _mm256_loadu_pd(columns[iv] + i);
            x = _mm256_max_pd(x, _mm256_set1_pd(in.lo));
            x = _mm256_min_pd(x, _mm256_set1_pd(in.hi));
            for (int l = 0; l < 3; ++l)
                memb[iv][l] = membership4(x, in.a[l], in.b[l], in.c[l], in.d[l]);
        }

        __m256d clip[3] = {_mm256_setzero_pd(), _mm256_setzero_pd(),
                           _mm256_setzero_pd()};
        const std::uint8_t* labels = plan.rule_labels.data();
        for (std::size_t r = 0; r < plan.n_rules; ++r, labels += k) {
            __m256d s = memb[0][labels[0]];
            for (std::size_t iv = 1; iv < k; ++iv)
                s = _mm256_min_pd(s, memb[iv][labels[iv]]);
            const std::uint8_t cons = plan.rule_consequents[r];
            clip[cons] = _mm256_max_pd(clip[cons], s);
        }

        __m256d num = _mm256_setzero_pd();
        __m256d den = _mm256_setzero_pd();
        for (std::size_t j = 0; j < R; ++j) {
            __m256d y = _mm256_min_pd(clip[0], _mm256_set1_pd(curve0[j]));
            y = _mm256_max_pd(y, _mm256_min_pd(clip[1], _mm256_set1_pd(curve1[j])));
            y = _mm256_max_pd(y, _mm256_min_pd(clip[2], _mm256_set1_pd(curve2[j])));
            num = _mm256_add_pd(num, _mm256_mul_pd(_mm256_set1_pd(xs[j]), y));
            den = _mm256_add_pd(den, y);
        }
        _mm256_storeu_pd(out + i, _mm256_div_pd(num, den));
    }

    if (n4 < n) {
        const double* tail[kMaxInputs];
        for (std::size_t iv = 0; iv < k; ++iv) tail[iv] = columns[iv] + n4;
        evaluate_batch_scalar(plan, tail, n - n4, out + n4);
    }
}

}  // namespace schedlab::simd

#endif  // x86_64
