#include "schedlab/simd/kernels.hpp"

#include "schedlab/common.hpp"

namespace schedlab::simd {

void fuzzify_input(const PlanInput& in, double x, double deg[3]) {
    for (int l = 0; l < 3; ++l) {
        const double a = in.a[l], b = in.b[l], c = in.c[l], d = in.d[l];
        double v;
        if (x < a || x > d)
            v = 0.0;
        else if (x < b)
            v = (x - a) / (b - a);
        else if (x <= c)
            v = 1.0;
        else if (d > c)
            v = (d - x) / (d - c);
        else
            v = 1.0;
        deg[l] = v;
    }
}

std::array<double, 3> clip_levels(const InferencePlan& plan, const double* xs) {
    const std::size_t k = plan.inputs.size();
    double memb[kMaxInputs][3];
    for (std::size_t iv = 0; iv < k; ++iv) {
        const PlanInput& in = plan.inputs[iv];
        double x = xs[iv];
        x = x < in.lo ? in.lo : (x > in.hi ? in.hi : x);
        fuzzify_input(in, x, memb[iv]);
    }
    std::array<double, 3> clip{0.0, 0.0, 0.0};
    const std::uint8_t* labels = plan.rule_labels.data();
    for (std::size_t r = 0; r < plan.n_rules; ++r, labels += k) {
        double s = memb[0][labels[0]];
        for (std::size_t iv = 1; iv < k; ++iv) {
            const double m = memb[iv][labels[iv]];
            s = m < s ? m : s;
        }
        double& slot = clip[plan.rule_consequents[r]];
        slot = s > slot ? s : slot;
    }
    return clip;
}

void evaluate_batch_scalar(const InferencePlan& plan, const double* const* columns,
                           std::size_t n, double* out) {
    const std::size_t k = plan.inputs.size();
    const std::size_t R = plan.out_xs.size();
    const double* curve0 = plan.out_curves[0].data();
    const double* curve1 = plan.out_curves[1].data();
    const double* curve2 = plan.out_curves[2].data();
    const double* xs = plan.out_xs.data();

    for (std::size_t i = 0; i < n; ++i) {
        double item[kMaxInputs];
        for (std::size_t iv = 0; iv < k; ++iv) item[iv] = columns[iv][i];
        const std::array<double, 3> clip = clip_levels(plan, item);

        double num = 0.0, den = 0.0;
        for (std::size_t j = 0; j < R; ++j) {
            double y = clip[0] < curve0[j] ? clip[0] : curve0[j];
            const double y1 = clip[1] < curve1[j] ? clip[1] : curve1[j];
            y = y1 > y ? y1 : y;
            const double y2 = clip[2] < curve2[j] ? clip[2] : curve2[j];
            y = y2 > y ? y2 : y;
            num += xs[j] * y;
            den += y;
        }
        out[i] = num / den;  // den == 0 only for incomplete rule bases -> NaN
    }
}

void evaluate_batch(const InferencePlan& plan, const double* const* columns,
                    std::size_t n, double* out, Backend backend) {
    if (plan.inputs.empty() || plan.inputs.size() > kMaxInputs)
        throw Error("inference plan must have 1.." + std::to_string(kMaxInputs) +
                    " input variables");
    if (backend == Backend::avx2) {
#if defined(__x86_64__) || defined(_M_X64)
        if (avx2_supported()) {
            evaluate_batch_avx2(plan, columns, n, out);
            return;
        }
#endif
        throw Error("simd backend 'avx2' is not available on this machine");
    }
    evaluate_batch_scalar(plan, columns, n, out);
}

}  // namespace schedlab::simd
