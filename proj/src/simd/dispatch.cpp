#include "schedlab/simd/dispatch.hpp"

#include <atomic>

#include "schedlab/common.hpp"

namespace schedlab::simd {

bool avx2_supported() {
#if defined(SCHEDLAB_HAVE_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend detect_backend() {
    return avx2_supported() ? Backend::avx2 : Backend::scalar;
}

namespace {
std::atomic<Backend>& active_slot() {
    static std::atomic<Backend> slot{detect_backend()};
    return slot;
}
}  // namespace

Backend active_backend() { return active_slot().load(); }

void set_active_backend(Backend b) {
    if (b == Backend::avx2 && !avx2_supported())
        throw Error("simd backend 'avx2' is not available on this machine");
    active_slot().store(b);
}

Backend backend_from_string(const std::string& name) {
    if (name == "auto") return detect_backend();
    if (name == "scalar") return Backend::scalar;
    if (name == "avx2") return Backend::avx2;
    throw Error("unknown simd backend '" + name + "' (expected auto|scalar|avx2)");
}

const char* to_string(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

}  // namespace schedlab::simd
