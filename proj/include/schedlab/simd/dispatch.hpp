#pragma once

#include <string>

namespace schedlab::simd {

/// Kernel backends for the fuzzy inference batch path. `scalar` is the
/// reference implementation; `avx2` must produce bit-identical results
/// (enforced by the equivalence test suite).
enum class Backend { scalar, avx2 };

/// True when the binary carries the AVX2 kernel and the CPU supports it.
bool avx2_supported();

/// Best backend available on this machine.
Backend detect_backend();

/// Process-wide backend used by default. Initialized lazily to
/// detect_backend(); overridable via set_active_backend (CLI --simd flag).
Backend active_backend();

/// Throws schedlab::Error when an unavailable backend is requested.
void set_active_backend(Backend b);

/// Parses "auto" | "scalar" | "avx2".
Backend backend_from_string(const std::string& name);

const char* to_string(Backend b);

}  // namespace schedlab::simd
