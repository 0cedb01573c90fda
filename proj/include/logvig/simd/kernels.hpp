#pragma once

#include <cstddef>
#include <string>

namespace logvig::simd {

// Elementwise kernel table over contiguous arrays. In-place use (dst == a or
// dst == b) is allowed. Backends must be bit-identical: per-element operation
// sequences match the scalar reference exactly (no FMA, no reassociation), so
// max() resolves ties as (a > b ? a : b) in every backend.
template <class T>
struct Kernels {
    void (*add)(T* dst, const T* a, const T* b, std::size_t n);
    void (*sub)(T* dst, const T* a, const T* b, std::size_t n);
    void (*mul)(T* dst, const T* a, const T* b, std::size_t n);
    void (*max)(T* dst, const T* a, const T* b, std::size_t n);
    // dst += alpha * x
    void (*axpy)(T* dst, const T* x, T alpha, std::size_t n);
    // dst = x * scale + shift
    void (*affine)(T* dst, const T* x, T scale, T shift, std::size_t n);
};

// Active backend, chosen once per process: AVX2 when the CPU supports it,
// unless the LOGVIG_SIMD env var ("scalar" | "avx2") overrides the choice.
template <class T> const Kernels<T>& kernels();

// Scalar reference table, always available (equivalence oracle for the rest).
template <class T> const Kernels<T>& scalar_kernels();

const std::string& active_backend();
bool avx2_available();

}  // namespace logvig::simd
