#include "backends.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace logvig::simd::detail {

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }

// All loops use unaligned load/store and a scalar tail. Accumulating ops use
// explicit mul+add (no FMA) so each lane reproduces the scalar sequence.

#define LOGVIG_AVX2 __attribute__((target("avx2")))

namespace {

LOGVIG_AVX2 void add_f64(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(dst + i, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) dst[i] = a[i] + b[i];
}

LOGVIG_AVX2 void sub_f64(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(dst + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) dst[i] = a[i] - b[i];
}

LOGVIG_AVX2 void mul_f64(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(dst + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) dst[i] = a[i] * b[i];
}

LOGVIG_AVX2 void max_f64(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(dst + i, _mm256_max_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) dst[i] = a[i] > b[i] ? a[i] : b[i];
}

LOGVIG_AVX2 void axpy_f64(double* dst, const double* x, double alpha, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
        _mm256_storeu_pd(dst + i, _mm256_add_pd(_mm256_loadu_pd(dst + i), prod));
    }
    for (; i < n; ++i) dst[i] = dst[i] + alpha * x[i];
}

LOGVIG_AVX2 void affine_f64(double* dst, const double* x, double scale, double shift, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(scale);
    const __m256d vb = _mm256_set1_pd(shift);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(dst + i, _mm256_add_pd(_mm256_mul_pd(_mm256_loadu_pd(x + i), vs), vb));
    for (; i < n; ++i) dst[i] = x[i] * scale + shift;
}

LOGVIG_AVX2 void add_f32(float* dst, const float* a, const float* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_ps(dst + i, _mm256_add_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i)));
    for (; i < n; ++i) dst[i] = a[i] + b[i];
}

LOGVIG_AVX2 void sub_f32(float* dst, const float* a, const float* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_ps(dst + i, _mm256_sub_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i)));
    for (; i < n; ++i) dst[i] = a[i] - b[i];
}

LOGVIG_AVX2 void mul_f32(float* dst, const float* a, const float* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_ps(dst + i, _mm256_mul_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i)));
    for (; i < n; ++i) dst[i] = a[i] * b[i];
}

LOGVIG_AVX2 void max_f32(float* dst, const float* a, const float* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_ps(dst + i, _mm256_max_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i)));
    for (; i < n; ++i) dst[i] = a[i] > b[i] ? a[i] : b[i];
}

LOGVIG_AVX2 void axpy_f32(float* dst, const float* x, float alpha, std::size_t n) {
    const __m256 va = _mm256_set1_ps(alpha);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 prod = _mm256_mul_ps(va, _mm256_loadu_ps(x + i));
        _mm256_storeu_ps(dst + i, _mm256_add_ps(_mm256_loadu_ps(dst + i), prod));
    }
    for (; i < n; ++i) dst[i] = dst[i] + alpha * x[i];
}

LOGVIG_AVX2 void affine_f32(float* dst, const float* x, float scale, float shift, std::size_t n) {
    const __m256 vs = _mm256_set1_ps(scale);
    const __m256 vb = _mm256_set1_ps(shift);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_ps(dst + i, _mm256_add_ps(_mm256_mul_ps(_mm256_loadu_ps(x + i), vs), vb));
    for (; i < n; ++i) dst[i] = x[i] * scale + shift;
}

const Kernels<double> avx2_f64{add_f64, sub_f64, mul_f64, max_f64, axpy_f64, affine_f64};
const Kernels<float>  avx2_f32{add_f32, sub_f32, mul_f32, max_f32, axpy_f32, affine_f32};

}  // namespace

template <> const Kernels<double>* avx2_table<double>() { return &avx2_f64; }
template <> const Kernels<float>* avx2_table<float>() { return &avx2_f32; }

}  // namespace logvig::simd::detail

#else  // non-x86: scalar fallback only

namespace logvig::simd::detail {

bool cpu_has_avx2() { return false; }
template <> const Kernels<double>* avx2_table<double>() { return nullptr; }
template <> const Kernels<float>* avx2_table<float>() { return nullptr; }

}  // namespace logvig::simd::detail

#endif
