#include "logvig/simd/kernels.hpp"

namespace logvig::simd {

namespace {

template <class T>
void add_scalar(T* dst, const T* a, const T* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] + b[i];
}

template <class T>
void sub_scalar(T* dst, const T* a, const T* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] - b[i];
}

template <class T>
void mul_scalar(T* dst, const T* a, const T* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] * b[i];
}

template <class T>
void max_scalar(T* dst, const T* a, const T* b, std::size_t n) {
    // (a > b ? a : b) mirrors the vmaxp[sd] tie rule exactly.
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] > b[i] ? a[i] : b[i];
}

template <class T>
void axpy_scalar(T* dst, const T* x, T alpha, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = dst[i] + alpha * x[i];
}

template <class T>
void affine_scalar(T* dst, const T* x, T scale, T shift, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = x[i] * scale + shift;
}

template <class T>
constexpr Kernels<T> make_scalar_table() {
    return Kernels<T>{add_scalar<T>, sub_scalar<T>,  mul_scalar<T>,
                      max_scalar<T>, axpy_scalar<T>, affine_scalar<T>};
}

}  // namespace

template <> const Kernels<float>& scalar_kernels<float>() {
    static const Kernels<float> table = make_scalar_table<float>();
    return table;
}

template <> const Kernels<double>& scalar_kernels<double>() {
    static const Kernels<double> table = make_scalar_table<double>();
    return table;
}

}  // namespace logvig::simd
