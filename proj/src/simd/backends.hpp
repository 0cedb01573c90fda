#pragma once

#include "logvig/simd/kernels.hpp"

namespace logvig::simd::detail {

bool cpu_has_avx2();

// nullptr when the AVX2 backend is not compiled for this architecture.
template <class T> const Kernels<T>* avx2_table();

}  // namespace logvig::simd::detail
