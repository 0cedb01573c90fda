#include "logvig/simd/kernels.hpp"

#include <cstdlib>

#include "backends.hpp"

namespace logvig::simd {

namespace {

struct Choice {
    std::string name;
    bool use_avx2;
};

const Choice& choice() {
    static const Choice c = [] {
        bool want_avx2 = detail::cpu_has_avx2();
        if (const char* env = std::getenv("LOGVIG_SIMD")) {
            std::string v(env);
            if (v == "scalar") want_avx2 = false;
            // "avx2" keeps the auto choice; it cannot enable an unsupported ISA.
        }
        if (want_avx2 && detail::avx2_table<double>() == nullptr) want_avx2 = false;
        return Choice{want_avx2 ? "avx2" : "scalar", want_avx2};
    }();
    return c;
}

}  // namespace

bool avx2_available() { return detail::cpu_has_avx2() && detail::avx2_table<double>() != nullptr; }

const std::string& active_backend() { return choice().name; }

template <> const Kernels<double>& kernels<double>() {
    return choice().use_avx2 ? *detail::avx2_table<double>() : scalar_kernels<double>();
}

template <> const Kernels<float>& kernels<float>() {
    return choice().use_avx2 ? *detail::avx2_table<float>() : scalar_kernels<float>();
}

}  // namespace logvig::simd
