#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <mutex>

#include "greencut/kernels.hpp"

namespace greencut::kernels {

namespace {

using SecularFn = SecularSums (*)(std::span<const double>, std::span<const double>, double);
using PhasorFn = std::complex<double> (*)(std::span<const double>, std::span<const double>,
                                          double);

struct Backend {
    const char* name;
    SecularFn secular;
    PhasorFn phasor;
};

constexpr Backend kScalar{"scalar", secular_sums_scalar, phasor_sum_scalar};
#if defined(GREENCUT_HAVE_AVX2)
constexpr Backend kAvx2{"avx2", secular_sums_avx2, phasor_sum_avx2};
#endif

bool avx2_supported() {
#if defined(GREENCUT_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Backend* g_active = nullptr;
std::once_flag g_once;

void init_backend() {
    const char* env = std::getenv("GREENCUT_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) {
        g_active = &kScalar;
        return;
    }
#if defined(GREENCUT_HAVE_AVX2)
    if (avx2_supported()) {
        g_active = &kAvx2;
        return;
    }
#endif
    g_active = &kScalar;
}

const Backend& active() {
    std::call_once(g_once, init_backend);
    return *g_active;
}

}  // namespace

SecularSums secular_sums(std::span<const double> c, std::span<const double> w, double x) {
    return active().secular(c, w, x);
}

std::complex<double> phasor_sum(std::span<const double> a, std::span<const double> e,
                                double t) {
    // vector sin/cos range-reduction limit
    double emax = 0.0;
    for (double v : e) emax = std::max(emax, std::abs(v));
    if (std::abs(t) * emax > 1e6) return phasor_sum_scalar(a, e, t);
    return active().phasor(a, e, t);
}

const char* active_backend() { return active().name; }

bool force_backend(const char* name) {
    active();  // ensure init ran
    if (std::strcmp(name, "scalar") == 0) {
        g_active = &kScalar;
        return true;
    }
#if defined(GREENCUT_HAVE_AVX2)
    if (std::strcmp(name, "avx2") == 0 && avx2_supported()) {
        g_active = &kAvx2;
        return true;
    }
#endif
    return false;
}

}  // namespace greencut::kernels
