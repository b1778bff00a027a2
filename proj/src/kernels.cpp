#include "rcpsdp/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace rcpsdp::kernels {

namespace {

void axpy_scalar(double* y, const double* x, double a, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
        y[i] += a * x[i];
}

void axpy4_scalar(double* y, const double* x0, const double* x1,
                  const double* x2, const double* x3, const double* a,
                  std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
        y[i] += a[0] * x0[i] + a[1] * x1[i] + a[2] * x2[i] + a[3] * x3[i];
}

void assign_axpy_scalar(double* dst, const double* a, const double* b,
                        double s, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
        dst[i] = a[i] + s * b[i];
}

double dot_scalar(const double* a, const double* b, std::size_t len) {
    double acc = 0.0;
    for (std::size_t i = 0; i < len; ++i)
        acc += a[i] * b[i];
    return acc;
}

double sumsq_scalar(const double* a, std::size_t len) {
    double acc = 0.0;
    for (std::size_t i = 0; i < len; ++i)
        acc += a[i] * a[i];
    return acc;
}

const Ops k_scalar = {axpy_scalar, axpy4_scalar, assign_axpy_scalar,
                      dot_scalar, sumsq_scalar};

} // namespace

const Ops& scalar_ops() { return k_scalar; }

#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops(); // kernels_avx2.cpp

static bool cpu_has_avx2() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#else
static bool cpu_has_avx2() { return false; }
#endif

namespace {

struct Dispatch {
    const Ops* ops;
    Isa isa;
};

Dispatch pick_default() {
#if defined(__x86_64__) || defined(_M_X64)
    const char* env = std::getenv("RCPSDP_ISA");
    if (env && std::strcmp(env, "scalar") == 0)
        return {&k_scalar, Isa::scalar};
    if (cpu_has_avx2() && !(env && std::strcmp(env, "avx2") != 0))
        return {&avx2_ops(), Isa::avx2};
#endif
    return {&k_scalar, Isa::scalar};
}

Dispatch& dispatch() {
    static Dispatch d = pick_default();
    return d;
}

} // namespace

const Ops& active() { return *dispatch().ops; }

Isa active_isa() { return dispatch().isa; }

bool isa_available(Isa isa) {
    if (isa == Isa::scalar)
        return true;
#if defined(__x86_64__) || defined(_M_X64)
    return cpu_has_avx2();
#else
    return false;
#endif
}

bool set_isa(Isa isa) {
    if (!isa_available(isa))
        return false;
    if (isa == Isa::scalar) {
        dispatch() = {&k_scalar, Isa::scalar};
        return true;
    }
#if defined(__x86_64__) || defined(_M_X64)
    dispatch() = {&avx2_ops(), Isa::avx2};
    return true;
#else
    return false;
#endif
}

std::string isa_name(Isa isa) {
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    }
    return "?";
}

} // namespace rcpsdp::kernels
