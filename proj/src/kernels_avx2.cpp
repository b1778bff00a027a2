// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma and must only be reached through the runtime dispatch in
// kernels.cpp after the CPU check.

#if defined(__x86_64__) || defined(_M_X64)

#include "rcpsdp/kernels.hpp"

#include <immintrin.h>

namespace rcpsdp::kernels {

namespace {

void axpy_avx2(double* y, const double* x, double a, std::size_t len) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256d y0 = _mm256_loadu_pd(y + i);
        __m256d y1 = _mm256_loadu_pd(y + i + 4);
        y0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), y0);
        y1 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i + 4), y1);
        _mm256_storeu_pd(y + i, y0);
        _mm256_storeu_pd(y + i + 4, y1);
    }
    for (; i + 4 <= len; i += 4) {
        __m256d y0 = _mm256_loadu_pd(y + i);
        y0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), y0);
        _mm256_storeu_pd(y + i, y0);
    }
    for (; i < len; ++i)
        y[i] += a * x[i];
}

void axpy4_avx2(double* y, const double* x0, const double* x1,
                const double* x2, const double* x3, const double* a,
                std::size_t len) {
    const __m256d a0 = _mm256_set1_pd(a[0]);
    const __m256d a1 = _mm256_set1_pd(a[1]);
    const __m256d a2 = _mm256_set1_pd(a[2]);
    const __m256d a3 = _mm256_set1_pd(a[3]);
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        __m256d acc = _mm256_loadu_pd(y + i);
        acc = _mm256_fmadd_pd(a0, _mm256_loadu_pd(x0 + i), acc);
        acc = _mm256_fmadd_pd(a1, _mm256_loadu_pd(x1 + i), acc);
        acc = _mm256_fmadd_pd(a2, _mm256_loadu_pd(x2 + i), acc);
        acc = _mm256_fmadd_pd(a3, _mm256_loadu_pd(x3 + i), acc);
        _mm256_storeu_pd(y + i, acc);
    }
    for (; i < len; ++i)
        y[i] += a[0] * x0[i] + a[1] * x1[i] + a[2] * x2[i] + a[3] * x3[i];
}

void assign_axpy_avx2(double* dst, const double* a, const double* b,
                      double s, std::size_t len) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256d r0 = _mm256_fmadd_pd(vs, _mm256_loadu_pd(b + i),
                                     _mm256_loadu_pd(a + i));
        __m256d r1 = _mm256_fmadd_pd(vs, _mm256_loadu_pd(b + i + 4),
                                     _mm256_loadu_pd(a + i + 4));
        _mm256_storeu_pd(dst + i, r0);
        _mm256_storeu_pd(dst + i + 4, r1);
    }
    for (; i + 4 <= len; i += 4) {
        __m256d r0 = _mm256_fmadd_pd(vs, _mm256_loadu_pd(b + i),
                                     _mm256_loadu_pd(a + i));
        _mm256_storeu_pd(dst + i, r0);
    }
    for (; i < len; ++i)
        dst[i] = a[i] + s * b[i];
}

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

double dot_avx2(const double* a, const double* b, std::size_t len) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i),
                               _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4),
                               _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= len; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i),
                               _mm256_loadu_pd(b + i), acc0);
    double r = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < len; ++i)
        r += a[i] * b[i];
    return r;
}

double sumsq_avx2(const double* a, std::size_t len) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        __m256d v = _mm256_loadu_pd(a + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double r = hsum(acc);
    for (; i < len; ++i)
        r += a[i] * a[i];
    return r;
}

const Ops k_avx2 = {axpy_avx2, axpy4_avx2, assign_axpy_avx2, dot_avx2,
                    sumsq_avx2};

} // namespace

const Ops& avx2_ops() { return k_avx2; }

} // namespace rcpsdp::kernels

#endif // x86-64
