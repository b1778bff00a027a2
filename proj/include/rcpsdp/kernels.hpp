#pragma once

#include <cstddef>
#include <string>

namespace rcpsdp::kernels {

// Flat arithmetic kernels behind the matrix evaluation hot path. Each op has
// a scalar reference implementation and (on x86-64) an AVX2+FMA variant; the
// active set is chosen once at startup from CPU capabilities and can be
// forced with set_isa() or the RCPSDP_ISA environment variable
// ("scalar" / "avx2"). SIMD variants must agree with the scalar reference to
// relative 1e-13 (they reassociate sums), which the unit tests enforce.

enum class Isa { scalar, avx2 };

struct Ops {
    // y += a * x
    void (*axpy)(double* y, const double* x, double a, std::size_t len);
    // y += a0*x0 + a1*x1 + a2*x2 + a3*x3
    void (*axpy4)(double* y, const double* x0, const double* x1,
                  const double* x2, const double* x3, const double* a,
                  std::size_t len);
    // dst = a + s * b
    void (*assign_axpy)(double* dst, const double* a, const double* b,
                        double s, std::size_t len);
    double (*dot)(const double* a, const double* b, std::size_t len);
    double (*sumsq)(const double* a, std::size_t len);
};

const Ops& scalar_ops();

/// Kernels selected for the current process (never null).
const Ops& active();

Isa active_isa();
bool isa_available(Isa isa);

/// Force a kernel set; returns false if unavailable on this CPU.
bool set_isa(Isa isa);

std::string isa_name(Isa isa);

} // namespace rcpsdp::kernels
