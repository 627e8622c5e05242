#pragma once

// Compensated reductions over contiguous double arrays.
//
// Every kernel exists as a portable scalar reference and, on x86-64, an AVX2+FMA
// variant compiled in its own translation unit. The public entry points dispatch
// once at first use based on CPUID; GRHCHECK_ISA=scalar in the environment pins
// the scalar path. Both variants use the same twice-working-precision dot
// (TwoProduct via FMA, TwoSum accumulation) and differ only in summation order.

#include <span>
#include <string_view>

namespace grhcheck::simd {

enum class Isa { Scalar, Avx2 };

Isa active_isa() noexcept;
std::string_view isa_name(Isa isa) noexcept;
bool avx2_available() noexcept;

/// sum a[i] * b[i]
double dot(std::span<const double> a, std::span<const double> b) noexcept;
/// sum a[i] * b[i] * (alpha - c[i])
double affine_dot(std::span<const double> a, std::span<const double> b, std::span<const double> c, double alpha) noexcept;
/// sum a[i] * (alpha - c[i])
double affine_sum(std::span<const double> a, std::span<const double> c, double alpha) noexcept;

namespace scalar {
double dot(std::span<const double> a, std::span<const double> b) noexcept;
double affine_dot(std::span<const double> a, std::span<const double> b, std::span<const double> c, double alpha) noexcept;
double affine_sum(std::span<const double> a, std::span<const double> c, double alpha) noexcept;
}  // namespace scalar

#if defined(__x86_64__)
namespace avx2 {
double dot(std::span<const double> a, std::span<const double> b) noexcept;
double affine_dot(std::span<const double> a, std::span<const double> b, std::span<const double> c, double alpha) noexcept;
double affine_sum(std::span<const double> a, std::span<const double> c, double alpha) noexcept;
}  // namespace avx2
#endif

}  // namespace grhcheck::simd
