#include <cstdlib>
#include <cstring>

#include "grhcheck/simd/reduce.hpp"

namespace grhcheck::simd {

bool avx2_available() noexcept {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa active_isa() noexcept {
  static const Isa isa = [] {
    const char* forced = std::getenv("GRHCHECK_ISA");
    if (forced && std::strcmp(forced, "scalar") == 0) return Isa::Scalar;
    return avx2_available() ? Isa::Avx2 : Isa::Scalar;
  }();
  return isa;
}

std::string_view isa_name(Isa isa) noexcept { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

double dot(std::span<const double> a, std::span<const double> b) noexcept {
#if defined(__x86_64__)
  if (active_isa() == Isa::Avx2) return avx2::dot(a, b);
#endif
  return scalar::dot(a, b);
}

double affine_dot(std::span<const double> a, std::span<const double> b, std::span<const double> c, double alpha) noexcept {
#if defined(__x86_64__)
  if (active_isa() == Isa::Avx2) return avx2::affine_dot(a, b, c, alpha);
#endif
  return scalar::affine_dot(a, b, c, alpha);
}

double affine_sum(std::span<const double> a, std::span<const double> c, double alpha) noexcept {
#if defined(__x86_64__)
  if (active_isa() == Isa::Avx2) return avx2::affine_sum(a, c, alpha);
#endif
  return scalar::affine_sum(a, c, alpha);
}

}  // namespace grhcheck::simd
