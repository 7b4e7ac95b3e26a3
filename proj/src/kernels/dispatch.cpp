#include "newton_mu/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace newton_mu::kernels {

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa chosen = [] {
    if (const char* env = std::getenv("NEWTON_MU_SIMD"); env && std::string_view(env) == "scalar")
      return Isa::Scalar;
    return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
  }();
  return chosen;
}

void dot(const LatticeBlock& block, std::span<const std::int64_t> w, std::span<std::int64_t> out) {
  if (active_isa() == Isa::Avx2) {
    dot_avx2(block, w, out);
  } else {
    dot_scalar(block, w, out);
  }
}

}  // namespace newton_mu::kernels
